# SPDX-License-Identifier: MPL-2.0
import os
import sys
from collections.abc import Callable

import click
from pydantic import ValidationError

from metta_kb.api import MettaRuntime
from metta_kb.config import AppConfig
from metta_kb.errors import MettaError, ParseError
from metta_kb.repl import ReplSession
from metta_kb.schema.config import CliConfig
from metta_kb.utils.log_config import get_logger, level_from_name, setup_logging

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_ERROR_RESULT = 2


@click.group()
@click.option(
    "--config-file",
    type=click.Path(exists=True, dir_okay=False),
    help="Path to a custom .env configuration file.",
)
@click.option(
    "--log-level",
    type=click.Choice(
        ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"], case_sensitive=False
    ),
    help="Set the logging level for this run.",
)
@click.pass_context
def cli(ctx: click.Context, config_file: str | None, log_level: str | None) -> None:
    """Run MeTTa programs and explore them interactively."""
    try:
        if config_file:
            os.environ["METTA_APP_ENV_FILE"] = config_file
        from metta_kb.config import load_config

        ctx.obj = {"CONFIG": load_config()}
        if log_level:
            ctx.obj["CONFIG"].app.log_level = log_level.upper()
            setup_logging(
                level=level_from_name(log_level),
                log_file=ctx.obj["CONFIG"].app.log_file_path,
            )
            logger.info(f"Log level overridden to: {log_level.upper()}")
    except MettaError as e:
        logger.critical(f"Failed to initialize CLI due to configuration error: {e}")
        click.echo(f"Error: {e}", err=True)
        ctx.exit(EXIT_FAILURE)


def evaluation_options(func: Callable) -> Callable:
    func = click.option(
        "--quiet", is_flag=True, help="Suppress the REPL banner and prompts."
    )(func)
    func = click.option(
        "--typecheck",
        is_flag=True,
        help="Type-check each directive before evaluating it.",
    )(func)
    func = click.option(
        "--max-depth",
        type=click.IntRange(min=1),
        default=None,
        help="Evaluation depth budget (default: METTA_MAX_DEPTH or 1000).",
    )(func)
    return func


def _cli_config(
    ctx: click.Context,
    mode: str,
    file: str | None,
    max_depth: int | None,
    typecheck: bool,
    quiet: bool,
) -> CliConfig:
    settings: AppConfig = ctx.obj["CONFIG"]
    if max_depth is None:
        max_depth = settings.evaluation.max_depth
    try:
        return CliConfig(
            mode=mode,
            file=file,
            max_depth=max_depth,
            typecheck=typecheck or settings.evaluation.typecheck,
            quiet=quiet,
        )
    except ValidationError as e:
        click.echo(f"Error: invalid options: {e}", err=True)
        ctx.exit(EXIT_FAILURE)


def _runtime(ctx: click.Context, cli_config: CliConfig) -> MettaRuntime:
    settings: AppConfig = ctx.obj["CONFIG"]
    return MettaRuntime(cli_config.eval_config(), indexed=settings.space.indexed)


@cli.command()
@click.argument("file", type=click.Path(dir_okay=False))
@evaluation_options
@click.pass_context
def run(
    ctx: click.Context,
    file: str,
    max_depth: int | None,
    typecheck: bool,
    quiet: bool,
) -> None:
    """Run a .metta program, printing one line per directive."""
    cli_config = _cli_config(ctx, "run", file, max_depth, typecheck, quiet)
    runtime = _runtime(ctx, cli_config)
    try:
        report = runtime.run_file(
            file, listener=lambda directive: click.echo(directive.line)
        )
    except ParseError as e:
        click.echo(f"Parse error in {file}: {e}", err=True)
        ctx.exit(EXIT_FAILURE)
    except MettaError as e:
        click.echo(f"Error: {e.message}", err=True)
        ctx.exit(EXIT_FAILURE)
    ctx.exit(EXIT_ERROR_RESULT if report.has_errors else EXIT_OK)


@cli.command()
@evaluation_options
@click.pass_context
def repl(
    ctx: click.Context, max_depth: int | None, typecheck: bool, quiet: bool
) -> None:
    """Start an interactive session; every entered form is evaluated."""
    cli_config = _cli_config(ctx, "repl", None, max_depth, typecheck, quiet)
    stdin = click.get_text_stream("stdin")
    session = ReplSession(
        _runtime(ctx, cli_config),
        show_prompt=stdin.isatty(),
        quiet=cli_config.quiet,
    )
    ctx.exit(session.run(stdin))


def main() -> None:
    """Console entry point; usage errors exit with status 1."""
    try:
        code = cli.main(standalone_mode=False)
    except click.ClickException as e:
        e.show()
        sys.exit(EXIT_FAILURE)
    except click.exceptions.Abort:
        click.echo("Aborted!", err=True)
        sys.exit(EXIT_FAILURE)
    sys.exit(code if isinstance(code, int) else EXIT_OK)


if __name__ == "__main__":
    main()
