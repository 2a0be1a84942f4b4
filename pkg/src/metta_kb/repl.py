# SPDX-License-Identifier: MPL-2.0
"""Interactive read-eval-print session.

Every entered form is evaluated as a directive. Forms may span several lines;
input is accumulated until its parentheses balance. Lines starting with ``:``
are meta-commands.
"""
from __future__ import annotations

from collections.abc import Callable
from typing import TextIO

import click

from metta_kb import __version__
from metta_kb.api import MettaRuntime
from metta_kb.errors import MettaError, ParseError
from metta_kb.reader.parser import is_incomplete
from metta_kb.schema.base import DirectiveReport
from metta_kb.utils.log_config import get_logger

logger = get_logger(__name__)

PROMPT = "metta> "
CONTINUATION = "...... "

HELP = """\
:add <forms>   store forms in the space without evaluating them
:load <file>   run a program file in this session
:space         print every atom of the space
:help          show this message
:quit          end the session"""


class ReplSession:
    def __init__(
        self, runtime: MettaRuntime, *, show_prompt: bool = False, quiet: bool = False
    ) -> None:
        self.runtime = runtime
        self.show_prompt = show_prompt and not quiet
        self.quiet = quiet
        self._buffer: list[str] = []

    @property
    def prompt(self) -> str:
        return CONTINUATION if self._buffer else PROMPT

    def banner(self) -> str:
        return f"MeTTa-KB {__version__}. Type :help for commands, :quit to leave."

    def _print_directive(self, report: DirectiveReport) -> None:
        click.echo(report.line)

    def _error(self, message: str) -> None:
        click.echo(message, err=True)

    def feed(self, line: str) -> bool:
        """Process one input line; ``False`` ends the session."""
        if not self._buffer and line.lstrip().startswith(":"):
            return self._meta(line.strip())
        self._buffer.append(line)
        text = "\n".join(self._buffer)
        if is_incomplete(text):
            return True
        self._buffer.clear()
        if text.strip():
            self._guarded(
                lambda: self.runtime.evaluate_source(
                    text, listener=self._print_directive
                )
            )
        return True

    def _guarded(self, action: Callable[[], object]) -> None:
        try:
            action()
        except ParseError as e:
            self._error(f"Parse error: {e}")
        except MettaError as e:
            self._error(f"Error: {e.message}")

    def _meta(self, command: str) -> bool:
        name, _, rest = command.partition(" ")
        rest = rest.strip()
        logger.debug(f"REPL meta-command {name}")
        if name == ":quit":
            return False
        if name == ":help":
            click.echo(HELP)
        elif name == ":space":
            listing = self.runtime.dump()
            if listing:
                click.echo(listing, nl=False)
        elif name == ":add":
            self._guarded(lambda: self.runtime.add_source(rest))
        elif name == ":load":
            if not rest:
                self._error("Usage: :load <file>")
            else:
                self._guarded(
                    lambda: self.runtime.run_file(rest, listener=self._print_directive)
                )
        else:
            self._error(f"Unknown command {name}; type :help")
        return True

    def run(self, stream: TextIO) -> int:
        if not self.quiet:
            click.echo(self.banner())
        while True:
            if self.show_prompt:
                click.echo(self.prompt, nl=False)
            line = stream.readline()
            if not line:
                break
            if not self.feed(line.rstrip("\r\n")):
                break
        if self._buffer:
            self._error("Parse error: input ended inside an unfinished form")
            self._buffer.clear()
        return 0
