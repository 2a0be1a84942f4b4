# SPDX-License-Identifier: MPL-2.0
from collections.abc import Callable, Sequence
from pathlib import Path

from metta_kb.atoms.model import Atom, render
from metta_kb.errors import ProgramIOError
from metta_kb.interpreter.evaluator import EvalResult, Interpreter
from metta_kb.interpreter.runner import DirectiveOutput, run_directive
from metta_kb.reader.parser import ProgramItem, parse_atom, parse_atoms, parse_program
from metta_kb.schema.base import DirectiveReport, ProgramReport
from metta_kb.schema.config import EvalConfig
from metta_kb.space.atomspace import AtomSpace, dump
from metta_kb.stdlib.registry import Printer, StdEnv
from metta_kb.utils.decorators import handle_errors, log_method_entry_exit
from metta_kb.utils.log_config import get_logger

logger = get_logger(__name__)

DirectiveListener = Callable[[DirectiveReport], None]


def _report(output: DirectiveOutput) -> DirectiveReport:
    return DirectiveReport(
        directive=render(output.directive),
        results=[render(atom) for atom in output.results],
        has_error=output.has_error,
    )


class MettaRuntime:
    """One program space with its standard environment and interpreter."""

    def __init__(
        self,
        config: EvalConfig | None = None,
        *,
        space: AtomSpace | None = None,
        indexed: bool = True,
        printer: Printer | None = None,
    ) -> None:
        self.config = config if config is not None else EvalConfig()
        self.space = space if space is not None else AtomSpace(indexed=indexed)
        self.env = StdEnv(self.space, printer)
        self.interpreter = Interpreter(self.space, self.config, self.env)
        logger.debug(f"MeTTa runtime initialized over {self.space!r}")

    def _execute(
        self,
        items: Sequence[ProgramItem],
        origin: str,
        listener: DirectiveListener | None,
        *,
        all_directives: bool = False,
    ) -> ProgramReport:
        report = ProgramReport(origin=origin)
        for item in items:
            if item.is_directive or all_directives:
                directive = _report(run_directive(self.interpreter, item.atom))
                report.add_directive(directive)
                if listener is not None:
                    listener(directive)
            else:
                self.space.add(item.atom)
                report.atoms_added += 1
        report.finalize()
        logger.info(
            f"Program {origin} finished with status {report.status}: "
            f"{report.atoms_added} atoms added, {len(report.directives)} directives"
        )
        return report

    @handle_errors
    @log_method_entry_exit
    def run_source(
        self,
        text: str,
        origin: str = "<string>",
        listener: DirectiveListener | None = None,
    ) -> ProgramReport:
        """Store plain forms and evaluate ``!`` directives in program order."""
        return self._execute(parse_program(text), origin, listener)

    @handle_errors
    @log_method_entry_exit
    def run_file(
        self, path: str | Path, listener: DirectiveListener | None = None
    ) -> ProgramReport:
        try:
            text = Path(path).read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as e:
            logger.error(f"Cannot read program {path}: {e}")
            raise ProgramIOError(f"Cannot read program {path}: {e}") from e
        logger.info(f"Loading program from {path}")
        return self._execute(parse_program(text), str(path), listener)

    @handle_errors
    @log_method_entry_exit
    def evaluate_source(
        self, text: str, listener: DirectiveListener | None = None
    ) -> ProgramReport:
        """Evaluate every form of ``text`` as a directive."""
        return self._execute(
            parse_program(text), "<input>", listener, all_directives=True
        )

    @handle_errors
    @log_method_entry_exit
    def add_source(self, text: str) -> int:
        """Store every form of ``text`` without evaluating anything.

        ``!`` directives are rejected with a :class:`ParseError` and nothing is
        stored.
        """
        atoms = parse_atoms(text)
        for atom in atoms:
            self.space.add(atom)
        return len(atoms)

    def evaluate(self, atom: Atom | str) -> list[EvalResult]:
        if isinstance(atom, str):
            atom = parse_atom(atom)
        return self.interpreter.evaluate(atom)

    def dump(self) -> str:
        return dump(self.space)
