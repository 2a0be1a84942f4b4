# SPDX-License-Identifier: MPL-2.0
"""Running whole programs: store plain items, evaluate directives in order."""
from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from metta_kb.atoms.model import Atom, render
from metta_kb.atoms.vocabulary import is_error, make_error
from metta_kb.errors import MettaError
from metta_kb.interpreter.evaluator import Interpreter
from metta_kb.reader.parser import ProgramItem
from metta_kb.schema.config import EvalConfig
from metta_kb.space.atomspace import AtomSpace
from metta_kb.stdlib.registry import StdEnv
from metta_kb.utils.log_config import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True, slots=True)
class DirectiveOutput:
    directive: Atom
    results: list[Atom]

    @property
    def has_error(self) -> bool:
        return any(is_error(atom) for atom in self.results)

    @property
    def line(self) -> str:
        return format_results(self.results)


def format_results(atoms: Iterable[Atom]) -> str:
    """``[a, b]``: one directive's results in evaluation order."""
    return "[" + ", ".join(render(atom) for atom in atoms) + "]"


def run_directive(interpreter: Interpreter, atom: Atom) -> DirectiveOutput:
    try:
        results = [result.atom for result in interpreter.evaluate(atom)]
    except MettaError as e:
        logger.warning(f"Directive {render(atom)} failed: {e}")
        results = [make_error(atom, e.message)]
    return DirectiveOutput(atom, results)


def run_program(
    space: AtomSpace,
    items: Sequence[ProgramItem],
    cfg: EvalConfig | None = None,
    env: StdEnv | None = None,
) -> list[DirectiveOutput]:
    interpreter = Interpreter(space, cfg, env)
    outputs: list[DirectiveOutput] = []
    for item in items:
        if item.is_directive:
            outputs.append(run_directive(interpreter, item.atom))
        else:
            space.add(item.atom)
    logger.debug(f"Ran {len(items)} items, {len(outputs)} directives")
    return outputs
