# SPDX-License-Identifier: MPL-2.0
"""The calling convention between the evaluator and grounded operations."""
from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

from metta_kb.atoms.model import Atom, Expression
from metta_kb.unify.bindings import Bindings

if TYPE_CHECKING:
    from metta_kb.interpreter.evaluator import Interpreter
    from metta_kb.space.atomspace import AtomSpace
    from metta_kb.stdlib.registry import StdEnv


@dataclass(frozen=True, slots=True)
class Reduction:
    """One result of a grounded operation.

    Non-final atoms are evaluated further by the interpreter. ``bindings`` of
    ``None`` keeps the bindings the operation was called with.
    """

    atom: Atom
    bindings: Bindings | None = None
    final: bool = False


@dataclass(frozen=True, slots=True)
class GroundedCall:
    interpreter: Interpreter
    expression: Expression
    args: tuple[Atom, ...]
    bindings: Bindings
    depth: int

    @property
    def env(self) -> StdEnv:
        return self.interpreter.env

    @property
    def space(self) -> AtomSpace:
        return self.interpreter.space

    def evaluate(
        self, atom: Atom, bindings: Bindings | None = None
    ) -> list[tuple[Atom, Bindings]]:
        """Evaluate ``atom`` one level deeper than the call itself."""
        seed = bindings if bindings is not None else self.bindings
        return self.interpreter.eval_nested(atom, seed, self.depth + 1)

    def resolve_space(self, atom: Atom) -> AtomSpace | None:
        space = self.env.resolve_space(atom)
        if space is not None:
            return space
        for value, _ in self.evaluate(atom):
            space = self.env.resolve_space(value)
            if space is not None:
                return space
        return None
