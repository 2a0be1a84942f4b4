# SPDX-License-Identifier: MPL-2.0
"""Evaluation by equality-query chaining.

An expression is evaluated children first. The rewritten candidate is either
handed to the grounded operation its head denotes, or looked up with the
query ``(= candidate $r)``; every answer for ``$r`` is evaluated further and
an empty answer set leaves the candidate as its own value. Results of all
branches are concatenated in order.
"""
from __future__ import annotations

import sys
from collections.abc import Iterator, Sequence
from contextlib import contextmanager
from dataclasses import dataclass

from metta_kb.atoms.grounded import ExecFn
from metta_kb.atoms.model import Atom, Expression, Symbol, Variable, iter_variables
from metta_kb.atoms.vocabulary import (
    EQUALS,
    STACK_OVERFLOW,
    is_error,
    make_error,
)
from metta_kb.errors import MettaError
from metta_kb.schema.config import EvalConfig
from metta_kb.space.atomspace import AtomSpace
from metta_kb.stdlib.calls import GroundedCall
from metta_kb.stdlib.registry import StdEnv
from metta_kb.types.inference import check_atom
from metta_kb.unify.bindings import Bindings
from metta_kb.unify.matcher import next_generation
from metta_kb.utils.log_config import get_logger

logger = get_logger(__name__)

Branch = tuple[Atom, Bindings]

# interpreter frames per unit of evaluation depth, with room to spare
_FRAMES_PER_LEVEL = 8
_BASE_FRAMES = 1000


@dataclass(frozen=True, slots=True)
class EvalResult:
    atom: Atom
    bindings: Bindings


@contextmanager
def recursion_headroom(max_depth: int) -> Iterator[None]:
    previous = sys.getrecursionlimit()
    needed = max_depth * _FRAMES_PER_LEVEL + _BASE_FRAMES
    if needed > previous:
        sys.setrecursionlimit(needed)
    try:
        yield
    finally:
        sys.setrecursionlimit(previous)


class Interpreter:
    def __init__(
        self,
        space: AtomSpace,
        config: EvalConfig | None = None,
        env: StdEnv | None = None,
    ) -> None:
        self.space = space
        self.config = config if config is not None else EvalConfig()
        self.env = env if env is not None else StdEnv(space)

    def evaluate(
        self, atom: Atom, bindings: Bindings | None = None
    ) -> list[EvalResult]:
        """All values of ``atom``, with bindings projected onto its variables."""
        if self.config.typecheck_enabled:
            mismatch = check_atom(self.space, atom)
            if mismatch is not None:
                logger.debug(f"Type check rejected {atom!r}: {mismatch}")
                error = make_error(mismatch.atom, mismatch.expected)
                return [EvalResult(error, Bindings())]

        variables = list(iter_variables(atom))
        with recursion_headroom(self.config.max_depth):
            try:
                branches = self._eval(atom, bindings or Bindings(), 0)
            except RecursionError:
                logger.warning(f"Host recursion limit reached evaluating {atom!r}")
                branches = [(make_error(atom, STACK_OVERFLOW), Bindings())]
            return [
                EvalResult(found.resolve(value), found.project(variables))
                for value, found in branches
            ]

    def eval_nested(self, atom: Atom, bindings: Bindings, depth: int) -> list[Branch]:
        return self._eval(atom, bindings, depth)

    def _eval(self, atom: Atom, bindings: Bindings, depth: int) -> list[Branch]:
        atom = bindings.resolve(atom)
        if depth > self.config.max_depth:
            return [(make_error(atom, STACK_OVERFLOW), bindings)]
        if isinstance(atom, Symbol):
            space_ref = self.env.space_atom(atom)
            if space_ref is not None:
                return [(space_ref, bindings)]
            if atom.name in self.env:
                return [(atom, bindings)]
            return self._reduce_by_equality(atom, bindings, depth)
        if isinstance(atom, Expression):
            return self._eval_expression(atom, bindings, depth)
        return [(atom, bindings)]

    def _eval_expression(
        self, atom: Expression, bindings: Bindings, depth: int
    ) -> list[Branch]:
        if not atom.children or is_error(atom):
            return [(atom, bindings)]
        results: list[Branch] = []
        for head, head_bindings in self._eval(atom.children[0], bindings, depth):
            if is_error(head):
                results.append((head, head_bindings))
                continue
            fn = self.env.exec_fn(head)
            if fn is not None and fn.lazy:
                args = tuple(head_bindings.resolve(arg) for arg in atom.args)
                call_expr = Expression((head, *args))
                results.extend(
                    self._apply_grounded(fn, call_expr, head_bindings, depth)
                )
                continue
            for args, found in self._eval_sequence(atom.args, head_bindings, depth):
                error = next((arg for arg in args if is_error(arg)), None)
                if error is not None:
                    results.append((error, found))
                    continue
                candidate = Expression((found.resolve(head), *args))
                if fn is not None:
                    results.extend(self._apply_grounded(fn, candidate, found, depth))
                else:
                    results.extend(self._reduce_by_equality(candidate, found, depth))
        return results

    def _eval_sequence(
        self, atoms: Sequence[Atom], bindings: Bindings, depth: int
    ) -> list[tuple[tuple[Atom, ...], Bindings]]:
        """Cartesian product of the values of ``atoms``, left to right."""
        combos: list[tuple[tuple[Atom, ...], Bindings]] = [((), bindings)]
        for atom in atoms:
            combos = [
                ((*done, value), found)
                for done, current in combos
                for value, found in self._eval(atom, current, depth)
            ]
        # earlier values may mention variables bound by later arguments
        return [
            (tuple(found.resolve(value) for value in values), found)
            for values, found in combos
        ]

    def _apply_grounded(
        self, fn: ExecFn, expression: Expression, bindings: Bindings, depth: int
    ) -> list[Branch]:
        if fn.arity is not None and len(expression.args) != fn.arity:
            return [(expression, bindings)]
        call = GroundedCall(self, expression, expression.args, bindings, depth)
        try:
            reductions = fn.func(call)
        except RecursionError:
            raise
        except MettaError as e:
            return [(make_error(expression, e.message), bindings)]
        except Exception as e:
            logger.debug(f"Grounded operation {fn.name} raised: {e}")
            return [(make_error(expression, str(e)), bindings)]
        if reductions is None:
            return [(expression, bindings)]

        results: list[Branch] = []
        for reduction in reductions:
            found = reduction.bindings if reduction.bindings is not None else bindings
            if reduction.final or is_error(reduction.atom):
                results.append((found.resolve(reduction.atom), found))
            else:
                results.extend(self._eval(reduction.atom, found, depth + 1))
        return results

    def _reduce_by_equality(
        self, candidate: Atom, bindings: Bindings, depth: int
    ) -> list[Branch]:
        slot = Variable("r", next_generation())
        query = Expression((EQUALS, candidate, slot))
        answers = list(self.space.match(query, bindings))
        if not answers:
            return [(candidate, bindings)]
        results: list[Branch] = []
        for found in answers:
            results.extend(self._eval(found.resolve(slot), found, depth + 1))
        return results
