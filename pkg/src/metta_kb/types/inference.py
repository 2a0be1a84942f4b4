# SPDX-License-Identifier: MPL-2.0
"""Gradual dependent type inference over ``(: subject type)`` declarations.

Types are ordinary atoms. An application ``(f a1 ... an)`` is typed by
unifying each parameter of an arrow type ``(-> P1 ... Pn R)`` of ``f`` with
an inferred type of the matching argument; ``%Undefined%`` is compatible
with every type. Type expressions are never evaluated.
"""
from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from metta_kb.atoms.grounded import SpaceRef
from metta_kb.atoms.model import Atom, Expression, Grounded, Symbol, Variable
from metta_kb.atoms.vocabulary import (
    ARROW,
    BOOL_TYPE,
    FALSE,
    NUMBER_TYPE,
    STRING_TYPE,
    TRUE,
    TYPE_DECL,
    UNDEFINED_TYPE,
)
from metta_kb.space.atomspace import AtomSpace
from metta_kb.unify.bindings import Bindings
from metta_kb.unify.matcher import next_generation, unify

SPACE_TYPE = Symbol("SpaceType")


@dataclass(frozen=True, slots=True)
class TypeMismatch:
    """The innermost application that admits no typing.

    ``position`` is the 1-based argument that could not be typed, or ``None``
    when no arrow of the head has the application's arity.
    """

    atom: Expression
    expected: Atom
    actual: Atom | None
    position: int | None


class TypeContext:
    def __init__(self, space: AtomSpace) -> None:
        self.space = space

    def declared(self, subject: Atom) -> list[Atom]:
        """Declared types of ``subject`` in insertion order, freshly renamed."""
        slot = Variable("t", next_generation())
        pattern = Expression((TYPE_DECL, subject, slot))
        return [bindings.resolve(slot) for bindings in self.space.match(pattern)]

    def builtin(self, atom: Atom) -> Atom | None:
        if isinstance(atom, Grounded):
            value = atom.value
            if isinstance(value, int | float):
                return NUMBER_TYPE
            if isinstance(value, str):
                return STRING_TYPE
            if isinstance(value, SpaceRef):
                return SPACE_TYPE
            return None
        if atom in (TRUE, FALSE):
            return BOOL_TYPE
        return None

    def lookup(self, atom: Atom) -> list[Atom]:
        declared = self.declared(atom) if isinstance(atom, Symbol) else []
        if declared:
            return declared
        builtin = self.builtin(atom)
        return [builtin] if builtin is not None else [UNDEFINED_TYPE]


def is_arrow(atom: Atom) -> bool:
    return (
        isinstance(atom, Expression)
        and len(atom.children) >= 2
        and atom.children[0] == ARROW
    )


def _unify_type(param: Atom, actual: Atom, bindings: Bindings) -> Bindings | None:
    if actual == UNDEFINED_TYPE or bindings.walk(param) == UNDEFINED_TYPE:
        return bindings
    return unify(param, actual, bindings)


def _frontiers(
    params: Sequence[Atom], options: Sequence[list[Atom]]
) -> list[list[Bindings]]:
    """Bindings consistent with each prefix of the parameter list."""
    frontier = [Bindings()]
    history = [frontier]
    for param, choices in zip(params, options, strict=True):
        frontier = [
            unified
            for bindings in frontier
            for choice in choices
            if (unified := _unify_type(param, choice, bindings)) is not None
        ]
        history.append(frontier)
        if not frontier:
            break
    return history


class TypeChecker:
    def __init__(self, space: AtomSpace) -> None:
        self.context = TypeContext(space)

    def infer(self, atom: Atom) -> list[Atom]:
        if not isinstance(atom, Expression):
            if isinstance(atom, Variable):
                return [UNDEFINED_TYPE]
            return self.context.lookup(atom)
        if not atom.children:
            return [UNDEFINED_TYPE]
        arrows = [t for t in self._head_types(atom.head) if is_arrow(t)]
        if not arrows:
            return [UNDEFINED_TYPE]
        options = [self.infer(arg) for arg in atom.args]
        results: list[Atom] = []
        for arrow in arrows:
            params, ret = arrow.children[1:-1], arrow.children[-1]
            if len(params) != len(options):
                continue
            history = _frontiers(params, options)
            if len(history) == len(params) + 1:
                results.extend(bindings.resolve(ret) for bindings in history[-1])
        return results

    def _head_types(self, head: Atom) -> list[Atom]:
        if isinstance(head, Expression):
            return self.infer(head)
        return self.context.lookup(head)

    def check(self, atom: Atom) -> TypeMismatch | None:
        if not isinstance(atom, Expression) or not atom.children:
            return None
        for child in atom.children:
            mismatch = self.check(child)
            if mismatch is not None:
                return mismatch
        arrows = [t for t in self._head_types(atom.head) if is_arrow(t)]
        if not arrows or self.infer(atom):
            return None
        return self._explain(atom, arrows)

    def _explain(self, atom: Expression, arrows: list[Atom]) -> TypeMismatch:
        options = [self.infer(arg) for arg in atom.args]
        best: TypeMismatch | None = None
        for arrow in arrows:
            params = arrow.children[1:-1]
            if len(params) != len(options):
                if best is None:
                    best = TypeMismatch(atom, arrow, None, None)
                continue
            history = _frontiers(params, options)
            failed = len(history) - 1
            if best is not None and best.position is not None and best.position >= failed:
                continue
            survivors = history[failed - 1]
            expected = survivors[0].resolve(params[failed - 1])
            actual = options[failed - 1][0] if options[failed - 1] else None
            best = TypeMismatch(atom, expected, actual, failed)
        assert best is not None
        return best


def type_of(space: AtomSpace, atom: Atom) -> list[Atom]:
    return TypeChecker(space).infer(atom)


def check_atom(space: AtomSpace, atom: Atom) -> TypeMismatch | None:
    return TypeChecker(space).check(atom)
