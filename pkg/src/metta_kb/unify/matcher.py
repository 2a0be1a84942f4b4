# SPDX-License-Identifier: MPL-2.0
"""Two-sided unification with occurs-check, and variable renaming.

>>> from metta_kb.reader import parse_atom
>>> b = unify(parse_atom("(A ($a $a) A)"), parse_atom("($b (B B) $b)"))
>>> sorted(b.to_text().items())
[('$a', 'B'), ('$b', 'A')]
>>> unify(parse_atom("(A ($a $a) A)"), parse_atom("($b (B B) C)")) is None
True
"""
from __future__ import annotations

import itertools

from metta_kb.atoms.model import Atom, Expression, Variable
from metta_kb.unify.bindings import Bindings

_generations = itertools.count(1)


def next_generation() -> int:
    """A process-wide fresh scope id; scope 0 belongs to source text."""
    return next(_generations)


def unify(a: Atom, b: Atom, seed: Bindings | None = None) -> Bindings | None:
    mapping = seed.copy_map() if seed else {}
    view = Bindings._adopt(mapping)
    pending: list[tuple[Atom, Atom]] = [(a, b)]

    while pending:
        left, right = pending.pop()
        left = view.walk(left)
        right = view.walk(right)
        if left is right:
            continue
        if isinstance(left, Variable) and isinstance(right, Variable):
            if left == right:
                continue
            # the younger variable points at the older one
            if left.sort_key > right.sort_key:
                mapping[left] = right
            else:
                mapping[right] = left
        elif isinstance(left, Variable):
            if _occurs(left, right, view):
                return None
            mapping[left] = right
        elif isinstance(right, Variable):
            if _occurs(right, left, view):
                return None
            mapping[right] = left
        elif isinstance(left, Expression) and isinstance(right, Expression):
            if len(left.children) != len(right.children):
                return None
            pending.extend(
                zip(reversed(left.children), reversed(right.children), strict=True)
            )
        elif left != right:
            return None
    return view


def _occurs(variable: Variable, atom: Atom, bindings: Bindings) -> bool:
    stack = [atom]
    while stack:
        current = bindings.walk(stack.pop())
        if current == variable:
            return True
        if isinstance(current, Expression):
            stack.extend(current.children)
    return False


def fresh_rename(atom: Atom, generation: int) -> Atom:
    """Move every variable of ``atom`` into scope ``generation``."""
    if isinstance(atom, Variable):
        return Variable(atom.name, generation)
    if isinstance(atom, Expression):
        return Expression(tuple([fresh_rename(c, generation) for c in atom.children]))
    return atom
