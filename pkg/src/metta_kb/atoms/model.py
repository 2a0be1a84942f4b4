# SPDX-License-Identifier: MPL-2.0
"""The atom data model: symbols, variables, grounded values and expressions.

Atoms are immutable and hashable. Structural equality is the dataclass
equality, except for grounded atoms where the host type takes part in the
comparison (``10`` and ``10.0`` are different atoms).

>>> render(Expression((Symbol("A"), Expression((Symbol("B"), Symbol("C"))))))
'(A (B C))'
"""
from __future__ import annotations

import math
import re
from collections.abc import Iterator
from dataclasses import dataclass
from typing import TypeAlias

from metta_kb.atoms.grounded import ExecFn, GroundedValue, SpaceRef
from metta_kb.errors import DataValidationError

_NAME_FORBIDDEN = re.compile(r'[\s()";]')
NUMBER_PATTERN = re.compile(r"[+-]?\d+(?:\.\d+)?(?:[eE][+-]?\d+)?")


@dataclass(frozen=True, slots=True)
class Symbol:
    name: str

    def __post_init__(self) -> None:
        if (
            not self.name
            or _NAME_FORBIDDEN.search(self.name)
            or self.name[0] in "$!"
            or NUMBER_PATTERN.fullmatch(self.name)
        ):
            raise DataValidationError(f"Illegal symbol name: {self.name!r}")

    def __repr__(self) -> str:
        return self.name


@dataclass(frozen=True, slots=True)
class Variable:
    """A pattern variable. ``scope`` tells apart same-named variables."""

    name: str
    scope: int = 0

    def __post_init__(self) -> None:
        if not self.name or _NAME_FORBIDDEN.search(self.name):
            raise DataValidationError(f"Illegal variable name: {self.name!r}")

    @property
    def sort_key(self) -> tuple[int, str]:
        return (self.scope, self.name)

    def __repr__(self) -> str:
        if self.scope:
            return f"${self.name}#{self.scope}"
        return f"${self.name}"


@dataclass(frozen=True, slots=True, eq=False)
class Grounded:
    value: GroundedValue

    def __post_init__(self) -> None:
        if isinstance(self.value, bool) or not isinstance(
            self.value, int | float | str | SpaceRef | ExecFn
        ):
            raise DataValidationError(
                f"Unsupported grounded value: {type(self.value).__name__}"
            )
        if isinstance(self.value, float) and not math.isfinite(self.value):
            raise DataValidationError(f"Non-finite number: {self.value!r}")

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Grounded)
            and type(other.value) is type(self.value)
            and other.value == self.value
        )

    def __hash__(self) -> int:
        return hash((type(self.value).__name__, self.value))

    @property
    def exec_fn(self) -> ExecFn | None:
        return self.value if isinstance(self.value, ExecFn) else None

    def __repr__(self) -> str:
        return render(self)


@dataclass(frozen=True, slots=True)
class Expression:
    children: tuple[Atom, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.children, tuple):
            object.__setattr__(self, "children", tuple(self.children))

    @property
    def head(self) -> Atom | None:
        return self.children[0] if self.children else None

    @property
    def args(self) -> tuple[Atom, ...]:
        return self.children[1:]

    def __repr__(self) -> str:
        return render(self)


Atom: TypeAlias = Symbol | Variable | Grounded | Expression


def expr(*children: Atom) -> Expression:
    return Expression(children)


def atoms_equal(a: Atom, b: Atom) -> bool:
    return a == b


def same_up_to_renaming(a: Atom, b: Atom) -> bool:
    """Structural equality where variables may differ by a one-to-one renaming.

    >>> same_up_to_renaming(
    ...     Expression((Symbol("g"), Variable("y", 7), Variable("y", 7))),
    ...     Expression((Symbol("g"), Variable("y"), Variable("y"))),
    ... )
    True
    >>> same_up_to_renaming(
    ...     Expression((Variable("x"), Variable("y"))),
    ...     Expression((Variable("z"), Variable("z"))),
    ... )
    False
    """
    forward: dict[Variable, Variable] = {}
    backward: dict[Variable, Variable] = {}
    stack: list[tuple[Atom, Atom]] = [(a, b)]
    while stack:
        left, right = stack.pop()
        if isinstance(left, Variable) and isinstance(right, Variable):
            if forward.setdefault(left, right) != right:
                return False
            if backward.setdefault(right, left) != left:
                return False
        elif isinstance(left, Expression) and isinstance(right, Expression):
            if len(left.children) != len(right.children):
                return False
            stack.extend(zip(left.children, right.children, strict=True))
        elif isinstance(left, Variable | Expression) or left != right:
            return False
    return True


def _render_text(text: str) -> str:
    escaped = text.replace("\\", "\\\\").replace('"', '\\"')
    return f'"{escaped}"'


def _render_leaf(atom: Symbol | Variable | Grounded) -> str:
    if isinstance(atom, Symbol):
        return atom.name
    if isinstance(atom, Variable):
        return f"${atom.name}"
    value = atom.value
    if isinstance(value, str):
        return _render_text(value)
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, int):
        return str(value)
    return value.name


_CLOSE = object()


def render(atom: Atom) -> str:
    """Canonical surface syntax. Variable scopes are not shown.

    >>> render(Expression((Symbol("f"), Expression(()), Variable("x", 3))))
    '(f () $x)'
    """
    parts: list[str] = []
    # each entry is an atom to print or the closing marker of an expression
    stack: list[Atom | object] = [atom]
    pending_space = False
    while stack:
        current = stack.pop()
        if current is _CLOSE:
            parts.append(")")
            pending_space = True
            continue
        if pending_space:
            parts.append(" ")
        if isinstance(current, Expression):
            parts.append("(")
            stack.append(_CLOSE)
            stack.extend(reversed(current.children))
            pending_space = False
        else:
            parts.append(_render_leaf(current))  # type: ignore[arg-type]
            pending_space = True
    return "".join(parts)


def iter_variables(atom: Atom) -> Iterator[Variable]:
    """Yield each distinct variable of ``atom`` once, left to right."""
    seen: set[Variable] = set()
    stack: list[Atom] = [atom]
    while stack:
        current = stack.pop()
        if isinstance(current, Variable):
            if current not in seen:
                seen.add(current)
                yield current
        elif isinstance(current, Expression):
            stack.extend(reversed(current.children))


def has_variables(atom: Atom) -> bool:
    return next(iter_variables(atom), None) is not None
