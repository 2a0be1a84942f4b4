# SPDX-License-Identifier: MPL-2.0
"""Variable bindings produced by unification."""
from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping

from metta_kb.atoms.model import Atom, Expression, Variable, render


class Bindings(Mapping[Variable, Atom]):
    """An immutable map from variables to atoms.

    Values may mention other bound variables; :meth:`resolve` chases them to a
    fixpoint. Unification never creates cycles, so resolution terminates.
    """

    __slots__ = ("_map",)

    def __init__(self, mapping: Mapping[Variable, Atom] | None = None) -> None:
        self._map: dict[Variable, Atom] = dict(mapping) if mapping else {}

    @classmethod
    def _adopt(cls, mapping: dict[Variable, Atom]) -> Bindings:
        instance = cls.__new__(cls)
        instance._map = mapping
        return instance

    def __getitem__(self, key: Variable) -> Atom:
        return self._map[key]

    def __iter__(self) -> Iterator[Variable]:
        return iter(self._map)

    def __len__(self) -> int:
        return len(self._map)

    def __hash__(self) -> int:
        return hash(frozenset(self._map.items()))

    def __repr__(self) -> str:
        pairs = ", ".join(f"{k!r} -> {render(v)}" for k, v in self._map.items())
        return "{" + pairs + "}"

    def copy_map(self) -> dict[Variable, Atom]:
        return dict(self._map)

    def walk(self, atom: Atom) -> Atom:
        """Follow variable links until an unbound variable or a non-variable."""
        while isinstance(atom, Variable):
            value = self._map.get(atom)
            if value is None:
                return atom
            atom = value
        return atom

    def resolve(self, atom: Atom) -> Atom:
        if not self._map:
            return atom
        return _substitute(atom, self._map)

    def project(self, variables: Iterable[Variable]) -> Bindings:
        """Keep only ``variables``, each mapped to its fully resolved value."""
        projected: dict[Variable, Atom] = {}
        for variable in variables:
            value = self.resolve(variable)
            if value != variable:
                projected[variable] = value
        return Bindings._adopt(projected)

    def to_text(self) -> dict[str, str]:
        return {render(k): render(v) for k, v in self._map.items()}


def _substitute(atom: Atom, mapping: dict[Variable, Atom]) -> Atom:
    if isinstance(atom, Variable):
        value = mapping.get(atom)
        return atom if value is None else _substitute(value, mapping)
    if isinstance(atom, Expression):
        children = atom.children
        replaced = tuple([_substitute(child, mapping) for child in children])
        if all(new is old for new, old in zip(replaced, children, strict=True)):
            return atom
        return Expression(replaced)
    return atom


def apply_bindings(atom: Atom, bindings: Bindings) -> Atom:
    """Replace every bound variable of ``atom`` until none remains.

    >>> from metta_kb.reader import parse_atom
    >>> b = Bindings({Variable("x"): parse_atom("C"), Variable("y"): parse_atom("D")})
    >>> render(apply_bindings(parse_atom("(Found $x $y)"), b))
    '(Found C D)'
    """
    return bindings.resolve(atom)
