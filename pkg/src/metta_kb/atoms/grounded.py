# SPDX-License-Identifier: MPL-2.0
"""Host values wrapped by grounded atoms."""
from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, TypeAlias

if TYPE_CHECKING:
    from metta_kb.space.atomspace import AtomSpace
    from metta_kb.stdlib.calls import GroundedCall, Reduction


class SpaceRef:
    """Handle to an AtomSpace; two refs are equal iff they denote the same space."""

    __slots__ = ("name", "space")

    def __init__(self, space: AtomSpace, name: str = "&self") -> None:
        self.space = space
        self.name = name

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SpaceRef) and other.space is self.space

    def __hash__(self) -> int:
        return id(self.space)

    def __repr__(self) -> str:
        return f"SpaceRef({self.name})"


OpFunction: TypeAlias = "Callable[[GroundedCall], list[Reduction] | None]"


@dataclass(frozen=True, eq=False)
class ExecFn:
    """A named host operation.

    ``lazy`` operations receive their arguments unevaluated. ``arity`` of
    ``None`` accepts any number of arguments. Returning ``None`` from ``func``
    means the arguments are outside the operation's domain; raising
    :class:`~metta_kb.errors.EvaluationError` yields an Error atom carrying
    its message.
    """

    name: str
    func: OpFunction = field(repr=False)
    lazy: bool = False
    arity: int | None = None

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ExecFn) and other.name == self.name

    def __hash__(self) -> int:
        return hash(("ExecFn", self.name))


GroundedValue: TypeAlias = int | float | str | SpaceRef | ExecFn
