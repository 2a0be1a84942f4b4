# SPDX-License-Identifier: MPL-2.0
from __future__ import annotations

from collections.abc import Callable

import click

from metta_kb.atoms.grounded import ExecFn, SpaceRef
from metta_kb.atoms.model import Atom, Grounded, Symbol
from metta_kb.errors import DataValidationError
from metta_kb.space.atomspace import AtomSpace
from metta_kb.utils.log_config import get_logger

logger = get_logger(__name__)

SELF_NAME = "&self"

Printer = Callable[[str], None]


class StdEnv:
    """Grounded operations visible to one program, and its ``&self`` space.

    A symbol whose name is registered denotes the operation. ``&self`` always
    denotes the space the environment was built for.
    """

    def __init__(
        self,
        space: AtomSpace,
        printer: Printer | None = None,
        *,
        with_defaults: bool = True,
    ) -> None:
        self.space = space
        self.self_ref = SpaceRef(space, SELF_NAME)
        self.printer: Printer = printer if printer is not None else click.echo
        self._registry: dict[str, ExecFn] = {}
        if with_defaults:
            from metta_kb.stdlib.operations import DEFAULT_OPERATIONS

            for fn in DEFAULT_OPERATIONS:
                self.register(fn)

    def __contains__(self, name: object) -> bool:
        return name in self._registry

    def register(self, fn: ExecFn) -> None:
        if fn.name == SELF_NAME:
            raise DataValidationError(f"{SELF_NAME} is reserved for the program space")
        # the name must be writable as a symbol
        Symbol(fn.name)
        if fn.name in self._registry:
            logger.debug(f"Replacing grounded operation {fn.name}")
        self._registry[fn.name] = fn

    def exec_fn(self, atom: Atom) -> ExecFn | None:
        """The operation ``atom`` denotes in head position, if any."""
        if isinstance(atom, Symbol):
            return self._registry.get(atom.name)
        if isinstance(atom, Grounded):
            return atom.exec_fn
        return None

    def space_atom(self, atom: Atom) -> Grounded | None:
        """The grounded space reference a symbol such as ``&self`` evaluates to."""
        if isinstance(atom, Symbol) and atom.name == SELF_NAME:
            return Grounded(self.self_ref)
        return None

    def resolve_space(self, atom: Atom) -> AtomSpace | None:
        if isinstance(atom, Symbol) and atom.name == SELF_NAME:
            return self.space
        if isinstance(atom, Grounded) and isinstance(atom.value, SpaceRef):
            return atom.value.space
        return None
