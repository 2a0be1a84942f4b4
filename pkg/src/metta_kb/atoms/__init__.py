# SPDX-License-Identifier: MPL-2.0
"""Atom model shared by every other subpackage."""

from metta_kb.atoms.grounded import ExecFn, GroundedValue, SpaceRef
from metta_kb.atoms.model import (
    Atom,
    Expression,
    Grounded,
    Symbol,
    Variable,
    atoms_equal,
    expr,
    has_variables,
    iter_variables,
    render,
    same_up_to_renaming,
)

__all__ = [
    "Atom",
    "ExecFn",
    "Expression",
    "Grounded",
    "GroundedValue",
    "SpaceRef",
    "Symbol",
    "Variable",
    "atoms_equal",
    "expr",
    "has_variables",
    "iter_variables",
    "render",
    "same_up_to_renaming",
]
