# SPDX-License-Identifier: MPL-2.0
"""Gradual dependent typing."""

from metta_kb.types.inference import (
    TypeChecker,
    TypeContext,
    TypeMismatch,
    check_atom,
    is_arrow,
    type_of,
)

__all__ = [
    "TypeChecker",
    "TypeContext",
    "TypeMismatch",
    "check_atom",
    "is_arrow",
    "type_of",
]
