# SPDX-License-Identifier: MPL-2.0
"""Reserved symbols shared by the interpreter, the type checker and stdlib."""
from __future__ import annotations

from metta_kb.atoms.model import Atom, Expression, Grounded, Symbol

EQUALS = Symbol("=")
COMMA = Symbol(",")
ERROR = Symbol("Error")
TRUE = Symbol("True")
FALSE = Symbol("False")
UNIT = Expression(())

STACK_OVERFLOW = Symbol("StackOverflow")
DIV_BY_ZERO = Symbol("DivByZero")
NOT_FINITE = Symbol("NotFinite")

TYPE_DECL = Symbol(":")
ARROW = Symbol("->")
UNDEFINED_TYPE = Symbol("%Undefined%")
NUMBER_TYPE = Symbol("Number")
STRING_TYPE = Symbol("String")
BOOL_TYPE = Symbol("Bool")


def make_error(atom: Atom, reason: Atom | str) -> Expression:
    if isinstance(reason, str):
        reason = Grounded(reason)
    return Expression((ERROR, atom, reason))


def is_error(atom: Atom) -> bool:
    return (
        isinstance(atom, Expression)
        and bool(atom.children)
        and atom.children[0] == ERROR
    )


def as_bool(atom: Atom) -> bool | None:
    if atom == TRUE:
        return True
    if atom == FALSE:
        return False
    return None


def from_bool(flag: bool) -> Symbol:
    return TRUE if flag else FALSE
