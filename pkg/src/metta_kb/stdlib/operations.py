# SPDX-License-Identifier: MPL-2.0
"""The default grounded operations.

Every operation receives a :class:`GroundedCall` and returns a list of
reductions, or ``None`` when its arguments are outside its domain; the
interpreter then keeps the application unreduced.
"""
from __future__ import annotations

import math
import operator
from collections.abc import Callable, Iterator

from metta_kb.atoms.grounded import ExecFn
from metta_kb.atoms.model import Atom, Expression, Grounded, render
from metta_kb.atoms.vocabulary import (
    COMMA,
    DIV_BY_ZERO,
    NOT_FINITE,
    UNIT,
    as_bool,
    from_bool,
    is_error,
    make_error,
)
from metta_kb.stdlib.calls import GroundedCall, Reduction
from metta_kb.types.inference import type_of
from metta_kb.unify.bindings import Bindings

Number = int | float


def _number(atom: Atom) -> Number | None:
    if isinstance(atom, Grounded) and isinstance(atom.value, int | float):
        return atom.value
    return None


def _numbers(call: GroundedCall) -> list[Number] | None:
    values = [_number(arg) for arg in call.args]
    if any(value is None for value in values):
        return None
    return values  # type: ignore[return-value]


def _booleans(call: GroundedCall) -> list[bool] | None:
    values = [as_bool(arg) for arg in call.args]
    if any(value is None for value in values):
        return None
    return values  # type: ignore[return-value]


def _final(atom: Atom) -> list[Reduction]:
    return [Reduction(atom, final=True)]


def _number_result(call: GroundedCall, value: Number) -> list[Reduction]:
    if isinstance(value, float) and not math.isfinite(value):
        return _final(make_error(call.expression, NOT_FINITE))
    return _final(Grounded(value))


def _arithmetic(func: Callable[[Number, Number], Number]) -> Callable:
    def apply(call: GroundedCall) -> list[Reduction] | None:
        values = _numbers(call)
        if values is None:
            return None
        return _number_result(call, func(*values))

    return apply


def _divide(call: GroundedCall) -> list[Reduction] | None:
    values = _numbers(call)
    if values is None:
        return None
    left, right = values
    if right == 0:
        return _final(make_error(call.expression, DIV_BY_ZERO))
    if isinstance(left, int) and isinstance(right, int):
        return _final(Grounded(left // right))
    return _number_result(call, left / right)


def _comparison(func: Callable[[Number, Number], bool]) -> Callable:
    def apply(call: GroundedCall) -> list[Reduction] | None:
        values = _numbers(call)
        if values is None:
            return None
        return _final(from_bool(func(*values)))

    return apply


def _logic(func: Callable[..., bool]) -> Callable:
    def apply(call: GroundedCall) -> list[Reduction] | None:
        values = _booleans(call)
        if values is None:
            return None
        return _final(from_bool(func(*values)))

    return apply


def _if(call: GroundedCall) -> list[Reduction]:
    condition, then_branch, else_branch = call.args
    reductions: list[Reduction] = []
    for value, bindings in call.evaluate(condition):
        flag = as_bool(value)
        if flag is True:
            reductions.append(Reduction(then_branch, bindings))
        elif flag is False:
            reductions.append(Reduction(else_branch, bindings))
        elif is_error(value):
            reductions.append(Reduction(value, bindings, final=True))
        else:
            reductions.append(Reduction(call.expression, bindings, final=True))
    return reductions


def _query_matches(
    call: GroundedCall, space_arg: Atom, query: Atom
) -> Iterator[Bindings] | None:
    space = call.resolve_space(space_arg)
    if space is None:
        return None
    if isinstance(query, Expression) and query.head == COMMA:
        if not query.args:
            return None
        return space.match_conj(query.args, call.bindings)
    return space.match(query, call.bindings)


def _match(call: GroundedCall) -> list[Reduction] | None:
    space_arg, query, template = call.args
    matches = _query_matches(call, space_arg, query)
    if matches is None:
        return None
    return [Reduction(template, bindings) for bindings in list(matches)]


def _add_atom(call: GroundedCall) -> list[Reduction] | None:
    space_arg, atom = call.args
    space = call.resolve_space(space_arg)
    if space is None:
        return None
    space.add(atom)
    return _final(UNIT)


def _remove_atom(call: GroundedCall) -> list[Reduction] | None:
    space_arg, atom = call.args
    space = call.resolve_space(space_arg)
    if space is None:
        return None
    return _final(from_bool(space.remove(atom)))


def _quote(call: GroundedCall) -> list[Reduction]:
    return _final(call.expression)


def _get_type(call: GroundedCall) -> list[Reduction]:
    return [Reduction(t, final=True) for t in type_of(call.space, call.args[0])]


def _println(call: GroundedCall) -> list[Reduction]:
    call.env.printer(render(call.args[0]))
    return _final(UNIT)


DEFAULT_OPERATIONS: tuple[ExecFn, ...] = (
    ExecFn("match", _match, lazy=True, arity=3),
    ExecFn("add-atom", _add_atom, lazy=True, arity=2),
    ExecFn("remove-atom", _remove_atom, lazy=True, arity=2),
    ExecFn("if", _if, lazy=True, arity=3),
    ExecFn("quote", _quote, lazy=True, arity=1),
    ExecFn("get-type", _get_type, lazy=True, arity=1),
    ExecFn("println!", _println, arity=1),
    ExecFn("+", _arithmetic(operator.add), arity=2),
    ExecFn("-", _arithmetic(operator.sub), arity=2),
    ExecFn("*", _arithmetic(operator.mul), arity=2),
    ExecFn("/", _divide, arity=2),
    ExecFn("<", _comparison(operator.lt), arity=2),
    ExecFn(">", _comparison(operator.gt), arity=2),
    ExecFn("==", _comparison(operator.eq), arity=2),
    ExecFn("and", _logic(operator.and_), arity=2),
    ExecFn("or", _logic(operator.or_), arity=2),
    ExecFn("not", _logic(operator.not_), arity=1),
)
