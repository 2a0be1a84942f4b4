# SPDX-License-Identifier: MPL-2.0
import operator

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from metta_kb.api import MettaRuntime
from metta_kb.atoms import Expression, Grounded, Symbol, Variable, atoms_equal, render
from metta_kb.reader import parse_atom
from metta_kb.space import AtomSpace, dump
from metta_kb.unify import fresh_rename, next_generation, unify
from tests.strategies import atoms, ground_atoms, symbolic_atoms

PROPERTY_SETTINGS = settings(
    deadline=None, suppress_health_check=[HealthCheck.too_slow]
)

PEANO_RULES = """
(= (add (S $x) $y) (add $x (S $y)))
(= (add Z $x) $x)
(= (double $x) (add $x $x))
"""


def _numeral(n: int) -> str:
    return "(S " * n + "Z" + ")" * n


@settings(PROPERTY_SETTINGS, max_examples=2000)
@given(atoms)
def test_render_then_parse_is_identity(atom):
    assert parse_atom(render(atom)) == atom


@settings(PROPERTY_SETTINGS, max_examples=500)
@given(atoms, atoms, atoms)
def test_atom_equality_is_an_equivalence(a, b, c):
    assert atoms_equal(a, a)
    assert atoms_equal(a, b) == atoms_equal(b, a)
    if atoms_equal(a, b) and atoms_equal(b, c):
        assert atoms_equal(a, c)


@settings(PROPERTY_SETTINGS, max_examples=2500)
@given(symbolic_atoms, symbolic_atoms)
def test_unification_is_symmetric_and_sound(a, b):
    forward = unify(a, b)
    backward = unify(b, a)
    assert (forward is None) == (backward is None)
    if forward is not None:
        assert forward.resolve(a) == forward.resolve(b)
        assert backward.resolve(a) == backward.resolve(b)


@settings(PROPERTY_SETTINGS, max_examples=500)
@given(atoms)
def test_every_atom_unifies_with_itself(atom):
    bindings = unify(atom, atom)
    assert bindings is not None
    assert bindings.resolve(atom) == atom


@settings(PROPERTY_SETTINGS, max_examples=1000)
@given(st.lists(symbolic_atoms, max_size=3), st.sampled_from(["x", "y", "z"]))
def test_occurs_check_rejects_self_containing_pairs(siblings, name):
    variable = Variable(name)
    container = Expression((Symbol("wrap"), *siblings, variable))
    assert unify(variable, container) is None
    assert unify(container, variable) is None


@settings(PROPERTY_SETTINGS, max_examples=1000)
@given(st.lists(ground_atoms, max_size=8), ground_atoms)
def test_add_then_remove_restores_the_space(existing, extra):
    space = AtomSpace(existing)
    before = dump(space)
    count = space.count(extra)
    space.add(extra)
    assert space.count(extra) == count + 1
    assert space.remove(extra)
    assert space.count(extra) == count
    assert sorted(dump(space).splitlines()) == sorted(before.splitlines())


@settings(PROPERTY_SETTINGS, max_examples=1000)
@given(st.lists(atoms, max_size=8), atoms)
def test_renamed_additions_are_removed_by_the_written_form(existing, extra):
    space = AtomSpace(existing)
    count = space.count(extra)
    space.add(fresh_rename(extra, next_generation()))
    assert space.count(extra) == count + 1
    assert space.remove(extra)
    assert space.count(extra) == count


@settings(PROPERTY_SETTINGS, max_examples=500)
@given(st.integers(0, 6), st.integers(0, 6), st.booleans())
def test_evaluation_results_are_normal_forms(m, n, doubled):
    runtime = MettaRuntime(printer=lambda text: None)
    runtime.add_source(PEANO_RULES)
    if doubled:
        query = f"(double {_numeral(m)})"
    else:
        query = f"(add {_numeral(m)} {_numeral(n)})"
    results = [result.atom for result in runtime.evaluate(query)]
    assert len(results) == 1
    assert [again.atom for again in runtime.evaluate(results[0])] == results


@settings(PROPERTY_SETTINGS, max_examples=500)
@given(ground_atoms)
def test_data_without_rules_is_its_own_value(atom):
    runtime = MettaRuntime(printer=lambda text: None)
    assert [result.atom for result in runtime.evaluate(atom)] == [atom]


_HOST_OPERATIONS = {
    "+": operator.add,
    "-": operator.sub,
    "*": operator.mul,
    "<": operator.lt,
    ">": operator.gt,
    "==": operator.eq,
}


@settings(PROPERTY_SETTINGS, max_examples=1500)
@given(
    st.sampled_from(sorted(_HOST_OPERATIONS) + ["/"]),
    st.integers(-(10**6), 10**6),
    st.integers(-(10**6), 10**6),
)
def test_integer_operations_agree_with_the_host(name, left, right):
    runtime = MettaRuntime(printer=lambda text: None)
    expression = Expression((Symbol(name), Grounded(left), Grounded(right)))
    [result] = runtime.evaluate(expression)
    if name != "/":
        expected = str(_HOST_OPERATIONS[name](left, right))
    elif right == 0:
        expected = f"(Error {render(expression)} DivByZero)"
    else:
        expected = str(left // right)
    assert render(result.atom) == expected
