# SPDX-License-Identifier: MPL-2.0
"""The head/arity index must agree with a plain scan of every stored atom."""
import random
import statistics
import time

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from metta_kb.atoms import Atom, Expression, Grounded, Symbol, Variable, render
from metta_kb.space import AtomSpace
from metta_kb.unify import fresh_rename, next_generation, unify

HEADS = ["likes", "parent", "is-a", "="]
CONSTANTS = ["Sam", "Tom", "Ann", "Fritz"]
VARIABLES = ["x", "y", "z"]


def random_atom(rng: random.Random, depth: int = 0) -> Atom:
    roll = rng.random()
    if depth > 2 or roll < 0.35:
        leaf = rng.random()
        if leaf < 0.6:
            return Symbol(rng.choice(CONSTANTS))
        if leaf < 0.85:
            return Variable(rng.choice(VARIABLES))
        return Grounded(rng.randint(0, 3))
    if roll < 0.45:
        # variable or expression heads land outside the index
        head: Atom = rng.choice(
            [Variable(rng.choice(VARIABLES)), Expression((Symbol("f"),))]
        )
    else:
        head = Symbol(rng.choice(HEADS))
    args = [random_atom(rng, depth + 1) for _ in range(rng.randint(0, 3))]
    return Expression((head, *args))


def linear_scan(stored: list[Atom], pattern: Atom) -> list[str]:
    """Unify ``pattern`` against every atom in insertion order."""
    results = []
    for atom in stored:
        found = unify(pattern, fresh_rename(atom, next_generation()))
        if found is not None:
            results.append(render(found.resolve(pattern)))
    return results


def indexed_query(space: AtomSpace, pattern: Atom) -> list[str]:
    return [render(found.resolve(pattern)) for found in space.match(pattern)]


def _assert_agreement(stored: list[Atom], patterns: list[Atom]) -> None:
    indexed = AtomSpace(stored, indexed=True)
    unindexed = AtomSpace(stored, indexed=False)
    for pattern in patterns:
        expected = linear_scan(stored, pattern)
        assert indexed_query(indexed, pattern) == expected, render(pattern)
        assert indexed_query(unindexed, pattern) == expected, render(pattern)


@settings(deadline=None, max_examples=300)
@given(st.randoms(use_true_random=False), st.integers(0, 60), st.integers(1, 10))
def test_index_agrees_with_linear_scan(rng, size, queries):
    stored = [random_atom(rng) for _ in range(size)]
    patterns = [random_atom(rng) for _ in range(queries)]
    _assert_agreement(stored, patterns)


def test_index_agrees_after_removals():
    rng = random.Random(7)
    stored = [random_atom(rng) for _ in range(150)]
    space = AtomSpace(stored)
    for atom in rng.sample(stored, 60):
        assert space.remove(atom)
        stored.remove(atom)
    for _ in range(40):
        pattern = random_atom(rng)
        assert indexed_query(space, pattern) == linear_scan(stored, pattern)


@pytest.mark.slow
def test_randomized_spaces_agree_with_linear_scan():
    rng = random.Random(20240601)
    for _ in range(1000):
        stored = [random_atom(rng) for _ in range(rng.randint(0, 200))]
        patterns = [random_atom(rng) for _ in range(rng.randint(1, 50))]
        _assert_agreement(stored, patterns)


def _median_query_seconds(space: AtomSpace, pattern: Atom, runs: int) -> float:
    timings = []
    for _ in range(runs):
        started = time.perf_counter()
        found = list(space.match(pattern))
        timings.append(time.perf_counter() - started)
    assert len(found) == 100
    return statistics.median(timings)


@pytest.mark.slow
def test_index_speeds_up_ground_head_queries():
    facts = [
        Expression((Symbol(f"rel{i % 1000}"), Symbol(f"item{i}")))
        for i in range(100_000)
    ]
    pattern = Expression((Symbol("rel7"), Variable("x")))
    indexed = _median_query_seconds(AtomSpace(facts, indexed=True), pattern, 100)
    linear = _median_query_seconds(AtomSpace(facts, indexed=False), pattern, 100)
    assert linear >= 20 * indexed
