# SPDX-License-Identifier: MPL-2.0
"""The Atomspace: an insertion-ordered multiset of atoms with unification queries.

Expressions whose head is a symbol are indexed by ``(head name, arity)``.
Everything else (symbols, variables, grounded atoms, the empty expression and
expressions headed by a non-symbol) lives in an unindexed overflow list.
Every query result is derived from a stored atom renamed into a fresh scope,
and results follow the insertion order of the matched atoms.
"""
from __future__ import annotations

import heapq
import itertools
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from operator import attrgetter

from metta_kb.atoms.model import (
    Atom,
    Expression,
    Symbol,
    Variable,
    has_variables,
    iter_variables,
    render,
    same_up_to_renaming,
)
from metta_kb.errors import SpaceError
from metta_kb.reader.parser import parse_atoms
from metta_kb.unify.bindings import Bindings
from metta_kb.unify.matcher import fresh_rename, next_generation, unify
from metta_kb.utils.log_config import get_logger

logger = get_logger(__name__)

IndexKey = tuple[str, int]


@dataclass(slots=True, eq=False)
class _Entry:
    seq: int
    atom: Atom
    has_vars: bool


def index_key(atom: Atom) -> IndexKey | None:
    if isinstance(atom, Expression) and atom.children:
        head = atom.children[0]
        if isinstance(head, Symbol):
            return (head.name, len(atom.children))
    return None


def _same(entry: _Entry, atom: Atom) -> bool:
    if entry.has_vars:
        return same_up_to_renaming(entry.atom, atom)
    return entry.atom == atom


class AtomSpace:
    def __init__(self, atoms: Iterable[Atom] = (), *, indexed: bool = True) -> None:
        self.indexed = indexed
        self._entries: dict[int, _Entry] = {}
        self._index: dict[IndexKey, list[_Entry]] = {}
        self._overflow: list[_Entry] = []
        self._seq = itertools.count()
        for atom in atoms:
            self.add(atom)

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self) -> Iterator[Atom]:
        return (entry.atom for entry in list(self._entries.values()))

    def __repr__(self) -> str:
        return f"AtomSpace(atoms={len(self)}, indexed={self.indexed})"

    def atoms(self) -> list[Atom]:
        return list(self)

    def count(self, atom: Atom) -> int:
        return sum(1 for entry in self._bucket_for(atom) if _same(entry, atom))

    def next_generation(self) -> int:
        return next_generation()

    def add(self, atom: Atom) -> None:
        entry = _Entry(next(self._seq), atom, has_variables(atom))
        self._entries[entry.seq] = entry
        key = index_key(atom)
        if key is None:
            self._overflow.append(entry)
        else:
            self._index.setdefault(key, []).append(entry)

    def remove(self, atom: Atom) -> bool:
        """Remove the oldest occurrence equal to ``atom`` up to variable renaming."""
        bucket = self._bucket_for(atom)
        for position, entry in enumerate(bucket):
            if _same(entry, atom):
                del bucket[position]
                del self._entries[entry.seq]
                key = index_key(atom)
                if key is not None and not bucket:
                    del self._index[key]
                return True
        return False

    def _bucket_for(self, atom: Atom) -> list[_Entry]:
        key = index_key(atom)
        if key is None:
            return self._overflow
        return self._index.get(key, [])

    def _candidates(self, pattern: Atom) -> Iterable[_Entry]:
        if not self.indexed or isinstance(pattern, Variable):
            return list(self._entries.values())
        key = index_key(pattern)
        if key is not None:
            bucket = self._index.get(key, [])
            return list(heapq.merge(bucket, self._overflow, key=attrgetter("seq")))
        if isinstance(pattern, Expression) and isinstance(pattern.head, Variable):
            return list(self._entries.values())
        return list(self._overflow)

    def match(self, pattern: Atom, seed: Bindings | None = None) -> Iterator[Bindings]:
        """Yield full bindings (renamed variables included) for each match.

        The candidate list is fixed before the first result is produced.
        """
        seed = seed if seed is not None else Bindings()
        pattern = seed.resolve(pattern)
        # candidates are alternatives, so one scope per query is enough
        generation = next_generation()
        for entry in self._candidates(pattern):
            stored = entry.atom
            if entry.has_vars:
                stored = fresh_rename(stored, generation)
            result = unify(pattern, stored, seed)
            if result is not None:
                yield result

    def match_conj(
        self, subpatterns: Sequence[Atom], seed: Bindings | None = None
    ) -> Iterator[Bindings]:
        if not subpatterns:
            raise SpaceError("A conjunctive query needs at least one subpattern")
        seed = seed if seed is not None else Bindings()
        first, rest = subpatterns[0], subpatterns[1:]
        for bindings in self.match(first, seed):
            if rest:
                yield from self.match_conj(rest, bindings)
            else:
                yield bindings

    def query(self, pattern: Atom) -> list[Bindings]:
        variables = list(iter_variables(pattern))
        return [bindings.project(variables) for bindings in self.match(pattern)]

    def query_conj(self, subpatterns: Sequence[Atom]) -> list[Bindings]:
        variables = list(iter_variables(Expression(tuple(subpatterns))))
        return [
            bindings.project(variables) for bindings in self.match_conj(subpatterns)
        ]


def dump(space: AtomSpace) -> str:
    lines = [render(atom) for atom in space]
    return "\n".join(lines) + "\n" if lines else ""


def load(text: str, space: AtomSpace | None = None) -> AtomSpace:
    target = space if space is not None else AtomSpace()
    atoms = parse_atoms(text)
    for atom in atoms:
        target.add(atom)
    logger.debug(f"Loaded {len(atoms)} atoms into {target!r}")
    return target
