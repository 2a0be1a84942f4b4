# SPDX-License-Identifier: MPL-2.0
import logging
import os
from pathlib import Path

import pytest

from metta_kb.api import MettaRuntime
from metta_kb.atoms import render
from metta_kb.reader import parse_atom, parse_program
from metta_kb.space import AtomSpace
from metta_kb.utils.log_config import setup_logging

CORPUS_DIR = Path(__file__).parent / "fixtures" / "corpus"


@pytest.fixture(scope="session", autouse=True)
def setup_test_logging():
    """Sets up logging for the test session."""
    setup_logging(
        level=getattr(logging, os.getenv("TEST_LOG_LEVEL", "WARNING").upper())
    )


@pytest.fixture
def corpus_dir() -> Path:
    return CORPUS_DIR


@pytest.fixture
def load_corpus():
    """Returns ``(source, expected lines)`` for a golden program by stem."""

    def _load(name: str) -> tuple[str, list[str]]:
        source = (CORPUS_DIR / f"{name}.metta").read_text(encoding="utf-8")
        expected = (CORPUS_DIR / f"{name}.expected").read_text(encoding="utf-8")
        return source, expected.splitlines()

    return _load


@pytest.fixture
def space_from():
    """Builds a space holding every form of a program text."""

    def _build(src: str, *, indexed: bool = True) -> AtomSpace:
        return AtomSpace(
            (item.atom for item in parse_program(src)), indexed=indexed
        )

    return _build


@pytest.fixture
def runtime() -> MettaRuntime:
    return MettaRuntime(printer=lambda text: None)


@pytest.fixture
def evaluate_in():
    """Evaluates one atom against a program and returns rendered results."""

    def _evaluate(program: str, atom: str, **config) -> list[str]:
        from metta_kb.schema.config import EvalConfig

        runtime = MettaRuntime(EvalConfig(**config), printer=lambda text: None)
        runtime.add_source(program)
        return [render(result.atom) for result in runtime.evaluate(parse_atom(atom))]

    return _evaluate


@pytest.fixture
def metta_file(tmp_path):
    """Writes a temporary .metta program and returns its path."""

    def _write(text: str, name: str = "program.metta") -> Path:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return _write
