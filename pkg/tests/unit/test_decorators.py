# SPDX-License-Identifier: MPL-2.0
import logging

import pytest

from metta_kb.errors import EvaluationError, MettaError, ParseError
from metta_kb.utils.decorators import handle_errors, log_method_entry_exit


def _raising(exc: Exception):
    @handle_errors
    def load():
        raise exc

    return load


def test_metta_errors_pass_through_unchanged():
    error = ParseError("Unbalanced ')'", 1, 3)
    with pytest.raises(ParseError) as excinfo:
        _raising(error)()
    assert excinfo.value is error


def test_recursion_overflow_becomes_an_evaluation_error():
    with pytest.raises(EvaluationError, match="nested too deeply"):
        _raising(RecursionError("maximum recursion depth exceeded"))()


def test_other_exceptions_are_wrapped():
    with pytest.raises(MettaError, match="unexpected error") as excinfo:
        _raising(KeyError("slot"))()
    assert isinstance(excinfo.value.__cause__, KeyError)


def test_entry_and_exit_are_logged(caplog):
    @log_method_entry_exit
    def add(a, b):
        return a + b

    with caplog.at_level(logging.DEBUG, logger="metta_kb.utils.decorators"):
        assert add(2, 3) == 5
    messages = [record.getMessage() for record in caplog.records]
    assert any(m.startswith("Entering ") and "add" in m for m in messages)
    assert any(m.startswith("Exiting ") and m.endswith(" ms") for m in messages)
