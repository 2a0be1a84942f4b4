# SPDX-License-Identifier: MPL-2.0
"""Evaluation of atoms and programs."""

from metta_kb.interpreter.evaluator import EvalResult, Interpreter, recursion_headroom
from metta_kb.interpreter.runner import (
    DirectiveOutput,
    format_results,
    run_directive,
    run_program,
)

__all__ = [
    "DirectiveOutput",
    "EvalResult",
    "Interpreter",
    "format_results",
    "recursion_headroom",
    "run_directive",
    "run_program",
]
