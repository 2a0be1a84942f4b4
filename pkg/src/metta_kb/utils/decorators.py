# SPDX-License-Identifier: MPL-2.0
"""Decorators for the public runtime entry points."""
import functools
import time
from collections.abc import Callable
from typing import ParamSpec, TypeVar

from metta_kb.errors import EvaluationError, MettaError
from metta_kb.utils.log_config import get_logger

logger = get_logger(__name__)

_P = ParamSpec("_P")
_R = TypeVar("_R")


def log_method_entry_exit(func: Callable[_P, _R]) -> Callable[_P, _R]:
    """Debug-log entry to ``func`` and how long it took."""

    @functools.wraps(func)
    def wrapper(*args: _P.args, **kwargs: _P.kwargs) -> _R:
        name = func.__qualname__
        logger.debug(f"Entering {name}")
        started = time.perf_counter()
        try:
            result = func(*args, **kwargs)
        except Exception as e:
            logger.debug(f"{name} raised {type(e).__name__}: {e}")
            raise
        elapsed_ms = (time.perf_counter() - started) * 1000
        logger.debug(f"Exiting {name} after {elapsed_ms:.1f} ms")
        return result

    return wrapper


def handle_errors(func: Callable[_P, _R]) -> Callable[_P, _R]:
    """Let :class:`MettaError` through and wrap every other exception in one.

    Host recursion overflow outside the evaluator's own guard becomes an
    :class:`EvaluationError`.
    """

    @functools.wraps(func)
    def wrapper(*args: _P.args, **kwargs: _P.kwargs) -> _R:
        name = func.__qualname__
        try:
            return func(*args, **kwargs)
        except MettaError as e:
            logger.error(f"{name} failed with code {e.code}: {e.message}")
            raise
        except RecursionError as e:
            logger.error(f"{name} exceeded the host recursion limit")
            raise EvaluationError(f"Input is nested too deeply for {name}") from e
        except Exception as e:
            logger.error(f"Unexpected error in {name}: {e}", exc_info=True)
            raise MettaError(f"An unexpected error occurred in {name}: {e}") from e

    return wrapper
