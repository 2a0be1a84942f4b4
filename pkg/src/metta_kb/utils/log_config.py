# SPDX-License-Identifier: MPL-2.0
import logging
import sys

DEFAULT_FORMAT = "%(asctime)s %(levelname)s [%(name)s] %(message)s"
DEFAULT_DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


def setup_logging(
    level: int = logging.WARNING,
    log_file: str | None = None,
    *,
    log_format: str = DEFAULT_FORMAT,
    date_format: str = DEFAULT_DATE_FORMAT,
) -> None:
    """Route log records to stderr and, optionally, to ``log_file``.

    stdout carries directive results only. Calling again replaces the
    handlers installed by the previous call.
    """
    handlers: list[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if log_file:
        handlers.append(logging.FileHandler(log_file, encoding="utf-8"))
    logging.basicConfig(
        level=level,
        format=log_format,
        datefmt=date_format,
        handlers=handlers,
        force=True,
    )
    get_logger(__name__).debug(
        f"Logging at {logging.getLevelName(level)}"
        + (f", copied to {log_file}" if log_file else "")
    )


def level_from_name(name: str, default: int = logging.WARNING) -> int:
    """Numeric level for a name such as ``"debug"``; unknown names give ``default``.

    >>> level_from_name("debug") == logging.DEBUG
    True
    >>> level_from_name("chatty") == logging.WARNING
    True
    """
    level = logging.getLevelName(name.upper())
    return level if isinstance(level, int) else default


def get_logger(name: str) -> logging.Logger:
    return logging.getLogger(name)
