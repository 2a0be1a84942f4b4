# SPDX-License-Identifier: MPL-2.0
"""
MeTTa-KB: a MeTTa interpreter over an in-memory Atomspace.

Programs are collections of expressions stored in an Atomspace; directives are
evaluated by unification-based querying and equality-query chaining.
"""
import logging

from .config import AppConfig
from .utils.log_config import setup_logging

setup_logging()

try:
    CONFIG: AppConfig | None = AppConfig()
except Exception as e:
    logging.getLogger(__name__).error(f"Failed to load application configuration: {e}")
    CONFIG = None

__version__ = "0.1.0"
