# SPDX-License-Identifier: MPL-2.0
"""Grounded standard library."""

from metta_kb.stdlib.calls import GroundedCall, Reduction
from metta_kb.stdlib.registry import SELF_NAME, StdEnv

__all__ = ["SELF_NAME", "GroundedCall", "Reduction", "StdEnv"]
