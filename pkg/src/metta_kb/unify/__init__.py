# SPDX-License-Identifier: MPL-2.0
"""Unification, bindings and renaming."""

from metta_kb.unify.bindings import Bindings, apply_bindings
from metta_kb.unify.matcher import fresh_rename, next_generation, unify

__all__ = ["Bindings", "apply_bindings", "fresh_rename", "next_generation", "unify"]
