# SPDX-License-Identifier: MPL-2.0
"""In-memory Atomspace."""

from metta_kb.space.atomspace import AtomSpace, dump, index_key, load

__all__ = ["AtomSpace", "dump", "index_key", "load"]
