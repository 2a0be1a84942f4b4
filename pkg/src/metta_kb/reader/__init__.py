# SPDX-License-Identifier: MPL-2.0
"""Text to atoms and back."""

from metta_kb.reader.parser import (
    ProgramItem,
    is_incomplete,
    parse_atom,
    parse_atoms,
    parse_program,
    print_program,
)
from metta_kb.reader.tokenizer import SourceSpan, Token, TokenKind, tokenize

__all__ = [
    "ProgramItem",
    "SourceSpan",
    "Token",
    "TokenKind",
    "is_incomplete",
    "parse_atom",
    "parse_atoms",
    "parse_program",
    "print_program",
    "tokenize",
]
