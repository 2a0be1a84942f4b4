# SPDX-License-Identifier: MPL-2.0
"""Lexer for MeTTa source text.

>>> [t.kind.value for t in tokenize("! (green $x)")]
['bang', 'open', 'symbol', 'variable', 'close']
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from enum import Enum

from metta_kb.atoms.model import NUMBER_PATTERN, Atom, Grounded, Symbol, Variable
from metta_kb.errors import LexError, UnterminatedStringError

_TOKEN_RE = re.compile(
    r"""
    (?P<space>\s+)
    |(?P<comment>;[^\n]*)
    |(?P<open>\()
    |(?P<close>\))
    |(?P<bang>!)
    |(?P<string>"(?:[^"\\]|\\.)*")
    |(?P<unterminated>")
    |(?P<word>[^\s()";]+)
    """,
    re.VERBOSE | re.DOTALL,
)
_ESCAPE_RE = re.compile(r"\\(.)", re.DOTALL)
_INTEGER_RE = re.compile(r"[+-]?\d+")


class TokenKind(str, Enum):
    OPEN = "open"
    CLOSE = "close"
    BANG = "bang"
    SYMBOL = "symbol"
    VARIABLE = "variable"
    STRING = "string"
    NUMBER = "number"


@dataclass(frozen=True, slots=True)
class SourceSpan:
    line: int
    column: int


@dataclass(frozen=True, slots=True)
class Token:
    kind: TokenKind
    text: str
    span: SourceSpan

    def to_atom(self) -> Atom:
        if self.kind is TokenKind.SYMBOL:
            return Symbol(self.text)
        if self.kind is TokenKind.VARIABLE:
            return Variable(self.text[1:])
        if self.kind is TokenKind.NUMBER:
            if _INTEGER_RE.fullmatch(self.text):
                return Grounded(int(self.text))
            return Grounded(float(self.text))
        if self.kind is TokenKind.STRING:
            return Grounded(_unescape(self.text[1:-1], self.span))
        raise LexError(f"Token {self.text!r} is not an atom", *_coords(self.span))


def _coords(span: SourceSpan) -> tuple[int, int]:
    return span.line, span.column


def _unescape(body: str, span: SourceSpan) -> str:
    def replace(match: re.Match[str]) -> str:
        char = match.group(1)
        if char not in {'"', "\\"}:
            raise LexError(f"Unsupported escape sequence '\\{char}'", *_coords(span))
        return char

    return _ESCAPE_RE.sub(replace, body)


def tokenize(src: str) -> list[Token]:
    tokens: list[Token] = []
    line, line_start, pos = 1, 0, 0
    while pos < len(src):
        match = _TOKEN_RE.match(src, pos)
        # every character is covered by one of the alternatives
        assert match is not None
        kind = match.lastgroup
        lexeme = match.group()
        span = SourceSpan(line, pos - line_start + 1)
        if kind == "unterminated":
            raise UnterminatedStringError("Unterminated string literal", *_coords(span))
        if kind == "word":
            tokens.append(Token(_classify_word(lexeme, span), lexeme, span))
        elif kind not in ("space", "comment"):
            tokens.append(Token(TokenKind(kind), lexeme, span))
        newlines = lexeme.count("\n")
        if newlines:
            line += newlines
            line_start = pos + lexeme.rindex("\n") + 1
        pos = match.end()
    return tokens


def _classify_word(word: str, span: SourceSpan) -> TokenKind:
    if word.startswith("$"):
        if len(word) == 1:
            raise LexError("Variable name is empty", *_coords(span))
        return TokenKind.VARIABLE
    if NUMBER_PATTERN.fullmatch(word):
        if not _INTEGER_RE.fullmatch(word) and not math.isfinite(float(word)):
            raise LexError(f"Number literal out of range: {word}", *_coords(span))
        return TokenKind.NUMBER
    return TokenKind.SYMBOL
