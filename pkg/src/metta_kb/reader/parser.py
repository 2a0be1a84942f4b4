# SPDX-License-Identifier: MPL-2.0
"""Program reader and printer.

A program is a sequence of top-level forms; a form prefixed with ``!`` is a
directive to be evaluated, every other form is stored.

>>> [item.is_directive for item in parse_program("(A B) !(f A)")]
[False, True]
>>> print_program(parse_program("!  (f   $x)"))
'!(f $x)\\n'
"""
from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field

from metta_kb.atoms.model import Atom, Expression, render
from metta_kb.errors import LexError, ParseError, UnterminatedStringError
from metta_kb.reader.tokenizer import SourceSpan, Token, TokenKind, tokenize


@dataclass(frozen=True, slots=True)
class ProgramItem:
    atom: Atom
    is_directive: bool = False
    span: SourceSpan = field(default=SourceSpan(1, 1), compare=False)


def parse_program(src: str) -> list[ProgramItem]:
    items: list[ProgramItem] = []
    open_forms: list[tuple[list[Atom], SourceSpan]] = []
    bang: SourceSpan | None = None

    for token in tokenize(src):
        if token.kind is TokenKind.BANG:
            if open_forms:
                raise _error("'!' is only allowed before a top-level form", token)
            if bang is not None:
                raise _error("'!' must be followed by a form", token)
            bang = token.span
            continue
        if token.kind is TokenKind.OPEN:
            open_forms.append(([], token.span))
            continue
        if token.kind is TokenKind.CLOSE:
            if not open_forms:
                raise _error("Unbalanced ')'", token)
            children, start = open_forms.pop()
            atom: Atom = Expression(tuple(children))
        else:
            atom, start = token.to_atom(), token.span

        if open_forms:
            open_forms[-1][0].append(atom)
        else:
            items.append(ProgramItem(atom, bang is not None, bang or start))
            bang = None

    if open_forms:
        span = open_forms[-1][1]
        raise ParseError("Unbalanced '(': form is never closed", span.line, span.column)
    if bang is not None:
        raise ParseError("'!' must be followed by a form", bang.line, bang.column)
    return items


def _error(message: str, token: Token) -> ParseError:
    return ParseError(message, token.span.line, token.span.column)


def parse_atoms(src: str) -> list[Atom]:
    """Parse data-only text: every form is an atom, directives are rejected."""
    atoms = []
    for item in parse_program(src):
        if item.is_directive:
            raise ParseError(
                "Directives are not allowed here", item.span.line, item.span.column
            )
        atoms.append(item.atom)
    return atoms


def parse_atom(src: str) -> Atom:
    atoms = parse_atoms(src)
    if len(atoms) != 1:
        raise ParseError(f"Expected exactly one form, found {len(atoms)}", 1, 1)
    return atoms[0]


def print_program(items: Iterable[ProgramItem]) -> str:
    lines = [("!" if item.is_directive else "") + render(item.atom) for item in items]
    return "\n".join(lines) + "\n" if lines else ""


def is_incomplete(src: str) -> bool:
    """True when ``src`` is a prefix of a well-formed program that needs more text."""
    try:
        tokens = tokenize(src)
    except UnterminatedStringError:
        return True
    except LexError:
        return False
    depth = 0
    for token in tokens:
        if token.kind is TokenKind.OPEN:
            depth += 1
        elif token.kind is TokenKind.CLOSE:
            depth -= 1
            if depth < 0:
                return False
    return depth > 0 or bool(tokens and tokens[-1].kind is TokenKind.BANG)
