"""Recursive-descent parser for structure-constant coefficients.

Grammar (whitespace is insignificant)::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" unary) | ("/" INT))*
    unary  := ("+" | "-") unary | power
    power  := atom ("^" INT)?
    atom   := INT | NAME | "(" expr ")"

Division is only by nonzero integer literals, so ``3/4*alpha`` and
``1/16*(27*alpha^2 + beta^2)`` parse while ``1/alpha`` does not. The Unicode
minus sign is accepted as ``-``. The result is a :class:`Polynomial`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .polynomial import Polynomial


class ParseError(ValueError):
    def __init__(self, message: str, text: str = "", pos: int = 0):
        self.message = message
        self.text = text
        self.pos = pos
        self.line = text.count("\n", 0, pos) + 1
        self.column = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"{message} at line {self.line}, column {self.column}")


@dataclass
class _Token:
    kind: str  # "int", "name", "op", "end"
    value: str
    pos: int


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|([-+*/^()−]))")


def _tokenize(text: str) -> list:
    tokens = []
    pos = 0
    while True:
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            rest = text[pos:]
            stripped = rest.lstrip()
            if not stripped:
                tokens.append(_Token("end", "", len(text)))
                return tokens
            bad = pos + (len(rest) - len(stripped))
            raise ParseError(f"unexpected character {text[bad]!r}", text, bad)
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(_Token("int", m.group(1), start))
        elif m.group(2) is not None:
            tokens.append(_Token("name", m.group(2), start))
        else:
            op = m.group(3)
            tokens.append(_Token("op", "-" if op == "−" else op, start))
        pos = m.end()


class _Parser:
    def __init__(self, text: str, params: Optional[frozenset]):
        self.text = text
        self.params = params
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def tok(self) -> _Token:
        return self.tokens[self.i]

    def error(self, message: str, tok: Optional[_Token] = None) -> ParseError:
        tok = tok or self.tok
        return ParseError(message, self.text, tok.pos)

    def accept(self, op: str) -> bool:
        if self.tok.kind == "op" and self.tok.value == op:
            self.i += 1
            return True
        return False

    def integer(self) -> int:
        tok = self.tok
        if tok.kind != "int":
            raise self.error("expected an integer")
        self.i += 1
        return int(tok.value)

    def parse(self) -> Polynomial:
        if self.tok.kind == "end":
            raise self.error("empty expression")
        value = self.expr()
        if self.tok.kind != "end":
            raise self.error(f"unexpected {self.tok.value!r}")
        return value

    def expr(self) -> Polynomial:
        value = self.term()
        while True:
            if self.accept("+"):
                value = value + self.term()
            elif self.accept("-"):
                value = value - self.term()
            else:
                return value

    def term(self) -> Polynomial:
        value = self.unary()
        while True:
            if self.accept("*"):
                value = value * self.unary()
            elif self.tok.kind == "op" and self.tok.value == "/":
                self.i += 1
                den = self.tok
                d = self.integer()
                if d == 0:
                    raise self.error("zero denominator", den)
                value = value * Polynomial.constant(Fraction(1, d))
            else:
                return value

    def unary(self) -> Polynomial:
        if self.accept("-"):
            return -self.unary()
        if self.accept("+"):
            return self.unary()
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        if self.accept("^"):
            return base ** self.integer()
        return base

    def atom(self) -> Polynomial:
        tok = self.tok
        if tok.kind == "int":
            self.i += 1
            return Polynomial.constant(int(tok.value))
        if tok.kind == "name":
            if self.params is not None and tok.value not in self.params:
                raise self.error(f"unknown parameter {tok.value!r}")
            self.i += 1
            return Polynomial.variable(tok.value)
        if self.accept("("):
            value = self.expr()
            if not self.accept(")"):
                raise self.error("expected ')'")
            return value
        if tok.kind == "end":
            raise self.error("unexpected end of expression")
        raise self.error(f"unexpected {tok.value!r}")


def parse_coefficient(text: str, params: Optional[Iterable[str]] = ()) -> Polynomial:
    """Parse ``text`` into a polynomial over the given parameter names.

    Pass ``params=None`` to accept any identifier.
    """
    allowed = None if params is None else frozenset(params)
    return _Parser(text, allowed).parse()
