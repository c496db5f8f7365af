"""Recursive-descent parser for polynomial expressions in ``x``.

Grammar::

    expr    := term (("+" | "-") term)*
    term    := unary ("*" unary)*
    unary   := ("+" | "-") unary | power
    power   := atom ("^" INT)?
    atom    := INT ("/" INT)? | "x" | "(" expr ")"

Division is only allowed inside a rational literal ``p/q``, and implicit
multiplication is not supported (write ``3*x``).
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import NamedTuple

from .poly import Polynomial, X

__all__ = ["ParseError", "parse_poly", "parse_rational"]

_TOKEN = re.compile(r"\s*(?:(\d+)|(\S))")


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        self.message = message
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at column {pos + 1} in {text!r}")


class _Tok(NamedTuple):
    kind: str  # "int", "x", an operator character, or "end"
    value: str
    pos: int


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    for m in _TOKEN.finditer(text):
        num, other = m.groups()
        start = m.start(1) if num else m.start(2)
        if num:
            toks.append(_Tok("int", num, start))
        elif other is not None:
            if other not in "+-*/^()x":
                raise ParseError(f"unexpected character {other!r}", text, start)
            toks.append(_Tok(other, other, start))
    return toks + [_Tok("end", "", len(text))]


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def error(self, message: str, tok: _Tok | None = None):
        tok = tok or self.tok
        return ParseError(message, self.text, tok.pos)

    def take(self, kind: str) -> _Tok:
        tok = self.tok
        if tok.kind != kind:
            want = "integer" if kind == "int" else repr(kind)
            got = "end of input" if tok.kind == "end" else repr(tok.value)
            raise self.error(f"expected {want}, got {got}")
        self.i += 1
        return tok

    def parse(self) -> Polynomial:
        if self.tok.kind == "end":
            raise self.error("empty expression")
        p = self.expr()
        if self.tok.kind != "end":
            raise self.error(f"unexpected {self.tok.value!r}")
        return p

    def expr(self) -> Polynomial:
        p = self.term()
        while self.tok.kind in ("+", "-"):
            op = self.take(self.tok.kind).kind
            rhs = self.term()
            p = p + rhs if op == "+" else p - rhs
        return p

    def term(self) -> Polynomial:
        p = self.unary()
        while self.tok.kind == "*":
            self.take("*")
            p = p * self.unary()
        return p

    def unary(self) -> Polynomial:
        if self.tok.kind == "-":
            self.take("-")
            return -self.unary()
        if self.tok.kind == "+":
            self.take("+")
            return self.unary()
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        if self.tok.kind == "^":
            self.take("^")
            return base ** int(self.take("int").value)
        return base

    def atom(self) -> Polynomial:
        tok = self.tok
        if tok.kind == "int":
            self.take("int")
            num = int(tok.value)
            if self.tok.kind == "/":
                self.take("/")
                den_tok = self.take("int")
                den = int(den_tok.value)
                if den == 0:
                    raise self.error("division by zero in rational literal", den_tok)
                return Polynomial([Fraction(num, den)])
            return Polynomial([num])
        if tok.kind == "x":
            self.take("x")
            return X
        if tok.kind == "(":
            self.take("(")
            p = self.expr()
            self.take(")")
            return p
        if tok.kind == "/":
            raise self.error("'/' is only allowed inside a p/q literal")
        got = "end of input" if tok.kind == "end" else repr(tok.value)
        raise self.error(f"expected a number, 'x' or '(', got {got}")


def parse_poly(text: str) -> Polynomial:
    return _Parser(text).parse()


_RATIONAL = re.compile(r"\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*")


def parse_rational(text: str) -> Fraction:
    """Parse an optionally signed ``p`` or ``p/q`` literal."""
    m = _RATIONAL.fullmatch(text)
    if not m:
        raise ParseError("expected a rational literal p or p/q", text, 0)
    num, den = m.groups()
    if den is not None and int(den) == 0:
        raise ParseError("division by zero in rational literal", text, m.start(2))
    return Fraction(int(num), int(den) if den else 1)
