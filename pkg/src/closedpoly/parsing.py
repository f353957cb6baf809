"""Polynomial expression parsing and canonical rendering.

Grammar (whitespace-insensitive):

    poly   := ['+'|'-'] term ( ('+'|'-') term )*
    term   := coeff [ '*' mono ] | mono
    coeff  := int | int '/' posint
    mono   := factor ( '*' factor )*
    factor := 'x' posint [ '^' nonneg-int ]

Variables are x1, x2, ...; the variable count is inferred as the largest
index that appears.  Rendered output sorts terms descending under the
requested monomial order and is always re-parseable.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .orders import OrderSpec, sort_key
from .poly import MAX_EXPONENT, MultiPoly, mono_unit


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


@dataclass(frozen=True)
class ParsedInput:
    poly: MultiPoly
    nvars: int
    source: str


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<var>x(?P<varidx>\d+))
  | (?P<num>\d+)
  | (?P<op>[-+*/^])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class _Token:
    kind: str  # 'var' | 'num' | one of '+-*/^' | 'end'
    text: str
    line: int
    column: int


def _tokenize(text: str) -> list:
    tokens = []
    pos = 0
    line = 1
    line_start = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise ParseError(
                f"unexpected character {text[pos]!r}", line, pos - line_start + 1
            )
        column = pos - line_start + 1
        if m.group("var"):
            tokens.append(_Token("var", m.group(0), line, column))
        elif m.group("num"):
            tokens.append(_Token("num", m.group(0), line, column))
        elif m.group("op"):
            tokens.append(_Token(m.group("op"), m.group(0), line, column))
        newlines = m.group(0).count("\n")
        if newlines:
            line += newlines
            line_start = pos + m.group(0).rfind("\n") + 1
        pos = m.end()
    tokens.append(_Token("end", "", line, len(text) - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, message: str):
        tok = self.peek()
        raise ParseError(message, tok.line, tok.column)

    def parse(self) -> dict:
        """Returns a map {exponent tuple (ragged): coefficient}."""
        terms: dict = {}
        sign = 1
        tok = self.peek()
        if tok.kind in "+-":
            self.advance()
            sign = -1 if tok.kind == "-" else 1
        self.term(terms, sign)
        while self.peek().kind != "end":
            tok = self.advance()
            if tok.kind == "+":
                self.term(terms, 1)
            elif tok.kind == "-":
                self.term(terms, -1)
            else:
                raise ParseError(
                    f"expected '+' or '-', got {tok.text!r}", tok.line, tok.column
                )
        return terms

    def term(self, terms: dict, sign: int):
        tok = self.peek()
        if tok.kind == "num":
            coeff = sign * self.coeff()
            if self.peek().kind == "*":
                self.advance()
                exps = self.mono()
            else:
                exps = {}
        elif tok.kind == "var":
            coeff = Fraction(sign)
            exps = self.mono()
        else:
            self.fail(f"expected a coefficient or variable, got {tok.text or 'end of input'!r}")
        key = tuple(sorted(exps.items()))
        terms[key] = terms.get(key, Fraction(0)) + coeff

    def coeff(self) -> Fraction:
        num = int(self.advance().text)
        if self.peek().kind == "/":
            self.advance()
            tok = self.peek()
            if tok.kind != "num":
                self.fail("expected a denominator after '/'")
            den = int(self.advance().text)
            if den == 0:
                raise ParseError("denominator must be positive", tok.line, tok.column)
            return Fraction(num, den)
        return Fraction(num)

    def mono(self) -> dict:
        exps = self.factor({})
        while self.peek().kind == "*":
            save = self.pos
            self.advance()
            if self.peek().kind != "var":
                self.pos = save  # the '*' belongs to an outer context or is an error
                break
            exps = self.factor(exps)
        return exps

    def factor(self, exps: dict) -> dict:
        tok = self.peek()
        if tok.kind != "var":
            self.fail(f"expected a variable, got {tok.text or 'end of input'!r}")
        self.advance()
        index = int(tok.text[1:])
        if index == 0:
            raise ParseError("variable index 0 is not allowed", tok.line, tok.column)
        power = 1
        if self.peek().kind == "^":
            self.advance()
            ptok = self.peek()
            if ptok.kind != "num":
                self.fail("expected an exponent after '^'")
            self.advance()
            power = int(ptok.text)
            if power > MAX_EXPONENT:
                raise ParseError(
                    f"exponent {power} exceeds the supported bound",
                    ptok.line,
                    ptok.column,
                )
        new = dict(exps)
        total = new.get(index, 0) + power
        if total > MAX_EXPONENT:
            raise ParseError(
                f"accumulated exponent for x{index} exceeds the supported bound",
                tok.line,
                tok.column,
            )
        new[index] = total
        return new


def parse_poly(text: str, min_nvars: int = 1) -> ParsedInput:
    """Parse a polynomial expression; nvars is the largest variable index
    seen (at least ``min_nvars``)."""
    terms = _Parser(text).parse()
    nvars = max(
        [min_nvars] + [idx for key in terms for idx, _ in key]
    )
    full = {}
    for key, coeff in terms.items():
        exps = [0] * nvars
        for idx, power in key:
            exps[idx - 1] = power
        full[tuple(exps)] = coeff
    return ParsedInput(poly=MultiPoly(nvars, full), nvars=nvars, source=text)


def _render_mono(m) -> str:
    parts = []
    for i, e in enumerate(m, start=1):
        if e == 1:
            parts.append(f"x{i}")
        elif e:
            parts.append(f"x{i}^{e}")
    return "*".join(parts)


def render_poly(f: MultiPoly, order: OrderSpec = OrderSpec()) -> str:
    """Canonical rendering, descending under the order; re-parseable."""
    if f.is_zero():
        return "0"
    pieces = []
    ordered = sorted(f.terms.items(), key=lambda t: sort_key(t[0], order), reverse=True)
    for m, c in ordered:
        mono = _render_mono(m) if m != mono_unit(f.nvars) else ""
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not pieces:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(pieces)
