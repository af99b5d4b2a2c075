"""Text syntax for exact polynomials: terms like `3/2*x^2*y` joined by
`+` and `-`, rationals written `p/q`, variables limited to x and y.
Whitespace is insignificant and parsing is bit-exact: no floating point
is ever accepted or produced.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError
from .bipoly import bipoly, bipoly_dict
from .poly import QX, Poly

_TOKEN = re.compile(r"\s*(\d+|[xy]|\^|\*|/|\+|-)")


def _tokenize(text: str) -> list[str]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            rest = text[pos:].strip()
            if rest:
                raise ParseError(f"unexpected character {rest[0]!r} in {text!r}")
            break
        tokens.append(m.group(1))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str, variables: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0
        self.variables = variables

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self):
        tok = self.peek()
        if tok is None:
            raise ParseError(f"unexpected end of input in {self.text!r}")
        self.pos += 1
        return tok

    def integer(self) -> int:
        tok = self.next()
        if not tok.isdigit():
            raise ParseError(f"expected a number, got {tok!r} in {self.text!r}")
        return int(tok)

    def factor(self) -> tuple[Fraction, int, int]:
        tok = self.peek()
        if tok is None:
            raise ParseError(f"missing factor in {self.text!r}")
        if tok.isdigit():
            num = self.integer()
            if self.peek() == "/":
                self.next()
                den = self.integer()
                if den == 0:
                    raise ParseError(f"zero denominator in {self.text!r}")
                return Fraction(num, den), 0, 0
            return Fraction(num), 0, 0
        if tok in "xy":
            self.next()
            if tok not in self.variables:
                raise ParseError(
                    f"variable {tok!r} not allowed here (expected {self.variables!r})")
            exp = 1
            if self.peek() == "^":
                self.next()
                exp = self.integer()
            return Fraction(1), exp if tok == "x" else 0, exp if tok == "y" else 0
        raise ParseError(f"expected a factor, got {tok!r} in {self.text!r}")

    def term(self) -> tuple[Fraction, int, int]:
        coeff, ex, ey = self.factor()
        while self.peek() == "*":
            self.next()
            c, dx, dy = self.factor()
            coeff, ex, ey = coeff * c, ex + dx, ey + dy
        return coeff, ex, ey

    def expression(self) -> dict[tuple[int, int], Fraction]:
        out: dict[tuple[int, int], Fraction] = {}
        sign = 1
        tok = self.peek()
        if tok in ("+", "-"):
            self.next()
            sign = -1 if tok == "-" else 1
        while True:
            coeff, ex, ey = self.term()
            key = (ex, ey)
            out[key] = out.get(key, Fraction(0)) + sign * coeff
            tok = self.peek()
            if tok is None:
                return {k: v for k, v in out.items() if v}
            if tok not in ("+", "-"):
                raise ParseError(f"expected + or -, got {tok!r} in {self.text!r}")
            self.next()
            sign = -1 if tok == "-" else 1


def parse_terms(text: str, variables: str = "xy") -> dict[tuple[int, int], Fraction]:
    if not text.strip():
        raise ParseError("empty polynomial text")
    return _Parser(text, variables).expression()


def parse_rational(text: str) -> Fraction:
    terms = parse_terms(text, variables="")
    return terms.get((0, 0), Fraction(0))


def parse_x_poly(text: str) -> Poly:
    terms = parse_terms(text, variables="x")
    return QX.poly({ex: c for (ex, _), c in terms.items()})


def parse_bipoly(text: str) -> Poly:
    return bipoly(parse_terms(text, variables="xy"))


def format_rational(q: Fraction) -> str:
    return str(Fraction(q))


def _format_terms(terms: dict[tuple[int, int], Fraction]) -> str:
    if not terms:
        return "0"
    ordered = sorted(terms.items(),
                     key=lambda kv: (kv[0][0] + kv[0][1], kv[0][0]),
                     reverse=True)
    pieces = []
    for (ex, ey), coeff in ordered:
        monomial = "*".join(
            ([f"x^{ex}" if ex > 1 else "x"] if ex else [])
            + ([f"y^{ey}" if ey > 1 else "y"] if ey else []))
        mag = abs(coeff)
        if not monomial:
            body = str(mag)
        elif mag == 1:
            body = monomial
        else:
            body = f"{mag}*{monomial}"
        pieces.append(("-" if coeff < 0 else "+", body))
    sign, body = pieces[0]
    out = body if sign == "+" else f"-{body}"
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


def format_x_poly(p: Poly) -> str:
    return _format_terms({(e, 0): c for e, c in p.terms})


def format_bipoly(p: Poly) -> str:
    return _format_terms(bipoly_dict(p))
