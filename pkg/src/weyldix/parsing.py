"""Expression front-end for elements of B (and A1).

Grammar (no implicit multiplication, '^' binds tightest, unary minus):

    expr     := term (('+'|'-') term)*
    term     := factor ('*' factor)*
    factor   := '-' factor | power
    power    := atom ['^' exponent]
    exponent := ['-'] INT | '(' ['-'] INT ')'
    atom     := NUMBER | 'X' | 'Y' | 'H' | '(' expr ')'
    NUMBER   := INT ['/' POSINT]        (a single rational literal token)

Y is eliminated as H*X^-1 while building, so the result is an element of B
in the X-power basis; its ring tag then records whether it landed in A1 or
the Laurent subalgebra.  Negative exponents require an invertible
(homogeneous single-term) base.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .gwa import (
    RING_A1,
    GradedElement,
    from_ratfunc,
    h_element,
    membership,
    x_element,
    y_element,
)
from .polynomials import Poly, format_poly
from .ratfunc import RatFunc


class ParseError(ValueError):
    """Syntax or structural error in an element expression, with position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class RingMembershipError(ValueError):
    """Parsed element does not lie in the ring a caller demanded."""


_IDENT_ATOMS = {"X", "Y", "H"}


def _tokenize(text: str):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            start = i
            while i < n and text[i].isdigit():
                i += 1
            numer = int(text[start:i])
            if i < n and text[i] == "/" and i + 1 < n and text[i + 1].isdigit():
                i += 1
                dstart = i
                while i < n and text[i].isdigit():
                    i += 1
                denom = int(text[dstart:i])
                if denom == 0:
                    raise ParseError("zero denominator in rational literal", dstart)
                tokens.append(("number", Fraction(numer, denom), start))
            else:
                tokens.append(("number", Fraction(numer), start))
            continue
        if ch.isalpha():
            if ch not in _IDENT_ATOMS:
                raise ParseError(f"unknown identifier {ch!r}", i)
            tokens.append(("ident", ch, i))
            i += 1
            continue
        if ch in "+-*^()":
            tokens.append((ch, ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(("end", None, n))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str):
        tok = self.advance()
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[0]!r}", tok[2])
        return tok

    def parse(self) -> GradedElement:
        value = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[0]!r}", tok[2])
        return value

    def expr(self) -> GradedElement:
        value = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.advance()[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> GradedElement:
        value = self.factor()
        while self.peek()[0] == "*":
            self.advance()
            value = value * self.factor()
        return value

    def factor(self) -> GradedElement:
        if self.peek()[0] == "-":
            self.advance()
            return -self.factor()
        return self.power()

    def power(self) -> GradedElement:
        base = self.atom()
        if self.peek()[0] != "^":
            return base
        caret = self.advance()
        exponent = self._exponent()
        if self.peek()[0] == "^":
            raise ParseError("chained '^' needs parentheses", self.peek()[2])
        if exponent < 0 and (base.is_zero or not base.is_homogeneous):
            raise ParseError("base of a negative exponent is not invertible", caret[2])
        return base**exponent

    def _exponent(self) -> int:
        negate = False
        tok = self.peek()
        if tok[0] == "(":
            self.advance()
            if self.peek()[0] == "-":
                self.advance()
                negate = True
            num = self.expect("number")
            self.expect(")")
        else:
            if tok[0] == "-":
                self.advance()
                negate = True
            num = self.expect("number")
        value = num[1]
        if value.denominator != 1:
            raise ParseError("exponent must be an integer", num[2])
        return -int(value) if negate else int(value)

    def atom(self) -> GradedElement:
        tok = self.advance()
        kind, value, pos = tok
        if kind == "number":
            return from_ratfunc(RatFunc(Poly((value,))))
        if kind == "ident":
            if value == "X":
                return x_element()
            if value == "Y":
                return y_element()
            return h_element()
        if kind == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        raise ParseError(f"unexpected {kind!r}", pos)


def parse(text: str, require: str | None = None) -> GradedElement:
    """Parse an expression in X, Y, H into its normal form in B.

    With ``require`` set to a ring tag, reject results outside that ring.
    """
    value = _Parser(text).parse()
    if require is not None and not membership(value, require):
        raise RingMembershipError(
            f"element lies in {value.ring}, not in the required ring {require}"
        )
    return value


def _coeff_text(c: RatFunc) -> str:
    if c.is_polynomial:
        return f"({format_poly(c.num)})"
    return f"({format_poly(c.num)})*({format_poly(c.den)})^-1"


def _term_text(j: int, c: RatFunc) -> str:
    if j == 0:
        return _coeff_text(c)
    x_part = "X" if j == 1 else f"X^{j}"
    if c == RatFunc(1):
        return x_part
    return f"{_coeff_text(c)}*{x_part}"


def _poly_latex(p: Poly) -> str:
    if p.is_zero:
        return "0"
    pieces = []
    for power in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[power]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        mag_text = str(mag) if mag.denominator == 1 else f"\\tfrac{{{mag.numerator}}}{{{mag.denominator}}}"
        if power == 0:
            body = mag_text
        else:
            head = "" if mag == 1 else mag_text
            body = f"{head}H" if power == 1 else f"{head}H^{{{power}}}"
        pieces.append((sign, body))
    out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


def _term_latex(j: int, c: RatFunc) -> str:
    if c.is_polynomial:
        coeff = f"\\left({_poly_latex(c.num)}\\right)"
    else:
        coeff = f"\\frac{{{_poly_latex(c.num)}}}{{{_poly_latex(c.den)}}}"
    if j == 0:
        return coeff
    x_part = "X" if j == 1 else f"X^{{{j}}}"
    return f"{coeff}{x_part}"


def element_to_json_dict(e: GradedElement) -> dict:
    return {
        "ring": e.ring,
        "terms": [
            {
                "grading": j,
                "num": [str(c) for c in coeff.num.coeffs],
                "den": [str(c) for c in coeff.den.coeffs],
            }
            for j, coeff in e.terms()
        ],
    }


def element_from_json_dict(data: dict) -> GradedElement:
    coeffs = {}
    for term in data["terms"]:
        num = Poly(tuple(Fraction(c) for c in term["num"]))
        den = Poly(tuple(Fraction(c) for c in term["den"]))
        coeffs[int(term["grading"])] = RatFunc(num, den)
    e = GradedElement(coeffs)
    declared = data.get("ring")
    if declared is not None and not membership(e, declared):
        raise ValueError(f"element does not lie in its declared ring {declared}")
    return e


def format_element(e: GradedElement, style: str = "graded") -> str:
    """Render an element; 'graded' output parses back to the same element."""
    if style == "json":
        return json.dumps(element_to_json_dict(e), sort_keys=True)
    if e.is_zero:
        return "0"
    if style == "graded":
        return " + ".join(_term_text(j, c) for j, c in e.terms())
    if style == "latex":
        return " + ".join(_term_latex(j, c) for j, c in e.terms())
    raise ValueError(f"unknown format style {style!r}")
