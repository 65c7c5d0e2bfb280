"""Rational functions in H over Q, stored as reduced fractions of Poly.

Invariants: the denominator is monic and coprime to the numerator; zero is
0/1.  A rational function is *monic* when its numerator is monic (the
denominator always is).  Degree is deg(num) - deg(den), with the zero
function keeping the NEG_INF sentinel.
"""

from __future__ import annotations

from fractions import Fraction

from .polynomials import NEG_INF, Poly, poly_gcd


def _coerce_poly(value) -> Poly:
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)):
        return Poly.constant(value)
    raise TypeError(f"cannot interpret {value!r} as a polynomial")


class RatFunc:
    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _coerce_poly(num)
        den = Poly.constant(1) if den is None else _coerce_poly(den)
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero:
            self.num, self.den = Poly(), Poly.constant(1)
            return
        g = poly_gcd(num, den)
        if not g.is_constant:
            num = num.exact_div(g)
            den = den.exact_div(g)
        lc = den.leading_coeff
        if lc != 1:
            num = num.scale(1 / lc)
            den = den.scale(1 / lc)
        self.num, self.den = num, den

    @classmethod
    def from_poly(cls, p: Poly) -> RatFunc:
        return cls(p)

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self.den.is_constant

    @property
    def is_constant(self) -> bool:
        return self.num.is_constant and self.den.is_constant

    @property
    def is_monic(self) -> bool:
        return self.num.is_monic

    @property
    def degree(self):
        if self.is_zero:
            return NEG_INF
        return self.num.degree - self.den.degree

    def as_poly(self) -> Poly:
        if not self.is_polynomial:
            raise ValueError(f"{self} is not a polynomial")
        return self.num

    def constant_value(self) -> Fraction:
        return self.as_poly().constant_value()

    def denominator(self) -> Poly:
        """The monic denominator of the reduced form."""
        return self.den

    def numerator(self) -> Poly:
        return self.num

    def monic(self) -> RatFunc:
        if self.is_zero:
            raise ValueError("zero has no monic normalization")
        return self.scale(1 / self.num.leading_coeff)

    def leading_coeff(self) -> Fraction:
        return self.num.leading_coeff

    def scale(self, c) -> RatFunc:
        out = RatFunc.__new__(RatFunc)
        scaled = self.num.scale(c)
        if scaled.is_zero:
            out.num, out.den = Poly(), Poly.constant(1)
        else:
            out.num, out.den = scaled, self.den
        return out

    def shift(self, k: int) -> RatFunc:
        """sigma^k: substitute H-k for H (denominator stays monic)."""
        if k == 0:
            return self
        out = RatFunc.__new__(RatFunc)
        out.num, out.den = self.num.shift(k), self.den.shift(k)
        return out

    def __bool__(self):
        return not self.is_zero

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Poly)):
            other = RatFunc(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        if isinstance(other, (int, Fraction, Poly)):
            other = RatFunc(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, Poly)):
            other = RatFunc(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, Poly):
            other = RatFunc(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, Poly)):
            other = RatFunc(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return RatFunc(other) / self

    def inverse(self) -> RatFunc:
        return RatFunc(1) / self

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = RatFunc(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __repr__(self):
        return f"RatFunc({self})"

    def __str__(self):
        if self.is_polynomial:
            return str(self.num)
        return f"({self.num})/({self.den})"


RF_ZERO = RatFunc(0)
RF_ONE = RatFunc(1)
