"""Exact dense polynomials in H over Q.

A polynomial is a tuple of Fraction coefficients indexed by power of H,
with no trailing zeros.  The zero polynomial is the empty tuple; its
degree is the sentinel ``NEG_INF`` so that degree comparisons stay total
and degree remains additive on products (deg(0*f) = NEG_INF = deg 0 + deg f).

The shift map ``sigma`` sends H to H-1; ``Poly.shift(k)`` computes
sigma^k, i.e. substitutes H-k for H.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as int_gcd

import sympy

NEG_INF = float("-inf")

_SYMPY_H = sympy.Symbol("H")


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, value) -> Poly:
        return cls((Fraction(value),))

    @classmethod
    def monomial(cls, power: int, coeff=1) -> Poly:
        return cls((0,) * power + (Fraction(coeff),))

    @property
    def degree(self):
        """Degree, or NEG_INF for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def leading_coeff(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def constant_value(self) -> Fraction:
        if not self.is_constant:
            raise ValueError(f"not a constant polynomial: {self}")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(other)
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c) -> Poly:
        c = Fraction(c)
        return Poly(tuple(a * c for a in self.coeffs))

    def monic(self) -> Poly:
        if self.is_zero:
            raise ValueError("zero polynomial has no monic normalization")
        lc = self.leading_coeff
        return self if lc == 1 else self.scale(1 / lc)

    def divmod(self, other: Poly) -> tuple[Poly, Poly]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero or len(self.coeffs) < len(other.coeffs):
            return Poly(), self
        rem = list(self.coeffs)
        dlen = len(other.coeffs)
        dlc = other.coeffs[-1]
        q = [Fraction(0)] * (len(rem) - dlen + 1)
        for top in range(len(rem) - 1, dlen - 2, -1):
            c = rem[top] / dlc
            if c == 0:
                continue
            q[top - dlen + 1] = c
            for j in range(dlen):
                rem[top - dlen + 1 + j] -= c * other.coeffs[j]
        return Poly(q), Poly(rem)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other: Poly) -> Poly:
        q, r = self.divmod(other)
        if not r.is_zero:
            raise ValueError(f"{self} is not divisible by {other}")
        return q

    def divides(self, other: Poly) -> bool:
        """True iff self divides other exactly (self nonzero)."""
        if self.is_zero:
            return other.is_zero
        return other.divmod(self)[1].is_zero

    def derivative(self) -> Poly:
        return Poly(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def shift(self, k: int) -> Poly:
        """sigma^k: substitute H-k for H."""
        if k == 0 or self.is_constant:
            return self
        base = Poly((Fraction(-k), Fraction(1)))
        result = Poly()
        for c in reversed(self.coeffs):
            result = result * base + c
        return result

    def scale_argument(self, s) -> Poly:
        """Substitute s*H for H."""
        s = Fraction(s)
        return Poly(tuple(c * s**i for i, c in enumerate(self.coeffs)))

    def evaluate(self, x) -> Fraction:
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def coefficient(self, power: int) -> Fraction:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return Fraction(0)

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


H = Poly((0, 1))
ONE = Poly((1,))
ZERO = Poly()


def format_poly(p: Poly, var: str = "H") -> str:
    """Render with descending powers, explicit '*' and '^' (parser-compatible)."""
    if p.is_zero:
        return "0"
    parts = []
    for power in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[power]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if power == 0:
            body = str(mag)
        else:
            head = "" if mag == 1 else f"{mag}*"
            body = f"{head}{var}" if power == 1 else f"{head}{var}^{power}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic GCD; gcd with zero is the monic normalization of the other input."""
    if f.is_zero and g.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    a, b = f, g
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def poly_lcm(f: Poly, g: Poly) -> Poly:
    if f.is_zero or g.is_zero:
        return ZERO
    return (f * g).exact_div(poly_gcd(f, g)).monic()


def falling_product(start: int, count: int) -> Poly:
    """(H + start)(H + start - 1) ... , `count` factors stepping down by 1."""
    out = ONE
    for j in range(count):
        out = out * Poly((Fraction(start - j), Fraction(1)))
    return out


@dataclass(frozen=True)
class Factorization:
    """unit * prod(factor^multiplicity); factors monic irreducible over Q."""

    unit: Fraction
    factors: tuple[tuple[Poly, int], ...]

    def expand(self) -> Poly:
        out = Poly.constant(self.unit)
        for p, mult in self.factors:
            out = out * p**mult
        return out

    def __iter__(self):
        return iter(self.factors)


def _poly_to_sympy(p: Poly):
    return sympy.Poly(
        [sympy.Rational(c.numerator, c.denominator) for c in reversed(p.coeffs)],
        _SYMPY_H,
        domain="QQ",
    )


def _poly_from_sympy(sp) -> Poly:
    return Poly(tuple(Fraction(c.p, c.q) for c in reversed(sp.all_coeffs())))


def factor(p: Poly) -> Factorization:
    """Exact factorization into monic irreducibles over Q with a rational unit."""
    if p.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    if p.is_constant:
        return Factorization(p.constant_value(), ())
    _, sympy_factors = _poly_to_sympy(p).factor_list()
    factors = []
    for spoly, mult in sympy_factors:
        q = _poly_from_sympy(spoly)
        if q.is_constant:
            continue
        factors.append((q.monic(), int(mult)))
    factors.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs))
    # with all factors monic, the unit is exactly the leading coefficient
    result = Factorization(p.leading_coeff, tuple(factors))
    assert result.expand() == p
    return result


@dataclass
class OrbitProfile:
    """One sigma^step-orbit of irreducible factors.

    ``multiplicities[k]`` is the multiplicity of sigma^(k*step)(representative);
    the representative carries index 0 and every occupied index is >= 0.
    Multiplicities may be negative when the profile describes a rational
    function (denominator factors).
    """

    representative: Poly
    step: int
    multiplicities: dict[int, int]

    def factor_at(self, index: int) -> Poly:
        return self.representative.shift(index * self.step)


def shift_offset(p: Poly, q: Poly) -> int | None:
    """Integer j with sigma^j(p) = q (i.e. q(H) = p(H - j)), or None.

    Both inputs must be monic nonconstant.  The candidate j is read off the
    subleading coefficients: shifting by j changes coeff[n-1] by -n*j.
    """
    n = p.degree
    if n != q.degree or n < 1:
        return None
    diff = p.coefficient(n - 1) - q.coefficient(n - 1)
    j = diff / n
    if j.denominator != 1:
        return None
    j = int(j)
    return j if p.shift(j) == q else None


def group_by_orbit(factors, step: int) -> list[OrbitProfile]:
    """Partition (monic irreducible, multiplicity) pairs into sigma^step-orbits.

    Two factors land in one profile iff one is an integer-multiple-of-step
    shift of the other.
    """
    if step < 1:
        raise ValueError("orbit step must be a positive integer")
    profiles: list[list[tuple[Poly, int, int]]] = []  # [(poly, offset_vs_base, mult)]
    for p, mult in factors:
        for group in profiles:
            j = shift_offset(group[0][0], p)
            if j is not None and j % step == 0:
                group.append((p, j // step, mult))
                break
        else:
            profiles.append([(p, 0, mult)])
    out = []
    for group in profiles:
        base_index = min(k for _, k, _ in group)
        mults: dict[int, int] = {}
        member_at: dict[int, Poly] = {}
        for p, k, mult in group:
            idx = k - base_index
            mults[idx] = mults.get(idx, 0) + mult
            member_at[idx] = p
        mults = {k: v for k, v in sorted(mults.items()) if v != 0}
        if not mults:
            continue
        lo = min(mults)
        if lo != 0:
            mults = {k - lo: v for k, v in mults.items()}
        out.append(OrbitProfile(member_at[lo], step, mults))
    out.sort(key=lambda prof: (prof.representative.degree, prof.representative.coeffs))
    return out


def orbit_decompose(fac: Factorization, s: int) -> list[OrbitProfile]:
    """Group the irreducible factors of a Factorization into sigma^s-orbits."""
    return group_by_orbit(fac.factors, s)
