"""The first Weyl algebra in its graded presentation inside B.

Every element is stored in the X-power basis: a finitely supported map
grading j -> coefficient in Q(H), representing  sum_j c_j(H) * X^j  inside
the skew Laurent ring B = Q(H)[X, X^-1; sigma], sigma(H) = H - 1.
Multiplication is the twisted product (f X^i)(g X^j) = f * sigma^i(g) X^(i+j).

The Weyl algebra A1 sits inside B via X -> X, Y -> H X^-1, H = YX.  Its
graded pieces are K[H] v_j with v_j = X^j for j >= 0 and v_j = Y^(-j) for
j < 0; in the X-basis v_j = H(H+1)...(H+|j|-1) X^j for j < 0, so membership
in A1 is a divisibility condition on negative-grading coefficients.

Ring tags (smallest containing ring, recomputed after every operation):

    A1        coefficients polynomial, negative gradings divisible as above
    LaurentA  coefficients polynomial (the localization A1 at powers of X)
    B         anything else
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .polynomials import ONE, Poly, falling_product
from .ratfunc import RatFunc

RING_A1 = "A1"
RING_LAURENT = "LaurentA"
RING_B = "B"

_RING_RANK = {RING_A1: 0, RING_LAURENT: 1, RING_B: 2}


def v_normalizer(j: int) -> Poly:
    """The polynomial with v_j = v_normalizer(j) * X^j: trivial for j >= 0,
    H(H+1)...(H+|j|-1) for j < 0."""
    if j >= 0:
        return ONE
    return falling_product(-j - 1, -j)


def structure_constant(n: int, m: int) -> Poly:
    """The polynomial (n, m) with v_n v_m = (n, m) v_{n+m}.

    Nontrivial only when n and m have opposite signs; then it is a product
    of min(|n|, |m|) linear factors determined by the GWA relations with
    a = H.
    """
    if n >= 0 and m >= 0 or n <= 0 and m <= 0:
        return ONE
    if n > 0:  # n > 0 > m
        count = min(n, -m)
        return falling_product(-n + count - 1, count)
    # m > 0 > n
    count = min(-n, m)
    return falling_product(-n - 1, count)


def _coerce_coeff(value) -> RatFunc:
    if isinstance(value, RatFunc):
        return value
    if isinstance(value, (Poly, int, Fraction)):
        return RatFunc(value)
    raise TypeError(f"cannot interpret {value!r} as a coefficient in Q(H)")


class GradedElement:
    """Immutable element of B in the X-power basis."""

    __slots__ = ("_coeffs", "_ring")

    def __init__(self, coeffs=None):
        data = {}
        if coeffs:
            for j, c in coeffs.items():
                c = _coerce_coeff(c)
                if not c.is_zero:
                    data[int(j)] = c
        self._coeffs = data
        self._ring = self._compute_ring()

    def _compute_ring(self) -> str:
        tag = RING_A1
        for j, c in self._coeffs.items():
            if not c.is_polynomial:
                return RING_B
            if j < 0 and tag == RING_A1 and not v_normalizer(j).divides(c.num):
                tag = RING_LAURENT
        return tag

    @property
    def ring(self) -> str:
        return self._ring

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self._coeffs))

    @property
    def is_homogeneous(self) -> bool:
        return len(self._coeffs) <= 1

    def grading(self) -> int:
        """Grading of a nonzero homogeneous element."""
        if self.is_zero or not self.is_homogeneous:
            raise ValueError("grading is defined for nonzero homogeneous elements")
        return next(iter(self._coeffs))

    def coefficient(self, j: int) -> RatFunc:
        """X-basis coefficient at grading j."""
        return self._coeffs.get(j, RatFunc(0))

    def v_coefficient(self, j: int) -> RatFunc:
        """Coefficient in the v-basis: X-coefficient divided by v_normalizer(j)."""
        return self.coefficient(j) / RatFunc(v_normalizer(j))

    def terms(self):
        """(grading, X-coefficient) pairs, gradings ascending."""
        return [(j, self._coeffs[j]) for j in sorted(self._coeffs)]

    def graded_component(self, j: int) -> GradedElement:
        c = self._coeffs.get(j)
        return GradedElement({j: c}) if c is not None else GradedElement()

    def __bool__(self):
        return bool(self._coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Poly, RatFunc)):
            other = from_ratfunc(other)
        if not isinstance(other, GradedElement):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __add__(self, other):
        if isinstance(other, (int, Fraction, Poly, RatFunc)):
            other = from_ratfunc(other)
        if not isinstance(other, GradedElement):
            return NotImplemented
        out = dict(self._coeffs)
        for j, c in other._coeffs.items():
            s = out.get(j, RatFunc(0)) + c
            if s.is_zero:
                out.pop(j, None)
            else:
                out[j] = s
        return GradedElement(out)

    __radd__ = __add__

    def __neg__(self):
        return GradedElement({j: -c for j, c in self._coeffs.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, Poly, RatFunc)):
            other = from_ratfunc(other)
        if not isinstance(other, GradedElement):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, (Poly, RatFunc)):
            other = from_ratfunc(other)
        if not isinstance(other, GradedElement):
            return NotImplemented
        out: dict[int, RatFunc] = {}
        for i, f in self._coeffs.items():
            for j, g in other._coeffs.items():
                c = f * g.shift(i)
                if c.is_zero:
                    continue
                k = i + j
                s = out.get(k, RatFunc(0)) + c
                if s.is_zero:
                    out.pop(k, None)
                else:
                    out[k] = s
        return GradedElement(out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, (Poly, RatFunc)):
            return from_ratfunc(other) * self
        return NotImplemented

    def scale(self, c) -> GradedElement:
        c = Fraction(c)
        if c == 0:
            return GradedElement()
        return GradedElement({j: f.scale(c) for j, f in self._coeffs.items()})

    def inverse(self) -> GradedElement:
        """Inverse of an invertible (single-term homogeneous) element of B."""
        if self.is_zero or not self.is_homogeneous:
            raise ValueError("only nonzero homogeneous elements are invertible in B")
        j = self.grading()
        c = self._coeffs[j]
        return GradedElement({-j: c.inverse().shift(-j)})

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __repr__(self):
        from .parsing import format_element

        return f"<{format_element(self)} | {self._ring}>"


def zero() -> GradedElement:
    return GradedElement()


def one() -> GradedElement:
    return GradedElement({0: RatFunc(1)})


def from_ratfunc(c, grading: int = 0) -> GradedElement:
    """c * X^grading."""
    return GradedElement({grading: _coerce_coeff(c)})


def from_v_term(c, j: int) -> GradedElement:
    """c * v_j (v-basis coefficient c)."""
    return GradedElement({j: _coerce_coeff(c) * RatFunc(v_normalizer(j))})


def v_element(j: int) -> GradedElement:
    """v_j itself: X^j for j >= 0, Y^(-j) for j < 0."""
    return GradedElement({j: RatFunc(v_normalizer(j))})


def x_element() -> GradedElement:
    return GradedElement({1: RatFunc(1)})


def y_element() -> GradedElement:
    return GradedElement({-1: RatFunc(Poly((0, 1)))})


def h_element() -> GradedElement:
    return GradedElement({0: RatFunc(Poly((0, 1)))})


def membership(e: GradedElement, ring: str) -> bool:
    """True iff e lies in the named ring (A1, LaurentA, or B)."""
    if ring not in _RING_RANK:
        raise ValueError(f"unknown ring tag {ring!r}")
    return _RING_RANK[e.ring] <= _RING_RANK[ring]


def ad(u: GradedElement, w: GradedElement) -> GradedElement:
    """The inner derivation ad u: w -> uw - wu."""
    return u * w - w * u


def ad_power(u: GradedElement, w: GradedElement, k: int) -> GradedElement:
    for _ in range(k):
        w = ad(u, w)
    return w


def phi(n: int) -> Poly:
    """phi_0 = 1, phi_n = (-1)^n H(H+1)...(H+n-1)/n!; satisfies
    sigma(phi_n) - phi_n = phi_{n-1}."""
    if n < 0:
        raise ValueError("phi is defined for nonnegative indices")
    if n == 0:
        return ONE
    sign = -1 if n % 2 else 1
    return falling_product(n - 1, n).scale(Fraction(sign, factorial(n)))


def y_power_in_x_basis(n: int) -> GradedElement:
    """Y^n = H(H+1)...(H+n-1) X^(-n) = (-1)^n n! phi_n X^(-n), n >= 1."""
    if n < 1:
        raise ValueError("y_power_in_x_basis needs n >= 1")
    return GradedElement({-n: RatFunc(falling_product(n - 1, n))})


@dataclass(frozen=True)
class HomogeneousElement:
    """A homogeneous element scalar * alpha(H) * v_n of A1, alpha monic."""

    alpha: Poly
    n: int
    scalar: Fraction = field(default=Fraction(1))

    def __post_init__(self):
        if self.alpha.is_zero or self.scalar == 0:
            raise ValueError("homogeneous element must be nonzero")
        if not self.alpha.is_monic:
            raise ValueError("alpha must be monic (carry the scalar separately)")

    @classmethod
    def from_element(cls, e: GradedElement) -> HomogeneousElement:
        if e.is_zero or not e.is_homogeneous:
            raise ValueError("expected a nonzero homogeneous element")
        if e.ring != RING_A1:
            raise ValueError("expected an element of A1")
        j = e.grading()
        coeff = e.v_coefficient(j).as_poly()
        return cls(coeff.monic(), j, coeff.leading_coeff)

    @property
    def degree(self) -> int:
        """deg_H of the v-basis coefficient."""
        return self.alpha.degree

    @property
    def is_scalar(self) -> bool:
        return self.n == 0 and self.alpha.is_constant

    def monic_part(self) -> HomogeneousElement:
        return HomogeneousElement(self.alpha, self.n)

    def element(self) -> GradedElement:
        return from_v_term(self.alpha.scale(self.scalar), self.n)

    def monic_element(self) -> GradedElement:
        return from_v_term(self.alpha, self.n)

    def x_coefficient(self) -> RatFunc:
        """X-basis coefficient of the monic part: alpha * v_normalizer(n)."""
        return RatFunc(self.alpha * v_normalizer(self.n))

    def __repr__(self):
        return f"HomogeneousElement(alpha={self.alpha}, n={self.n}, scalar={self.scalar})"
