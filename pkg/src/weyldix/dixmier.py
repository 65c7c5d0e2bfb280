"""Dixmier classification, the ideals I_k, and derived structure tests.

For u = alpha(H) X with deg alpha = d >= 1 the centralizer is K[u] and the
ideals I_k = (ad u)^k N(u, k) of Dixmier's fifth problem are principal:

    I_k = u^(k - floor(k/(d+1))) K[u],

so I_1 I_{i(d+1)-1} and I_{i(d+1)} have exponents id+1 and id and the
chain I_{n+1} = I_1 I_n fails at every level i(d+1).  The same family's
N(u, A1) is a generalized Weyl algebra over K[H] with defining element
H sigma^-1(alpha), which decides simplicity and global dimension by
sigma-orbit inspection of its irreducible factors.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .centralizer import (
    CENTRALIZER_FIELD,
    CENTRALIZER_POLYRING,
    CentralizerA1,
    canonical_generator,
    centralizer_A1,
    n_structure,
    twisted_product,
)
from .gwa import (
    GradedElement,
    HomogeneousElement,
    ad_power,
    from_v_term,
    phi,
    structure_constant,
    v_element,
    y_power_in_x_basis,
)
from .polynomials import ONE, Poly, factor, group_by_orbit
from .ratfunc import RatFunc


class DixmierClass(enum.Enum):
    """Dixmier's partition of non-scalar elements; Delta4 is representable
    for completeness but never produced for homogeneous input."""

    DELTA1 = "Delta1"
    DELTA2 = "Delta2"
    DELTA3 = "Delta3"
    DELTA4 = "Delta4"
    DELTA5 = "Delta5"

    def __str__(self):
        return self.value


def classify(u: HomogeneousElement) -> DixmierClass:
    """Classify a non-scalar homogeneous element.

    Delta1: constant coefficient, nonzero grading (strongly nilpotent).
    Delta2: nonconstant coefficient, nonzero grading (weakly nilpotent).
    Delta3: degree-1 coefficient, zero grading (strongly semi-simple).
    Delta5: higher-degree coefficient, zero grading.
    """
    if u.is_scalar:
        raise ValueError("scalar elements are not classified")
    if u.n != 0:
        return DixmierClass.DELTA1 if u.degree == 0 else DixmierClass.DELTA2
    return DixmierClass.DELTA3 if u.degree == 1 else DixmierClass.DELTA5


def _require_alpha_x_shape(u: HomogeneousElement, operation: str) -> int:
    d = u.degree
    if u.n != 1 or d < 1:
        raise ValueError(
            f"{operation} needs u = alpha(H) X with deg alpha >= 1; "
            "for other homogeneous elements use the oracle path (oracle_ideal)"
        )
    return d


@dataclass(frozen=True)
class IdealDescriptor:
    """The ideal u^generator_exponent K[u] of C(u, A1) = K[u]."""

    k: int
    generator_exponent: int


def ideal_I(u: HomogeneousElement, k: int) -> IdealDescriptor:
    """I_k = (ad u)^k N(u, k) = u^(k - floor(k/(d+1))) K[u] for u = alpha X."""
    d = _require_alpha_x_shape(u, "ideal_I")
    if k < 1:
        raise ValueError("k must be a positive integer")
    return IdealDescriptor(k, k - k // (d + 1))


@dataclass(frozen=True)
class Problem5Row:
    i: int
    product_exponent: int  # exponent of I_1 * I_{i(d+1)-1}
    ideal_exponent: int  # exponent of I_{i(d+1)}

    @property
    def equal(self) -> bool:
        return self.product_exponent == self.ideal_exponent


@dataclass(frozen=True)
class Problem5Report:
    """Witness rows for I_1 I_{i(d+1)-1} != I_{i(d+1)}; all rows unequal
    means the stability question has a negative answer for this u."""

    d: int
    rows: tuple[Problem5Row, ...]

    @property
    def negative_answer(self) -> bool:
        return all(not row.equal for row in self.rows)


def problem5_report(u: HomogeneousElement, i_max: int) -> Problem5Report:
    d = _require_alpha_x_shape(u, "problem5_report")
    rows = []
    for i in range(1, i_max + 1):
        k = i * (d + 1)
        product = ideal_I(u, 1).generator_exponent + ideal_I(u, k - 1).generator_exponent
        rows.append(Problem5Row(i, product, ideal_I(u, k).generator_exponent))
    return Problem5Report(d, tuple(rows))


@dataclass(frozen=True)
class PowerIdentity:
    """One closed-form delta-power identity against its ad-iterated value."""

    name: str
    lhs: GradedElement  # literal (ad u)^k of the stated element
    rhs: GradedElement  # closed form

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def delta_power_identities(u: HomogeneousElement, i: int, j: int) -> list[PowerIdentity]:
    """Verify, for u = alpha X of degree d, by literal iterated ad:

        delta^i(phi_i)            = u^i
        delta^((d+1)j)(Y^j)       = (-1)^(j(d+1)) [(d+1)j]! u^(jd)
        delta^(i+(d+1)j)(phi_i Y^j) = (-1)^(j(d+1)) C(i+(d+1)j, i) [(d+1)j]! u^(i+jd)
    """
    d = _require_alpha_x_shape(u, "delta_power_identities")
    if i < 0 or j < 0:
        raise ValueError("indices must be nonnegative")
    u_elem = u.monic_element()
    u_power = lambda e: u_elem**e
    out = []

    phi_i = from_v_term(phi(i), 0)
    out.append(PowerIdentity("phi", ad_power(u_elem, phi_i, i), u_power(i)))

    if j >= 1:
        yj = y_power_in_x_basis(j)
        sign = Fraction(-1) ** (j * (d + 1))
        rhs = u_power(j * d).scale(sign * factorial((d + 1) * j))
        out.append(PowerIdentity("y_power", ad_power(u_elem, yj, (d + 1) * j), rhs))

        mixed = phi_i * yj
        order = i + (d + 1) * j
        coeff = sign * comb(order, i) * factorial((d + 1) * j)
        rhs = u_power(i + d * j).scale(coeff)
        out.append(PowerIdentity("phi_y", ad_power(u_elem, mixed, order), rhs))
    return out


@dataclass(frozen=True)
class GwaPresentation:
    """N(u, A1) = K[H](sigma^step, a) with generators Y, H, X' = alpha X."""

    a: Poly
    step: int

    def to_json_dict(self) -> dict:
        return {"a": [str(c) for c in self.a.coeffs], "step": self.step}


def n_gwa_presentation(u: HomogeneousElement) -> GwaPresentation:
    """The defining element a = H sigma^-1(alpha) of N(u, A1) as a GWA."""
    _require_alpha_x_shape(u, "n_gwa_presentation")
    return GwaPresentation(Poly((0, 1)) * u.alpha.shift(-1), 1)


def gwa_relations_hold(u: HomogeneousElement) -> bool:
    """Check Y X' = a, X' Y = sigma(a), X' H = sigma(H) X', Y H = sigma^-1(H) Y
    under the graded multiplication, with X' = alpha X."""
    pres = n_gwa_presentation(u)
    a = from_v_term(pres.a, 0)
    sigma_a = from_v_term(pres.a.shift(1), 0)
    x_prime = from_v_term(u.alpha, 1)
    y = v_element(-1)
    h = from_v_term(Poly((0, 1)), 0)
    sigma_h = from_v_term(Poly((-1, 1)), 0)
    sigma_inv_h = from_v_term(Poly((1, 1)), 0)
    return (
        y * x_prime == a
        and x_prime * y == sigma_a
        and x_prime * h == sigma_h * x_prime
        and y * h == sigma_inv_h * y
    )


def _gwa_orbit_data(u: HomogeneousElement):
    pres = n_gwa_presentation(u)
    fac = factor(pres.a)
    return fac, group_by_orbit(fac.factors, 1)


def is_simple_N(u: HomogeneousElement) -> bool:
    """Simplicity of N(u, A1): no two distinct monic irreducible factors of
    H sigma^-1(alpha) may lie in one sigma-orbit."""
    _, orbits = _gwa_orbit_data(u)
    return all(len(orbit.multiplicities) == 1 for orbit in orbits)


class GlobalDimension(enum.Enum):
    ONE = "1"
    TWO = "2"
    INFINITY = "inf"

    def __str__(self):
        return self.value


def global_dimension_N(u: HomogeneousElement) -> GlobalDimension:
    """Global dimension of N(u, A1) from the factorization of
    H sigma^-1(alpha): infinite with a repeated factor, 2 with distinct
    sigma-related factors, 1 otherwise."""
    fac, orbits = _gwa_orbit_data(u)
    if any(mult >= 2 for _, mult in fac.factors):
        return GlobalDimension.INFINITY
    if any(len(orbit.multiplicities) > 1 for orbit in orbits):
        return GlobalDimension.TWO
    return GlobalDimension.ONE


@dataclass(frozen=True)
class EigenReport:
    """Eigenstructure of ad u on A1.

    For u = c H + e the eigenvalues form the lattice c*Z and the eigenspace
    at c*m is K[H] v_m; every other homogeneous non-scalar u admits only the
    eigenvalue 0, with eigenspace C(u, A1).
    """

    lattice: bool
    step: Fraction | None
    zero_eigenspace: CentralizerA1 | str

    def eigenvalues_description(self) -> str:
        return f"{self.step}*Z" if self.lattice else "{0}"


def eigen_decompose(u: HomogeneousElement) -> EigenReport:
    if u.is_scalar:
        raise ValueError("scalar elements are excluded")
    if u.n == 0 and u.degree == 1:
        return EigenReport(True, u.scalar, CENTRALIZER_POLYRING)
    return EigenReport(False, None, centralizer_A1(u))


MODE_WEYL_OVER_N = "weyl_over_n"
MODE_N_OVER_GWA = "n_over_gwa"


def dimension_growth(
    u: HomogeneousElement, n_max: int, mode: str = MODE_WEYL_OVER_N
) -> list[int]:
    """Graded dimensions of the torsion module witnessing that A1 is not a
    finitely generated module over N(u, A1) (u of weakly nilpotent type).

    'weyl_over_n' (u = alpha X): component i of A1/N(u, A1) is
    K[H]/(alpha sigma(alpha)...sigma^(i-1)(alpha)); its dimension is the
    degree i*d of that annihilator, so the partial sums grow like
    d*n(n+1)/2.

    'n_over_gwa': component i of the v-ladder modulo the deformation
    subalgebra is K[H]/(gamma_(i*mu)); its dimension is deg gamma_(i*mu) =
    i*mu*deg(gamma), with partial sums mu*deg(gamma)*n(n+1)/2.

    Dimensions are read off the actual annihilator products, not the closed
    form; tests compare the partial sums against the quadratic.
    """
    if classify(u) != DixmierClass.DELTA2:
        raise ValueError("dimension growth is defined for weakly nilpotent u")
    if n_max < 1:
        raise ValueError("n_max must be positive")
    if mode == MODE_WEYL_OVER_N:
        _require_alpha_x_shape(u, "dimension_growth (weyl_over_n mode)")
        alpha = RatFunc(u.alpha)
        return [int(twisted_product(alpha, 1, i).degree) for i in range(1, n_max + 1)]
    if mode == MODE_N_OVER_GWA:
        ns = n_structure(u)
        mu = max(ns.mu, 1)  # mu = 0 collapses the module; use the u-ladder itself
        dims = []
        for i in range(1, n_max + 1):
            gp = ns.gamma_product(i * mu)
            assert gp.is_polynomial
            dims.append(int(gp.degree))
        return dims
    raise ValueError(f"unknown mode {mode!r}")


def type_change_check(
    p: HomogeneousElement, alpha: Poly
) -> tuple[DixmierClass, DixmierClass]:
    """Classes of p and alpha(H) p for an ad-H eigenvector p.

    p homogeneous with nonzero grading m satisfies [H, p] = m p, so with
    a = H the product alpha(a) p is again homogeneous; multiplying by a
    nonconstant alpha moves Delta1 into Delta2 and leaves Delta2 alone.
    """
    if p.n == 0:
        raise ValueError("p must have nonzero grading (an eigenvector of ad H)")
    if alpha.is_zero:
        raise ValueError("alpha must be nonzero")
    before = classify(p)
    product = p.alpha * alpha
    scaled = HomogeneousElement(
        product.monic(), p.n, p.scalar * product.leading_coeff
    )
    return before, classify(scaled)
