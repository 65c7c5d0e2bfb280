"""Centralizers and the nilpotent filtration of homogeneous elements.

For a monic homogeneous u = alpha X^n in B (n != 0) the centralizer
C(u, B) is a Laurent polynomial ring K[v, v^-1] in a canonical generator
v = beta X^t, where t = sign(n) * s and s is the smallest positive divisor
of |n| admitting a monic solution beta of the twisted product equation

    beta * sigma^t(beta) * ... * sigma^((m-1)t)(beta) = alpha,   m = |n|/s.

``solve_beta`` finds beta by factoring alpha, grouping the irreducible
factors into sigma^s-orbits, and deconvolving each orbit's multiplicity
sequence against a window of m ones; negative multiplicities become
denominator factors.  A full reconvolution check rejects orbits with no
finitely supported solution (any valid solution is supported inside the
input support hull, so scanning the hull loses nothing).

Everything downstream of v is bookkeeping in the coefficient field: writing
v = gamma v_t, the products gamma_i = gamma sigma^t(gamma)...sigma^((i-1)t)(gamma)
decide which powers v^i lie in A1 (mu-invariants), and their numerators and
denominators give the g/f polynomials cutting out the graded components of
N(u, A1).  Nilpotent degrees fall out of H-degrees of the same data.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .gwa import (
    RING_A1,
    GradedElement,
    HomogeneousElement,
    ad,
    from_v_term,
    membership,
    structure_constant,
)
from .polynomials import ONE, Poly, factor, group_by_orbit
from .ratfunc import RatFunc

CENTRALIZER_FIELD = "K(H)"
CENTRALIZER_POLYRING = "K[H]"


class NotInFiltrationError(ValueError):
    """The element does not lie in N(u, A1)."""


class IterationLimitError(RuntimeError):
    """ad-iteration cap reached before the element vanished."""


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def twisted_product(beta: RatFunc, t: int, m: int) -> RatFunc:
    """beta * sigma^t(beta) * ... * sigma^((m-1)t)(beta)."""
    out = RatFunc(1)
    for j in range(m):
        out = out * beta.shift(j * t)
    return out


def solve_beta(alpha, s: int, m: int, sign: int = 1) -> RatFunc | None:
    """Monic beta with prod_{j<m} sigma^(sign*j*s)(beta) = alpha, or None.

    ``sign=+1`` is the n > 0 equation, ``sign=-1`` the n < 0 one.  A None
    return means no solution exists in Q(H); it is a value, not an error.
    """
    if not isinstance(alpha, RatFunc):
        alpha = RatFunc(alpha)
    if s < 1 or m < 1 or sign not in (1, -1):
        raise ValueError("solve_beta needs s >= 1, m >= 1, sign in {1, -1}")
    if alpha.is_zero or not alpha.is_monic:
        raise ValueError("alpha must be a monic rational function")
    if m == 1:
        return alpha
    if alpha.degree % m != 0:
        return None

    signed = list(factor(alpha.num).factors)
    signed += [(p, -mult) for p, mult in factor(alpha.den).factors]
    num, den = ONE, ONE
    for profile in group_by_orbit(signed, s):
        a = profile.multiplicities
        hi = max(a)
        b: dict[int, int] = {}
        indices = range(hi + 1) if sign > 0 else range(hi, -1, -1)
        for k in indices:
            acc = a.get(k, 0)
            for j in range(1, m):
                acc -= b.get(k - sign * j, 0)
            if acc:
                b[k] = acc
        conv: dict[int, int] = {}
        for k, mult in b.items():
            for j in range(m):
                idx = k + sign * j
                conv[idx] = conv.get(idx, 0) + mult
        if {k: v for k, v in conv.items() if v} != a:
            return None
        for k, mult in b.items():
            p = profile.representative.shift(k * s)
            if mult > 0:
                num = num * p**mult
            else:
                den = den * p ** (-mult)
    beta = RatFunc(num, den)
    assert twisted_product(beta, sign * s, m) == alpha
    return beta


@dataclass(frozen=True)
class CanonicalGenerator:
    """The data (beta, t, s, m) of v = beta X^t generating C(u, B); v^m = u."""

    beta: RatFunc
    t: int
    s: int
    m: int

    def element(self) -> GradedElement:
        return GradedElement({self.t: self.beta})

    def gamma(self) -> RatFunc:
        """v rewritten as gamma v_t: gamma = beta for t > 0, else
        beta * (t, -t)^-1."""
        if self.t > 0:
            return self.beta
        return self.beta / RatFunc(structure_constant(self.t, -self.t))


def _canonical_generator_b(alpha: RatFunc, n: int) -> CanonicalGenerator:
    sign = 1 if n > 0 else -1
    for s in divisors(abs(n)):
        beta = solve_beta(alpha, s, abs(n) // s, sign=sign)
        if beta is not None:
            return CanonicalGenerator(beta, sign * s, s, abs(n) // s)
    raise AssertionError("unreachable: s = |n| always admits beta = alpha")


def canonical_generator(u: HomogeneousElement) -> CanonicalGenerator:
    """Canonical generator of C(u, B) for u = alpha v_n in A1, n != 0.

    The scalar of u is irrelevant (centralizers are scale-invariant); the
    computation runs on the monic part.
    """
    if u.n == 0:
        raise ValueError("the grading of u must be nonzero")
    return _canonical_generator_b(u.x_coefficient(), u.n)


def centralizer_B(u) -> CanonicalGenerator | str:
    """C(u, B) for homogeneous non-scalar u: a CanonicalGenerator when the
    grading is nonzero, the tag "K(H)" when u is a non-scalar coefficient."""
    if isinstance(u, HomogeneousElement):
        if u.is_scalar:
            raise ValueError("scalar elements are excluded")
        if u.n == 0:
            return CENTRALIZER_FIELD
        return canonical_generator(u)
    if not isinstance(u, GradedElement):
        raise TypeError("expected a GradedElement or HomogeneousElement")
    if u.is_zero or not u.is_homogeneous:
        raise ValueError("expected a nonzero homogeneous element")
    n = u.grading()
    coeff = u.coefficient(n)
    if n == 0:
        if coeff.is_constant:
            raise ValueError("scalar elements are excluded")
        return CENTRALIZER_FIELD
    return _canonical_generator_b(coeff.monic(), n)


@dataclass(frozen=True)
class NStructure:
    """Structure data of C(u, A1) and N(u, A1) for u = alpha v_n, n != 0.

    mu_list[i] is the least j >= 0 congruent to i mod m with v^j in A1;
    g_list/f_list are the monic denominators cutting out the positive and
    negative graded components of N(u, A1) below mu.
    """

    gamma: RatFunc
    t: int
    m: int
    mu_list: tuple[int, ...]
    g_list: tuple[Poly, ...]
    f_list: tuple[Poly, ...]

    @property
    def mu(self) -> int:
        return max(self.mu_list)

    def gamma_product(self, i: int) -> RatFunc:
        """gamma sigma^t(gamma) ... sigma^((i-1)t)(gamma) (empty product 1)."""
        return twisted_product(self.gamma, self.t, i)

    def rho(self, i: int) -> RatFunc:
        """(-it, it) sigma^(-it)(gamma_product(i)): v_{-it} = rho(i) v^-i."""
        return RatFunc(structure_constant(-i * self.t, i * self.t)) * self.gamma_product(
            i
        ).shift(-i * self.t)

    def g(self, i: int) -> Poly:
        """Monic denominator of gamma_product(i) (trivial from mu on)."""
        if 1 <= i < self.mu:
            return self.g_list[i - 1]
        return ONE

    def f(self, i: int) -> Poly:
        """Monic denominator of rho(i) (trivial from mu on)."""
        if 1 <= i < self.mu:
            return self.f_list[i - 1]
        return ONE

    def v_power(self, i: int) -> GradedElement:
        """v^i as an element of B (lands in A1 exactly when i is in the
        mu-set)."""
        return from_v_term(self.gamma_product(i), i * self.t)

    def to_json_dict(self) -> dict:
        return {
            "gamma": {
                "num": [str(c) for c in self.gamma.num.coeffs],
                "den": [str(c) for c in self.gamma.den.coeffs],
            },
            "t": self.t,
            "m": self.m,
            "mu_list": list(self.mu_list),
            "g": [[str(c) for c in g.coeffs] for g in self.g_list],
            "f": [[str(c) for c in f.coeffs] for f in self.f_list],
        }


def n_structure(u: HomogeneousElement) -> NStructure:
    """Compute the full N(u, A1) structure data for u with nonzero grading."""
    return _n_structure_cached(u.alpha, u.n)


@lru_cache(maxsize=None)
def _n_structure_cached(alpha: Poly, n: int) -> NStructure:
    u = HomogeneousElement(alpha, n)
    cg = canonical_generator(u)
    gamma, t, m = cg.gamma(), cg.t, cg.m
    mu_list = []
    for r in range(m):
        gp = twisted_product(gamma, t, r)
        # proof-backed scan bound: applying ad deg(denominator) times to the
        # denominator-cleared v^r lands back in the v-ladder m*deg steps up
        bound = r + m * gp.den.degree
        j = r
        while not gp.is_polynomial:
            j += m
            if j > bound:
                raise AssertionError("mu scan exceeded its theoretical bound")
            gp = twisted_product(gamma, t, j)
        mu_list.append(j)
    mu = max(mu_list)
    g_list = []
    f_list = []
    for i in range(1, mu):
        gp = twisted_product(gamma, t, i)
        g_list.append(gp.den)
        rho = RatFunc(structure_constant(-i * t, i * t)) * gp.shift(-i * t)
        f_list.append(rho.den)
    return NStructure(gamma, t, m, tuple(mu_list), tuple(g_list), tuple(f_list))


@dataclass(frozen=True)
class CentralizerA1:
    """C(u, A1) = K[u] v^mu_0 + ... + K[u] v^mu_(m-1) with concrete generators."""

    structure: NStructure
    mu_list: tuple[int, ...]
    generators: tuple[GradedElement, ...]


def centralizer_A1(u: HomogeneousElement) -> CentralizerA1 | str:
    """C(u, A1): generator data for nonzero grading, the tag "K[H]" for
    non-scalar u in K[H]."""
    if u.is_scalar:
        raise ValueError("scalar elements are excluded")
    if u.n == 0:
        return CENTRALIZER_POLYRING
    ns = n_structure(u)
    gens = tuple(ns.v_power(mu_i) for mu_i in ns.mu_list)
    for g in gens:
        assert membership(g, RING_A1)
    return CentralizerA1(ns, ns.mu_list, gens)


def _component_ndeg(ns: NStructure, j: int, c: Poly) -> int | None:
    """Nilpotent degree of the graded component c v_j, or None outside N.

    Writing the component as h v^i inside N(u, B) = K[H][v, v^-1; sigma^t],
    its nilpotent degree is deg_H(h).
    """
    if j == 0:
        return c.degree
    if j % ns.t != 0:
        return None
    i = j // ns.t
    if i > 0:
        gp = ns.gamma_product(i)
        if not gp.num.divides(c):
            return None
        return c.degree - (gp.num.degree - gp.den.degree)
    i = -i
    if not ns.f(i).divides(c):
        return None
    return c.degree + i * (abs(ns.t) + ns.gamma.degree)


def n_membership(w: GradedElement, u: HomogeneousElement) -> bool:
    """Decide w in N(u, A1) via the graded decomposition (w must be in A1)."""
    if u.is_scalar:
        raise ValueError("scalar elements are excluded")
    if not membership(w, RING_A1):
        raise ValueError("w must be an element of A1")
    if w.is_zero:
        return True
    if u.n == 0:
        # N(u, A1) = K[H] for every non-scalar u in K[H]
        return w.support == (0,)
    ns = n_structure(u)
    for j, _ in w.terms():
        c = w.v_coefficient(j).as_poly()
        if _component_ndeg(ns, j, c) is None:
            return False
    return True


def predicted_ndeg(w: GradedElement, u: HomogeneousElement) -> int:
    """Closed-form nilpotent degree of w in N(u, A1) (max over components)."""
    if u.is_scalar:
        raise ValueError("scalar elements are excluded")
    if w.is_zero:
        raise ValueError("the zero element has no nilpotent degree")
    if not membership(w, RING_A1):
        raise ValueError("w must be an element of A1")
    if u.n == 0:
        if w.support != (0,):
            raise NotInFiltrationError("element outside N(u, A1) = K[H]")
        return w.v_coefficient(0).as_poly().degree
    ns = n_structure(u)
    best = None
    for j, _ in w.terms():
        c = w.v_coefficient(j).as_poly()
        nd = _component_ndeg(ns, j, c)
        if nd is None:
            raise NotInFiltrationError(f"component at grading {j} outside N(u, A1)")
        best = nd if best is None else max(best, nd)
    return best


def ndeg(w: GradedElement, u: HomogeneousElement, max_iterations: int = 1000) -> int:
    """Nilpotent degree by literal ad-iteration: the unique i with
    (ad u)^(i+1) w = 0 != (ad u)^i w.

    Requires w in N(u, A1); the cap only guards against runaways and raises
    a distinct diagnostic when hit.
    """
    if w.is_zero:
        raise ValueError("the zero element has no nilpotent degree")
    if not n_membership(w, u):
        raise NotInFiltrationError("element outside N(u, A1)")
    u_elem = u.element()
    count = 0
    current = w
    while not current.is_zero:
        if count > max_iterations:
            raise IterationLimitError(
                f"ad-iteration exceeded {max_iterations} steps; raise max_iterations"
            )
        current = ad(u_elem, current)
        count += 1
    return count - 1


def principal_basis(
    u: HomogeneousElement, box: tuple[int, int] = (8, 12)
) -> list[tuple[GradedElement, int]]:
    """Principal basis elements of N(u, A1) within a (grading, H-degree) box.

    Emits H^k v_{-it}, H^k f_j v_{-jt}, H^k, H^k g_j v^j, H^k v^i with
    |grading| <= box[0] and v-coefficient degree <= box[1], each paired with
    its predicted nilpotent degree:

        ndeg H^k v_{-it}     = k + i(|t| + deg gamma)      (i >= mu)
        ndeg H^k f_j v_{-jt} = k + deg f_j + j(|t| + deg gamma)
        ndeg H^k            = k
        ndeg H^k g_j v^j    = k + deg g_j
        ndeg H^k v^i        = k                            (i >= mu)
    """
    if u.n == 0:
        raise ValueError("principal_basis needs a nonzero grading")
    grading_bound, degree_bound = box
    ns = n_structure(u)
    t, mu = ns.t, ns.mu
    gamma_deg = ns.gamma.degree
    out: list[tuple[GradedElement, int]] = []

    def emit(base: Poly, grading: int, base_ndeg: int):
        for k in range(degree_bound - base.degree + 1):
            coeff = Poly.monomial(k) * base
            out.append((from_v_term(coeff, grading), k + base_ndeg))

    for i in range(grading_bound // abs(t), 0, -1):
        f_i = ns.f(i)
        emit(f_i, -i * t, f_i.degree + i * (abs(t) + gamma_deg))
    emit(ONE, 0, 0)
    for i in range(1, grading_bound // abs(t) + 1):
        gp = ns.gamma_product(i)
        if gp.num.degree > degree_bound:
            continue
        emit(gp.num, i * t, gp.den.degree)
    return out
