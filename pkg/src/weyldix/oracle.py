"""Brute-force verification by exact linear algebra on truncated slices.

A Box (G, D) spans the finite subspace of A1 with basis H^e v_j, 0 <= e <= D,
|j| <= G.  Because ad u of a homogeneous u shifts the grading by a constant
and adds at most deg(alpha) + |n| to the coefficient degree, the operator
(ad u)^power maps the box exactly into the enlarged codomain box

    (G + power*|n|,  D + power*(deg alpha + |n|)),

so matrices built here represent the operator with no truncation loss, and
the kernel of (ad u)^(k+1) on the box is exactly N(u, k, A1) intersected
with the box.  The grading shift also makes every computation split into
independent per-grading blocks, which is how kernels are actually computed;
the assembled full matrix is available through ``ad_matrix``.

No floating point anywhere: rows are cleared to integers and eliminated
fraction-free (Bareiss discipline), with rational back-substitution.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .centralizer import twisted_product
from .dixmier import ideal_I
from .gwa import GradedElement, HomogeneousElement, ad, from_v_term
from .polynomials import Poly, poly_gcd
from .ratfunc import RatFunc

STANDARD_SUITE = (
    "X",
    "X^2",
    "H*X",
    "H^2*X",
    "H*(H-1)*X^2",
    "H*(H-3)*X^2",
    "Y",
    "H",
    "H^2",
)


@dataclass(frozen=True)
class Box:
    """Truncation window: |grading| <= grading_bound, coefficient degree in
    the v-basis <= hdegree_bound."""

    grading_bound: int
    hdegree_bound: int

    def __post_init__(self):
        if self.grading_bound < 0 or self.hdegree_bound < 0:
            raise ValueError("box bounds must be nonnegative")

    def basis_labels(self) -> list[tuple[int, int]]:
        """(grading, h_power) pairs, grading then power ascending."""
        return [
            (j, e)
            for j in range(-self.grading_bound, self.grading_bound + 1)
            for e in range(self.hdegree_bound + 1)
        ]

    def contains(self, e: GradedElement) -> bool:
        for j, _ in e.terms():
            if abs(j) > self.grading_bound:
                return False
            if e.v_coefficient(j).as_poly().degree > self.hdegree_bound:
                return False
        return True

    def enlarged(self, u: HomogeneousElement) -> Box:
        """One enlargement step adapted to u."""
        return Box(
            self.grading_bound + abs(u.n),
            self.hdegree_bound + u.degree + abs(u.n),
        )


@dataclass(frozen=True)
class ExactMatrix:
    """Matrix of an operator between box-spanned slices, rows/cols labeled
    by (grading, h_power) basis elements."""

    entries: tuple[tuple[Fraction, ...], ...]
    row_labels: tuple[tuple[int, int], ...]
    col_labels: tuple[tuple[int, int], ...]

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.row_labels), len(self.col_labels))

    def column(self, label: tuple[int, int]) -> tuple[Fraction, ...]:
        c = self.col_labels.index(label)
        return tuple(row[c] for row in self.entries)


def _integer_rows(rows):
    """Scale each row by the lcm of its denominators (kernel unchanged)."""
    out = []
    for row in rows:
        denom = 1
        for x in row:
            denom = denom * x.denominator // gcd(denom, x.denominator)
        out.append([int(x * denom) for x in row])
    return out


def _bareiss_echelon(mat):
    """In-place fraction-free row echelon; returns pivot (row, col) list."""
    nrows = len(mat)
    ncols = len(mat[0]) if nrows else 0
    pivots = []
    prev = 1
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, nrows) if mat[i][c] != 0), None)
        if pr is None:
            continue
        if pr != r:
            mat[r], mat[pr] = mat[pr], mat[r]
        pivot = mat[r][c]
        for i in range(r + 1, nrows):
            if all(x == 0 for x in mat[i]):
                continue
            head = mat[i][c]
            for j in range(c + 1, ncols):
                q, rem = divmod(mat[i][j] * pivot - head * mat[r][j], prev)
                assert rem == 0, "fraction-free elimination lost exactness"
                mat[i][j] = q
            mat[i][c] = 0
        prev = pivot
        pivots.append((r, c))
        r += 1
        if r == nrows:
            break
    return pivots


def exact_nullspace(rows) -> list[list[Fraction]]:
    """Basis of the right nullspace of a matrix given as Fraction rows."""
    if not rows:
        return []
    ncols = len(rows[0])
    mat = _integer_rows(rows)
    pivots = _bareiss_echelon(mat)
    pivot_cols = [c for _, c in pivots]
    free_cols = [c for c in range(ncols) if c not in pivot_cols]
    basis = []
    for fc in free_cols:
        x = [Fraction(0)] * ncols
        x[fc] = Fraction(1)
        for r, pc in reversed(pivots):
            s = sum((mat[r][cc] * x[cc] for cc in range(pc + 1, ncols)), Fraction(0))
            x[pc] = -s / mat[r][pc]
        basis.append(x)
    return basis


def matrix_rank(rows) -> int:
    if not rows:
        return 0
    return len(_bareiss_echelon(_integer_rows(rows)))


def _ad_image(u_monic: GradedElement, w: GradedElement, power: int) -> GradedElement:
    for _ in range(power):
        w = ad(u_monic, w)
    return w


# successive ad-images of box basis elements, shared across k values and
# enlargement steps; entries are immutable GradedElements
_CHAIN_CACHE: dict[tuple, list[GradedElement]] = {}


def _basis_ad_image(u: HomogeneousElement, j: int, e: int, power: int) -> GradedElement:
    key = (u.alpha, u.n, j, e)
    chain = _CHAIN_CACHE.setdefault(key, [from_v_term(Poly.monomial(e), j)])
    if len(chain) <= power:
        u_monic = u.monic_element()
        while len(chain) <= power:
            chain.append(ad(u_monic, chain[-1]))
    return chain[power]


def _image_coeff(img: GradedElement, grading: int, length: int) -> list[Fraction]:
    """Coefficient vector of a homogeneous image at the expected grading."""
    if img.is_zero:
        return [Fraction(0)] * length
    assert img.support == (grading,), "image lost homogeneity"
    poly = img.v_coefficient(grading).as_poly()
    assert poly.degree < length, "codomain degree bound violated"
    return [poly.coefficient(e) for e in range(length)]


def ad_matrix(
    u: HomogeneousElement, domain: Box, power: int = 1
) -> tuple[ExactMatrix, Box]:
    """Matrix of (ad u)^power from the domain box into the loss-free codomain."""
    if power < 1:
        raise ValueError("power must be a positive integer")
    codomain = Box(
        domain.grading_bound + power * abs(u.n),
        domain.hdegree_bound + power * (u.degree + abs(u.n)),
    )
    u_monic = u.monic_element()
    row_labels = tuple(codomain.basis_labels())
    col_labels = tuple(domain.basis_labels())
    row_index = {label: idx for idx, label in enumerate(row_labels)}
    columns = []
    for j, e in col_labels:
        img = _ad_image(u_monic, from_v_term(Poly.monomial(e), j), power)
        target = j + power * u.n
        coeffs = _image_coeff(img, target, codomain.hdegree_bound + 1)
        col = [Fraction(0)] * len(row_labels)
        for ee, c in enumerate(coeffs):
            if c:
                col[row_index[(target, ee)]] = c
        columns.append(col)
    entries = tuple(
        tuple(columns[c][r] for c in range(len(col_labels)))
        for r in range(len(row_labels))
    )
    return ExactMatrix(entries, row_labels, col_labels), codomain


def _kernel_block(u: HomogeneousElement, k: int, grading: int, hdeg: int):
    """Nullspace of (ad u)^(k+1) restricted to K[H]_(<=hdeg) v_grading,
    as coefficient vectors of length hdeg + 1."""
    power = k + 1
    target = grading + power * u.n
    length = hdeg + 1 + power * (u.degree + abs(u.n))
    rows = [[Fraction(0)] * (hdeg + 1) for _ in range(length)]
    for e in range(hdeg + 1):
        img = _basis_ad_image(u, grading, e, power)
        for ee, c in enumerate(_image_coeff(img, target, length)):
            rows[ee][e] = c
    return exact_nullspace(rows)


def kernel_power(u: HomogeneousElement, k: int, box: Box) -> list[GradedElement]:
    """Basis of N(u, k, A1) within the box: {w in box : (ad u)^(k+1) w = 0},
    computed exactly (one homogeneous element per basis vector)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    out = []
    for j in range(-box.grading_bound, box.grading_bound + 1):
        for vec in _kernel_block(u, k, j, box.hdegree_bound):
            out.append(from_v_term(Poly(vec), j))
    return out


def saturation_check(u: HomogeneousElement, k: int, box: Box) -> bool:
    """True iff enlarging the box one step adds no kernel vectors inside the
    original window: span(kernel on enlarged box) meet box == kernel on box.

    With the loss-free codomain this is a consistency check of the linear
    algebra; it can only fail on an implementation defect.
    """
    big = box.enlarged(u)
    for j in range(-box.grading_bound, box.grading_bound + 1):
        small = _kernel_block(u, k, j, box.hdegree_bound)
        big_block = _kernel_block(u, k, j, big.hdegree_bound)
        if not big_block:
            if small:
                return False
            continue
        # combinations of enlarged-kernel vectors with vanishing high coords
        high_rows = [
            [vec[e] for vec in big_block]
            for e in range(box.hdegree_bound + 1, big.hdegree_bound + 1)
        ]
        meet_dim = len(big_block) - matrix_rank(high_rows)
        if meet_dim != len(small):
            return False
    return True


class OracleInconsistency(RuntimeError):
    """The oracle produced data violating a structural invariant."""


def _as_u_polynomial(img: GradedElement, u: HomogeneousElement) -> Poly:
    """Express an element of C(u, A1) = K[u] (u = alpha X) as a polynomial
    in u (coefficients indexed by u-power)."""
    coeffs: dict[int, Fraction] = {}
    for i, _ in img.terms():
        if i < 0:
            raise OracleInconsistency("image has a negative-grading component")
        c = img.v_coefficient(i).as_poly()
        alpha_i = twisted_product(RatFunc(u.alpha), 1, i)
        lam = RatFunc(c) / alpha_i
        if not lam.is_constant:
            raise OracleInconsistency("image component is not a multiple of u^i")
        coeffs[i] = lam.constant_value()
    if not coeffs:
        return Poly()
    return Poly([coeffs.get(i, Fraction(0)) for i in range(max(coeffs) + 1)])


@dataclass(frozen=True)
class OracleIdealResult:
    """Oracle value of I_k = (ad u)^k N(u, k) as an ideal of K[u].

    ``generator`` is the monic gcd of the images expressed in K[u] (None for
    the zero ideal); ``exponent`` is its u-valuation when the generator is a
    pure power of u.  ``saturated`` certifies both the kernel saturation
    check and stability of the generator under one box enlargement;
    unsaturated results are inconclusive, not values.
    """

    k: int
    box: Box
    generator: Poly | None
    exponent: int | None
    saturated: bool


def _ideal_generator(u: HomogeneousElement, k: int, box: Box) -> Poly | None:
    gen = None
    for j in range(-box.grading_bound, box.grading_bound + 1):
        for vec in _kernel_block(u, k, j, box.hdegree_bound):
            img = GradedElement()
            for e, c in enumerate(vec):
                if c:
                    img = img + _basis_ad_image(u, j, e, k).scale(c)
            if img.is_zero:
                continue
            p = _as_u_polynomial(img, u)
            gen = p if gen is None else poly_gcd(gen, p)
    return gen.monic() if gen is not None else None


def oracle_ideal(u: HomogeneousElement, k: int, box: Box) -> OracleIdealResult:
    """Brute-force I_k for u = alpha X: apply (ad u)^k to a kernel basis of
    N(u, k) in the box and take the gcd inside K[u]."""
    if u.n != 1 or u.degree < 1:
        raise ValueError("oracle_ideal needs u = alpha(H) X with deg alpha >= 1")
    if k < 1:
        raise ValueError("k must be a positive integer")
    gen = _ideal_generator(u, k, box)
    stable = gen == _ideal_generator(u, k, box.enlarged(u))
    saturated = stable and saturation_check(u, k, box)
    exponent = None
    if gen is not None and gen == Poly.monomial(gen.degree):
        exponent = gen.degree
    return OracleIdealResult(k, box, gen, exponent, saturated)


def coordinates_in_box(elems, box: Box) -> list[list[Fraction]]:
    """Coordinate vectors over the box basis (elements must fit the box)."""
    labels = box.basis_labels()
    index = {label: i for i, label in enumerate(labels)}
    out = []
    for e in elems:
        if not box.contains(e):
            raise ValueError("element does not fit in the box")
        vec = [Fraction(0)] * len(labels)
        for j, _ in e.terms():
            poly = e.v_coefficient(j).as_poly()
            for power in range(poly.degree + 1):
                c = poly.coefficient(power)
                if c:
                    vec[index[(j, power)]] = c
        out.append(vec)
    return out


def spans_equal(first, second, box: Box) -> bool:
    """Exact equality of the spans of two element lists inside a box."""
    a = coordinates_in_box(list(first), box)
    b = coordinates_in_box(list(second), box)
    if not a and not b:
        return True
    ra = matrix_rank(a)
    rb = matrix_rank(b)
    return ra == rb == matrix_rank(a + b)
