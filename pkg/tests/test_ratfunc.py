from fractions import Fraction

import pytest
from hypothesis import given

from weyldix import NEG_INF, Poly, RatFunc
from weyldix.polynomials import H

from conftest import nonzero_ratfuncs, ratfuncs


def test_reduced_and_monic_denominator():
    r = RatFunc(2 * H**2 - 2 * H, 4 * H)
    assert r.num == Poly((Fraction(-1, 2), Fraction(1, 2)))
    assert r.den == Poly((1,))
    r2 = RatFunc(H, 2 * H + 2)
    assert r2.den == H + 1  # denominator normalized monic
    assert r2.num == Poly((0, Fraction(1, 2)))


def test_zero_denominator_rejected():
    with pytest.raises(ZeroDivisionError):
        RatFunc(H, Poly())
    with pytest.raises(ZeroDivisionError):
        RatFunc(H) / RatFunc(0)


def test_telescoping_product():
    lhs = RatFunc(H, H - 1) * RatFunc(H - 1, H - 2)
    assert lhs == RatFunc(H, H - 2)


def test_degree_examples():
    assert RatFunc(H * (H - 3)).degree == 2
    assert RatFunc(H, H**2 + 1).degree == -1
    assert RatFunc(0).degree == NEG_INF


def test_denominator_example():
    assert RatFunc(H * (H - 2), H - 1).denominator() == H - 1
    assert RatFunc(H * (H - 2), H - 1).numerator() == H * (H - 2)


def test_is_polynomial():
    assert RatFunc((H + 1) * H, H + 1).is_polynomial
    assert not RatFunc(H + 1, H).is_polynomial


def test_shift_commutes_with_reduction():
    r = RatFunc(H * (H - 2), H - 1)
    assert r.shift(1) == RatFunc((H - 1) * (H - 3), H - 2)
    assert r.shift(2).shift(-2) == r


def test_power_negative():
    r = RatFunc(H, H - 1)
    assert r**-2 == RatFunc((H - 1) ** 2, H**2)
    assert r**0 == RatFunc(1)


def test_monic():
    r = RatFunc(3 * H + 3, H - 1)
    assert not r.is_monic
    assert r.monic() == RatFunc(H + 1, H - 1)


@given(ratfuncs, ratfuncs)
def test_degree_additive_on_products(a, b):
    assert (a * b).degree == a.degree + b.degree


@given(ratfuncs, ratfuncs)
def test_degree_subadditive_on_sums(a, b):
    assert (a + b).degree <= max(a.degree, b.degree)


@given(ratfuncs, ratfuncs, ratfuncs)
def test_field_laws(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a


@given(nonzero_ratfuncs)
def test_division_inverts(a):
    assert (RatFunc(H) / a) * a == RatFunc(H)
