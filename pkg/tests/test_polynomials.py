from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from weyldix import NEG_INF, Factorization, Poly, factor, orbit_decompose, poly_gcd, shift_offset
from weyldix.polynomials import H, ONE, falling_product, format_poly, group_by_orbit

from conftest import monic_polys, nonzero_polys, small_polys


class TestBasics:
    def test_trailing_zeros_stripped(self):
        assert Poly((1, 2, 0, 0)) == Poly((1, 2))

    def test_zero_degree_sentinel(self):
        assert Poly().degree == NEG_INF
        assert Poly().degree < 0
        assert (Poly() * H).degree == NEG_INF

    def test_monic(self):
        assert Poly((2, 4)).monic() == Poly((Fraction(1, 2), 1))
        with pytest.raises(ValueError):
            Poly().monic()

    def test_arithmetic(self):
        p = H**2 - 3 * H + 1
        q = H + 2
        assert p * q == H**3 - H**2 - 5 * H + 2
        assert (p * q).exact_div(q) == p
        quot, rem = p.divmod(q)
        assert quot * q + rem == p

    def test_evaluate(self):
        assert (H**2 + 1).evaluate(3) == 10


class TestShift:
    def test_shift_h(self):
        # sigma(H) = H - 1
        assert H.shift(1) == H - 1

    def test_shift_identity(self):
        p = 3 * H**3 - H + 5
        assert p.shift(0) == p

    def test_shift_by_hand(self):
        # (H-2)^2 + 1 = H^2 - 4H + 5
        assert (H**2 + 1).shift(2) == H**2 - 4 * H + 5

    def test_shift_degree_and_inverse(self):
        p = 2 * H**4 - 7
        assert p.shift(3).degree == p.degree
        assert p.shift(3).shift(-3) == p

    @given(small_polys, small_polys, st.integers(min_value=-5, max_value=5))
    def test_shift_is_ring_automorphism(self, f, g, k):
        assert (f * g).shift(k) == f.shift(k) * g.shift(k)
        assert (f + g).shift(k) == f.shift(k) + g.shift(k)

    def test_scale_argument(self):
        assert (H**2 + H).scale_argument(Fraction(1, 2)) == Poly((0, Fraction(1, 2), Fraction(1, 4)))


class TestGcd:
    def test_common_factor(self):
        assert poly_gcd(H**2 - H, H) == H

    def test_coprime(self):
        assert poly_gcd(H, H + 1) == ONE

    def test_gcd_with_zero(self):
        assert poly_gcd(2 * H + 2, Poly()) == H + 1

    def test_both_zero_rejected(self):
        with pytest.raises(ValueError):
            poly_gcd(Poly(), Poly())

    @given(nonzero_polys, nonzero_polys)
    def test_gcd_divides_both(self, f, g):
        d = poly_gcd(f, g)
        assert d.divides(f) and d.divides(g)
        assert d.is_monic


class TestFactor:
    def test_split_quadratic(self):
        fac = factor(H**2 - H)
        assert fac.unit == 1
        assert set(fac.factors) == {(H, 1), (H - 1, 1)}

    def test_irreducible_over_q(self):
        fac = factor(H**2 + 1)
        assert fac.unit == 1
        assert fac.factors == ((H**2 + 1, 1),)

    def test_unit_extraction(self):
        fac = factor(2 * H**2 + 2 * H)
        assert fac.unit == 2
        assert set(fac.factors) == {(H, 1), (H + 1, 1)}

    def test_constant(self):
        assert factor(Poly.constant(Fraction(3, 5))) == Factorization(Fraction(3, 5), ())

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            factor(Poly())

    def test_multiplicity(self):
        fac = factor((H + 1) ** 3 * (H**2 + 2))
        assert dict((str(p), m) for p, m in fac.factors) == {"H + 1": 3, "H^2 + 2": 1}

    @given(monic_polys, monic_polys, st.fractions(min_value=-3, max_value=3).filter(bool))
    def test_roundtrip_bit_exact(self, p, q, unit):
        fac = factor((p * q).scale(unit))
        assert fac.expand() == (p * q).scale(unit)


class TestOrbits:
    def test_shift_offset(self):
        assert shift_offset(H, H - 1) == 1
        assert shift_offset(H, H + 3) == -3
        assert shift_offset(H, H + Fraction(1, 2)) is None
        assert shift_offset(H**2 + 1, H**2 + H) is None

    def test_adjacent_orbit(self):
        profiles = orbit_decompose(factor(H * (H - 1)), 1)
        assert len(profiles) == 1
        assert profiles[0].representative == H
        assert profiles[0].multiplicities == {0: 1, 1: 1}

    def test_half_shift_splits(self):
        profiles = orbit_decompose(factor(H * (H + Fraction(1, 2))), 1)
        assert len(profiles) == 2

    def test_repeated_factor(self):
        profiles = orbit_decompose(factor(H**2), 1)
        assert len(profiles) == 1
        assert profiles[0].multiplicities == {0: 2}

    def test_step_respects_s(self):
        # H and H-1 are sigma-related but not sigma^2-related
        assert len(orbit_decompose(factor(H * (H - 1)), 2)) == 2
        assert len(orbit_decompose(factor(H * (H - 2)), 2)) == 1

    def test_partition_matches_direct_shift_test(self):
        polys = [H, H - 1, H - 5, H + Fraction(1, 2), H**2 + 1, (H - 3) ** 2 + 1]
        factors = [(p.monic() if not p.is_monic else p, 1) for p in polys]
        for s in (1, 2):
            profiles = group_by_orbit(factors, s)
            located = {}
            for idx, prof in enumerate(profiles):
                for k in prof.multiplicities:
                    located[str(prof.factor_at(k))] = idx
            for p in polys:
                for q in polys:
                    offset = shift_offset(p, q)
                    same = offset is not None and offset % s == 0
                    assert (located[str(p)] == located[str(q)]) == same

    def test_negative_multiplicities_supported(self):
        profiles = group_by_orbit([(H, 1), (H - 1, -1)], 1)
        assert profiles[0].multiplicities == {0: 1, 1: -1}

    def test_reconstruction(self):
        fac = factor(H * (H - 1) ** 2 * (H**2 + 1))
        profiles = orbit_decompose(fac, 1)
        total = ONE
        for prof in profiles:
            for k, mult in prof.multiplicities.items():
                total = total * prof.factor_at(k) ** mult
        assert total == fac.expand().monic()


def test_falling_product():
    assert falling_product(2, 3) == (H + 2) * (H + 1) * H
    assert falling_product(0, 0) == ONE


def test_format_poly():
    assert format_poly(H**2 - 4 * H + 5) == "H^2 - 4*H + 5"
    assert format_poly(Poly()) == "0"
    assert format_poly(-H) == "-H"
    assert format_poly(Poly((Fraction(3, 2), 0, 1))) == "H^2 + 3/2"
