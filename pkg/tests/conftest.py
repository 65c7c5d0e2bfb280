from fractions import Fraction

import pytest
from hypothesis import strategies as st

from weyldix import GradedElement, HomogeneousElement, Poly, RatFunc, from_v_term, parse

small_fractions = st.fractions(
    min_value=-4, max_value=4, max_denominator=3
)

small_polys = st.lists(
    st.integers(min_value=-4, max_value=4), min_size=0, max_size=4
).map(Poly)

nonzero_polys = small_polys.filter(lambda p: not p.is_zero)

monic_polys = nonzero_polys.map(lambda p: p.monic())

ratfuncs = st.builds(RatFunc, small_polys, nonzero_polys)

nonzero_ratfuncs = st.builds(RatFunc, nonzero_polys, nonzero_polys)


def _element_from_dict(d):
    return GradedElement(d)


b_elements = st.dictionaries(
    st.integers(min_value=-2, max_value=2), ratfuncs, max_size=3
).map(_element_from_dict)


def _a1_from_terms(terms):
    out = GradedElement()
    for j, coeffs in terms:
        out = out + from_v_term(Poly(coeffs), j)
    return out


a1_elements = st.lists(
    st.tuples(
        st.integers(min_value=-2, max_value=2),
        st.lists(st.integers(min_value=-3, max_value=3), min_size=0, max_size=3),
    ),
    max_size=3,
).map(_a1_from_terms)


def helem(text: str) -> HomogeneousElement:
    return HomogeneousElement.from_element(parse(text))


@pytest.fixture
def suite_elements():
    return {
        text: helem(text)
        for text in (
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
    }
