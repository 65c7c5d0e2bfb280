import json
from fractions import Fraction

import pytest
from hypothesis import given, settings

from weyldix import (
    GradedElement,
    ParseError,
    Poly,
    RatFunc,
    RingMembershipError,
    element_from_json_dict,
    element_to_json_dict,
    format_element,
    from_v_term,
    parse,
)
from weyldix.polynomials import H

from conftest import a1_elements, b_elements


class TestParse:
    def test_paper_relations(self):
        assert parse("Y*X") == from_v_term(H, 0)
        assert parse("X*Y") == from_v_term(H - 1, 0)
        assert parse("H*X - X*H") == parse("X")

    def test_rational_literals(self):
        assert parse("1/2") == from_v_term(Poly.constant(Fraction(1, 2)), 0)
        assert parse("H - 1/2") == from_v_term(H - Fraction(1, 2), 0)

    def test_precedence(self):
        assert parse("H + 2*X^2") == parse("H") + parse("X*X")*2
        assert parse("-H^2") == -parse("H^2")
        assert parse("(H + 1)^2") == parse("H^2 + 2*H + 1")

    def test_negative_exponents(self):
        assert parse("X^-1") == GradedElement({-1: RatFunc(1)})
        assert parse("X^(-2)") == GradedElement({-2: RatFunc(1)})
        # Y^-1 = sigma(1/H) X = X/(H-1)
        assert parse("Y^-1") == GradedElement({1: RatFunc(Poly.constant(1), H - 1)})

    def test_y_normalized_via_x_basis(self):
        assert parse("Y") == GradedElement({-1: RatFunc(H)})
        assert parse("Y^2") == GradedElement({-2: RatFunc(H * (H + 1))})

    def test_zero(self):
        assert parse("0").is_zero
        assert parse("X - X").is_zero


class TestParseErrors:
    @pytest.mark.parametrize(
        "text,position",
        [
            ("X + * Y", 4),
            ("2H", 1),
            ("(H + 1", 6),
            ("H^", 2),
            ("Z", 0),
            ("H @ X", 2),
            ("X^1/2", 2),  # the literal 1/2 starts at 2
        ],
    )
    def test_position_reported(self, text, position):
        with pytest.raises(ParseError) as err:
            parse(text)
        assert err.value.position == position

    def test_noninvertible_base(self):
        with pytest.raises(ParseError):
            parse("(X + Y)^-1")
        with pytest.raises(ParseError):
            parse("0^-1")

    def test_chained_power(self):
        with pytest.raises(ParseError):
            parse("X^2^3")

    def test_zero_denominator_literal(self):
        with pytest.raises(ParseError):
            parse("1/0")


class TestRequire:
    def test_a1_accepted(self):
        parse("H*X", require="A1")

    def test_a1_rejected(self):
        with pytest.raises(RingMembershipError):
            parse("X^-1", require="A1")
        parse("X^-1", require="LaurentA")

    def test_b_only(self):
        with pytest.raises(RingMembershipError):
            parse("H^-1", require="LaurentA")
        parse("H^-1", require="B")


class TestFormat:
    def test_graded_examples(self):
        assert format_element(parse("Y*X")) == "(H)"
        assert format_element(GradedElement({-1: RatFunc(H)})) == "(H)*X^-1"
        assert format_element(GradedElement()) == "0"

    def test_gradings_ascend(self):
        assert format_element(parse("X + Y + H")) == "(H)*X^-1 + (H) + X"

    def test_latex(self):
        assert format_element(parse("H^2 - 4*H + 5"), "latex") == r"\left(H^{2} - 4H + 5\right)"
        assert "X^{-1}" in format_element(parse("Y"), "latex")
        assert r"\frac" in format_element(parse("(H)*(H-1)^-1"), "latex")

    def test_unknown_style(self):
        with pytest.raises(ValueError):
            format_element(parse("H"), "pdf")

    @given(b_elements)
    @settings(max_examples=80)
    def test_roundtrip_b(self, e):
        assert parse(format_element(e)) == e

    @given(a1_elements)
    @settings(max_examples=80)
    def test_roundtrip_a1(self, e):
        assert parse(format_element(e)) == e


class TestJson:
    def test_schema_shape(self):
        data = element_to_json_dict(parse("H*X + Y"))
        assert data["ring"] == "A1"
        assert [t["grading"] for t in data["terms"]] == [-1, 1]
        assert all(set(t) == {"grading", "num", "den"} for t in data["terms"])
        assert data["terms"][0]["num"] == ["0", "1"]

    def test_exact_string_coefficients(self):
        data = element_to_json_dict(parse("3/2*H"))
        assert data["terms"][0]["num"] == ["0", "3/2"]

    @given(b_elements)
    @settings(max_examples=60)
    def test_roundtrip(self, e):
        blob = json.dumps(element_to_json_dict(e))
        assert element_from_json_dict(json.loads(blob)) == e

    def test_declared_ring_checked(self):
        data = element_to_json_dict(parse("X^-1"))
        data["ring"] = "A1"
        with pytest.raises(ValueError):
            element_from_json_dict(data)

    def test_format_json_style(self):
        blob = format_element(parse("H"), "json")
        assert json.loads(blob)["ring"] == "A1"
