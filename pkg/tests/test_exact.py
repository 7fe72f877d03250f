"""Exact scalar, polynomial, and truncated-series arithmetic."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from parmoduli.exact import (
    TruncatedSeries,
    UniPoly,
    parse_rational,
    poly_divide_exact,
    rational_str,
)
from parmoduli.errors import NonExactDivision, NonPolynomialResult


def P(*coeffs):
    return UniPoly(coeffs)


small_fractions = st.fractions(
    min_value=-5, max_value=5, max_denominator=6
)
small_polys = st.lists(small_fractions, min_size=0, max_size=6).map(UniPoly)


class TestRationalFormat:
    def test_integer_renders_bare(self):
        assert rational_str(Fraction(7)) == "7"
        assert rational_str(-3) == "-3"

    def test_fraction_renders_slash(self):
        assert rational_str(Fraction(-5, 4)) == "-5/4"

    def test_round_trip(self):
        for s in ("0", "7", "-5/4", "1385/41287680"):
            assert rational_str(parse_rational(s)) == s


class TestUniPoly:
    def test_canonical_strips_trailing_zeros(self):
        assert P(1, 2, 0, 0) == P(1, 2)
        assert P(0, 0).is_zero()
        assert P().degree() == -1

    def test_arithmetic(self):
        p = P(1, 0, 1)  # 1 + t^2
        q = P(0, 1)  # t
        assert p + q == P(1, 1, 1)
        assert p - p == UniPoly.zero()
        assert p * q == P(0, 1, 0, 1)
        assert 2 * p == P(2, 0, 2)
        assert p**2 == P(1, 0, 2, 0, 1)

    def test_evaluation(self):
        p = P(1, 6, 1)
        assert p(1) == 8
        assert p(Fraction(1, 2)) == Fraction(17, 4)

    def test_reversed_to_detects_palindromes(self):
        assert P(1, 0, 6, 0, 1).reversed_to(4) == P(1, 0, 6, 0, 1)
        assert P(1, 2).reversed_to(3) == P(0, 0, 2, 1)

    def test_str(self):
        assert str(P(1, 0, 6, 0, 1)) == "1 + 6*t^2 + t^4"
        assert str(P(0, -1)) == "-t"
        assert str(UniPoly.zero()) == "0"


class TestPolyDivideExact:
    def test_difference_of_squares(self):
        # (1 - t^4) / (1 - t^2) = 1 + t^2
        assert poly_divide_exact(P(1, 0, 0, 0, -1), P(1, 0, -1)) == P(1, 0, 1)

    def test_three_factor_numerator(self):
        # (1+t^2)(1-t^2)(1-t^4) / ((1-t^2)(1-t^4)) = 1 + t^2, with the
        # numerator expanded by explicit multiplication first
        num = P(1, 0, 1) * P(1, 0, -1) * P(1, 0, 0, 0, -1)
        den = P(1, 0, -1) * P(1, 0, 0, 0, -1)
        assert poly_divide_exact(num, den) == P(1, 0, 1)

    def test_nonexact_raises(self):
        # (1 + t) / (1 - t): first step leaves remainder 2t
        with pytest.raises(NonExactDivision):
            poly_divide_exact(P(1, 1), P(1, -1))

    def test_zero_numerator(self):
        assert poly_divide_exact(UniPoly.zero(), P(1, 1)) == UniPoly.zero()

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            poly_divide_exact(P(1), UniPoly.zero())

    @given(small_polys, small_polys)
    @settings(max_examples=200)
    def test_product_round_trip(self, p, q):
        if q.is_zero():
            return
        assert poly_divide_exact(p * q, q) == p


class TestTruncatedSeries:
    def test_truncation_drops_high_terms(self):
        s = TruncatedSeries.from_poly(P(1, 1), 2)
        assert (s * s * s).coefficients == (1, 3, 3)

    def test_reciprocal_geometric(self):
        s = TruncatedSeries(4, (1, -1))  # 1 - t
        assert s.reciprocal().coefficients == (1, 1, 1, 1, 1)

    def test_reciprocal_requires_unit(self):
        with pytest.raises(ZeroDivisionError):
            TruncatedSeries(3, (0, 1)).reciprocal()

    def test_division(self):
        one = TruncatedSeries.one(5)
        s = TruncatedSeries(5, (1, 0, -1))
        assert (one / s).coefficients == (1, 0, 1, 0, 1, 0)

    def test_polynomial_extraction(self):
        s = TruncatedSeries(6, (1, 0, 6, 0, 1))
        assert s.polynomial(4) == P(1, 0, 6, 0, 1)

    def test_polynomial_tail_guard(self):
        s = TruncatedSeries(6, (1, 0, 0, 0, 0, 0, 1))
        with pytest.raises(NonPolynomialResult):
            s.polynomial(4)

    def test_mixed_orders_rejected(self):
        with pytest.raises(ValueError):
            TruncatedSeries(3, (1,)) + TruncatedSeries(4, (1,))

    @given(st.lists(small_fractions, min_size=1, max_size=7))
    @settings(max_examples=200)
    def test_reciprocal_property(self, coeffs):
        if coeffs[0] == 0:
            coeffs[0] = Fraction(1)
        s = TruncatedSeries(len(coeffs) - 1, coeffs)
        assert s * s.reciprocal() == TruncatedSeries.one(s.order)
