"""Euler numbers, convergents, and Dirichlet beta coefficients."""

from fractions import Fraction
from math import comb, fsum, pi

import pytest

from parmoduli.euler import (
    cf_convergent,
    dirichlet_beta_coeff,
    euler_abs_series,
    euler_numbers,
    euler_numbers_series_oracle,
)
from parmoduli.exact import TruncatedSeries


def beta_numeric(s: int, terms: int) -> float:
    """Alternating-series oracle for beta(s) = sum (-1)^M / (2M+1)^s.

    One averaging step on consecutive partial sums accelerates the
    alternating tail from O(1/N) to O(1/N^2), ample for 1e-8 at the term
    counts used here.
    """
    partial = fsum((-1) ** m / (2 * m + 1) ** s for m in range(terms))
    nxt = partial + (-1) ** terms / (2 * terms + 1) ** s
    return (partial + nxt) / 2


class TestEulerNumbers:
    def test_first_nine(self):
        assert euler_numbers(8).values == (1, 0, -1, 0, 5, 0, -61, 0, 1385)

    def test_odd_entries_vanish(self):
        t = euler_numbers(25)
        assert all(t[j] == 0 for j in range(1, 26, 2))

    def test_e10_matches_series_division(self):
        # independent oracle: invert the cosh series and scale by 10!
        assert euler_numbers_series_oracle(10)[10] == -50521
        assert euler_numbers(10)[10] == -50521

    def test_sign_alternation(self):
        t = euler_numbers(24)
        for k in range(13):
            assert (1 if k % 2 == 0 else -1) * t[2 * k] > 0

    def test_recurrence_closure(self):
        t = euler_numbers(24)
        for n in range(1, 13):
            assert sum(comb(2 * n, 2 * k) * t[2 * k] for k in range(n + 1)) == 0

    def test_oracle_agreement_through_24(self):
        assert euler_numbers(24).values == euler_numbers_series_oracle(24).values

    def test_corrupted_copy(self):
        t = euler_numbers(8)
        bad = t.corrupted(4)
        assert bad[4] == 6 and t[4] == 5

    def test_out_of_range(self):
        with pytest.raises(IndexError):
            euler_numbers(4)[5]


class TestAbsSeries:
    def test_order_four(self):
        assert euler_abs_series(4).coefficients == (1, 0, 1, 0, 5)

    def test_order_zero(self):
        assert euler_abs_series(0).coefficients == (1,)

    def test_order_eight(self):
        assert euler_abs_series(8).coefficients == (1, 0, 1, 0, 5, 0, 61, 0, 1385)


class TestContinuedFraction:
    def test_depth_one(self):
        # 1/(1 - z^2) = 1 + z^2 + ...
        assert cf_convergent(1, 2).coefficients == (1, 0, 1)

    def test_depth_two(self):
        # (1 - 4z^2)/(1 - 5z^2) = 1 + z^2 + 5z^4 + 25z^6 + ...
        assert cf_convergent(2, 6).coefficients == (1, 0, 1, 0, 5, 0, 25)

    def test_depth_four_matches_moments(self):
        assert cf_convergent(4, 8) == euler_abs_series(8)

    def test_convergence_order(self):
        # depth d matches the moment series exactly through z^{2d} and,
        # for d < 8, diverges from it by z^{2d+2}
        for d in range(1, 9):
            conv = cf_convergent(d, 18)
            target = euler_abs_series(18)
            assert conv.coefficients[: 2 * d + 1] == target.coefficients[: 2 * d + 1]
            if d < 8:
                assert conv.coefficients[2 * d + 2] != target.coefficients[2 * d + 2]

    def test_depth_must_be_positive(self):
        with pytest.raises(ValueError):
            cf_convergent(0, 4)


class TestDirichletBeta:
    def test_exact_coefficients(self):
        assert dirichlet_beta_coeff(0).coeff == Fraction(1, 4)
        assert dirichlet_beta_coeff(1).coeff == Fraction(1, 32)
        assert dirichlet_beta_coeff(2).coeff == Fraction(5, 1536)

    def test_positivity(self):
        for l in range(8):
            assert dirichlet_beta_coeff(l).coeff > 0

    @pytest.mark.parametrize(
        "l,terms",
        [(0, 1_000_000), (1, 20_000), (2, 4_000), (3, 2_000), (4, 1_000)],
    )
    def test_against_alternating_series(self, l, terms):
        # the only approximate comparison in the package: the exact
        # coefficient times pi^(2l+1) must match the numeric sum to 1e-8
        s = 2 * l + 1
        exact = float(dirichlet_beta_coeff(l).coeff) * pi**s
        assert abs(exact - beta_numeric(s, terms)) < 1e-8
