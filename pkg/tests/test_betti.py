"""Poincare polynomials: three routes, counts, and structural checks."""

import pytest

from parmoduli.betti import (
    ModuliParams,
    bgraded_counts,
    poincare_closed,
    poincare_recursion_g,
    poincare_recursion_n,
    poincare_strata,
    structural_checks,
)
from parmoduli.errors import CheckFailed
from parmoduli.exact import UniPoly


def P(*coeffs):
    return UniPoly(coeffs)


def enumerate_bgraded(n: int, max_degree: int) -> list[int]:
    """Brute-force oracle: count monomials alpha^a beta^b delta^J of each
    degree 2a + 4b + 2|J| directly."""
    counts = [0] * (max_degree + 1)
    for a in range(max_degree // 2 + 1):
        for b in range(max_degree // 4 + 1):
            for j in range(n + 1):
                d = 2 * a + 4 * b + 2 * j
                if d <= max_degree:
                    from math import comb

                    counts[d] += comb(n, j)
    return counts


class TestModuliParams:
    def test_dimension(self):
        assert ModuliParams(0, 3).dim == 0
        assert ModuliParams(0, 5).dim == 4
        assert ModuliParams(1, 1).dim == 2
        assert ModuliParams(2, 7).dim == 20

    def test_rejects_even_n(self):
        with pytest.raises(ValueError):
            ModuliParams(0, 4)

    def test_rejects_negative_dimension(self):
        with pytest.raises(ValueError):
            ModuliParams(0, 1)

    def test_genus_one_point_allowed(self):
        assert ModuliParams(1, 1).m == 0


class TestStrataRoute:
    def test_point_moduli(self):
        assert poincare_strata(ModuliParams(0, 3)) == P(1)

    def test_five_points(self):
        assert poincare_strata(ModuliParams(0, 5)) == P(1, 0, 6, 0, 1)

    def test_genus_one(self):
        assert poincare_strata(ModuliParams(1, 1)) == P(1, 0, 1)


class TestClosedForm:
    def test_matches_strata_on_examples(self):
        for g, n in [(0, 3), (0, 5), (1, 1)]:
            p = ModuliParams(g, n)
            assert poincare_closed(p) == poincare_strata(p)

    def test_genus_one_one_point_factorization(self):
        # numerator (1+t^2)((1+t^3)^2 - t^2(1+t)^2) = (1+t^2)(1-t^2)(1-t^4)
        assert poincare_closed(ModuliParams(1, 1)) == P(1, 0, 1)


class TestRecursions:
    def test_n_step_from_point(self):
        # (1+t^2)^2 * 1 + 4t^2
        assert poincare_recursion_n(ModuliParams(0, 3), P(1)) == P(1, 0, 6, 0, 1)

    def test_n_step_to_seven_points(self):
        got = poincare_recursion_n(ModuliParams(0, 5), P(1, 0, 6, 0, 1))
        assert got == P(1, 0, 8, 0, 30, 0, 8, 0, 1)

    def test_g_step_base_cannot_exist_below_dimension_zero(self):
        with pytest.raises(ValueError):
            poincare_recursion_g(ModuliParams(0, 1), P(1))

    def test_g_step_from_point(self):
        # (1+t^3)^2 + 4t^2(1+t^2)
        got = poincare_recursion_g(ModuliParams(0, 3), P(1))
        assert got == P(1, 0, 4, 2, 4, 0, 1)
        assert got == poincare_closed(ModuliParams(1, 3))

    def test_g_step_substitution_identity(self):
        # (1+t^2)^3 + t^2(1+t)^2 at (g, n) = (1, 1) -> (1, 3)
        base = P(1, 0, 1)
        got = poincare_recursion_n(ModuliParams(1, 1), base)
        assert got == P(1, 0, 1) ** 3 + P(0, 0, 1) * P(1, 1) ** 2
        assert got == poincare_closed(ModuliParams(1, 3))

    def test_g_step_stacks_to_genus_two(self):
        base = poincare_closed(ModuliParams(1, 3))
        assert poincare_recursion_g(ModuliParams(1, 3), base) == poincare_closed(
            ModuliParams(2, 3)
        )


class TestCrossMethod:
    @pytest.mark.parametrize("g", range(5))
    def test_all_methods_agree(self, g):
        for n in range(1, 16, 2):
            if 6 * g - 6 + 2 * n < 0:
                continue
            p = ModuliParams(g, n)
            closed = poincare_closed(p)
            assert poincare_strata(p) == closed
            if n >= 3 and 6 * g - 6 + 2 * (n - 2) >= 0:
                base = ModuliParams(g, n - 2)
                assert poincare_recursion_n(base, poincare_closed(base)) == closed
            if g >= 1 and 6 * (g - 1) - 6 + 2 * n >= 0:
                base = ModuliParams(g - 1, n)
                assert poincare_recursion_g(base, poincare_closed(base)) == closed

    def test_palindromic(self):
        for g in range(4):
            for n in range(1, 12, 2):
                if 6 * g - 6 + 2 * n < 0:
                    continue
                p = ModuliParams(g, n)
                poly = poincare_closed(p)
                assert poly.reversed_to(p.dim) == poly

    def test_coefficient_sum_stable(self):
        # P(1) = total rank; identical by any route, a cheap smoke check
        for g, n in [(0, 7), (1, 5), (2, 3)]:
            p = ModuliParams(g, n)
            assert poincare_strata(p)(1) == poincare_closed(p)(1)


class TestBgradedCounts:
    def test_small_values_against_enumeration(self):
        for n in (3, 5, 7):
            assert bgraded_counts(n, 8) == enumerate_bgraded(n, 8)

    def test_degree_four_at_five_points(self):
        # alpha^2, beta, 5 alpha*delta_k, 10 delta_j delta_k: 17 monomials
        assert bgraded_counts(5, 4)[4] == 17

    def test_degree_two(self):
        assert bgraded_counts(7, 2) == [1, 0, 8]

    def test_degree_zero(self):
        assert bgraded_counts(3, 0) == [1]


class TestStructuralChecks:
    def test_five_points(self):
        report = structural_checks(ModuliParams(0, 5))
        assert "palindrome" in report.names()
        # dim 4 < 6: the b_2 value is reported rather than asserted
        assert "rank-h2-small-dim" in report.names()
        assert report.poly.coeff(2) == 6

    def test_point_space(self):
        report = structural_checks(ModuliParams(0, 3))
        assert report.poly == P(1)

    def test_seven_points_middle_agreement(self):
        report = structural_checks(ModuliParams(0, 7))
        assert "bgraded-agreement" in report.names()
        assert report.poly.coeff(2) == 8

    def test_rank_h2_asserted_in_high_dimension(self):
        for g, n in [(0, 7), (1, 3), (2, 1), (3, 5)]:
            report = structural_checks(ModuliParams(g, n))
            assert "rank-h2" in report.names()

    def test_detects_violations(self):
        with pytest.raises(CheckFailed):
            structural_checks(ModuliParams(0, 5), poly=P(1, 0, 5, 0, 1))
