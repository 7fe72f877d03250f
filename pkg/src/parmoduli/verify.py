"""Cross-validation suite: every result computed at least two ways.

The suite recomputes the package's headline quantities along independent
routes and records one named result per family of checks.  All
comparisons are exact.  The Euler table driving the moment-indexed checks
is injectable so that tests can corrupt a single entry and watch the
suite fail; with the default table every check passes.

Scopes: ``quick`` keeps the parameter sweeps small (genus <= 2, n <= 9),
``full`` runs the complete documented ranges (genus <= 4, n <= 17 for the
Betti cross-methods, n <= 21 for basis counts).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Callable

from . import betti, relations
from .errors import ParmoduliError
from .euler import (
    EulerTable,
    cf_convergent,
    dirichlet_beta_coeff,
    euler_abs_series,
    euler_numbers,
    euler_numbers_series_oracle,
)
from .orthopoly import cf_vs_moments, euler_moments, gram_schmidt_ortho, three_term_coeffs

__all__ = ["CheckResult", "VerificationReport", "verify_suite", "EULER_TABLE_SIZE"]

# indices E_0..E_24: enough for every sweep in the full scope
EULER_TABLE_SIZE = 24


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"


@dataclass(frozen=True)
class VerificationReport:
    scope: str
    checks: tuple[CheckResult, ...]  # sorted by name

    @property
    def overall(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def first_failure(self) -> CheckResult | None:
        for c in self.checks:
            if not c.passed:
                return c
        return None

    def render_text(self) -> str:
        width = max(len(c.name) for c in self.checks)
        lines = [
            f"{c.name.ljust(width)}  {c.status.upper():4}  {c.detail}"
            for c in self.checks
        ]
        verdict = "PASS" if self.overall else "FAIL"
        lines.append(f"{'overall'.ljust(width)}  {verdict}")
        return "\n".join(lines)


@dataclass(frozen=True)
class _Scope:
    name: str
    betti_max_genus: int
    betti_max_n: int
    h2_max_genus: int
    relation_max_n: int
    counts_max_n: int
    volume_max_genus: int
    volume_max_n: int


_SCOPES = {
    "quick": _Scope("quick", 2, 9, 2, 9, 9, 2, 9),
    "full": _Scope("full", 4, 17, 3, 17, 21, 3, 11),
}


def _params_range(max_genus: int, max_n: int):
    for g in range(max_genus + 1):
        for n in range(1, max_n + 1, 2):
            if 6 * g - 6 + 2 * n >= 0:
                yield betti.ModuliParams(g, n)


def _check_euler_values(table: EulerTable, scope: _Scope) -> str:
    expected = (1, 0, -1, 0, 5, 0, -61, 0, 1385)
    got = table.values[:9]
    assert got == expected, f"E_0..E_8 = {got}, expected {expected}"
    for j in range(1, table.max_index + 1, 2):
        assert table[j] == 0, f"E_{j} = {table[j]}, odd entries must vanish"
    for k in range(0, table.max_index // 2 + 1):
        sign = 1 if k % 2 == 0 else -1
        assert sign * table[2 * k] > 0, f"sign of E_{2 * k} wrong"
    return f"E_0..E_8 literal, parity and sign pattern through E_{table.max_index}"


def _check_euler_recurrence(table: EulerTable, scope: _Scope) -> str:
    top = table.max_index // 2
    for nn in range(1, top + 1):
        s = sum(comb(2 * nn, 2 * k) * table[2 * k] for k in range(nn + 1))
        assert s == 0, f"closure sum at 2n = {2 * nn} gives {s}"
    return f"binomial closure through E_{2 * top}"


def _check_euler_series_oracle(table: EulerTable, scope: _Scope) -> str:
    oracle = euler_numbers_series_oracle(table.max_index)
    assert oracle.values == table.values, "series division disagrees with table"
    return f"sech-series division reproduces E_0..E_{table.max_index}"


def _check_cf_convergents(table: EulerTable, scope: _Scope) -> str:
    for depth in range(1, 9):
        conv = cf_convergent(depth, 2 * depth)
        target = euler_abs_series(2 * depth, table)
        assert conv == target, f"depth {depth} convergent mismatch"
    return "depth-d convergents match |E| series through z^(2d), d <= 8"


def _check_dirichlet_beta(table: EulerTable, scope: _Scope) -> str:
    targets = {0: Fraction(1, 4), 1: Fraction(1, 32), 2: Fraction(5, 1536)}
    for l, want in targets.items():
        got = dirichlet_beta_coeff(l, table).coeff
        assert got == want, f"beta(2*{l}+1) coefficient {got}, expected {want}"
    for l in range(5):
        c = dirichlet_beta_coeff(l, table).coeff
        formula = Fraction(
            (-1) ** l * table[2 * l], 2 ** (2 * l + 2) * factorial(2 * l)
        )
        assert c == formula and c > 0, f"beta coefficient at l = {l} inconsistent"
    return "pi/4, pi^3/32, 5 pi^5/1536; positive through l = 4"


def _check_betti_cross_method(table: EulerTable, scope: _Scope) -> str:
    cases = 0
    for p in _params_range(scope.betti_max_genus, scope.betti_max_n):
        closed = betti.poincare_closed(p)
        strata = betti.poincare_strata(p)
        assert strata == closed, f"strata != closed at (g, n) = ({p.g}, {p.n})"
        if p.n >= 3 and not (p.g == 0 and p.n == 3):
            base = betti.ModuliParams(p.g, p.n - 2)
            rec = betti.poincare_recursion_n(base, betti.poincare_closed(base))
            assert rec == closed, f"n-recursion fails at (g, n) = ({p.g}, {p.n})"
        if p.g >= 1 and 6 * (p.g - 1) - 6 + 2 * p.n >= 0:
            base = betti.ModuliParams(p.g - 1, p.n)
            rec = betti.poincare_recursion_g(base, betti.poincare_closed(base))
            assert rec == closed, f"g-recursion fails at (g, n) = ({p.g}, {p.n})"
        cases += 1
    return f"strata = closed = recursions over {cases} (g, n) pairs"


def _check_betti_palindrome(table: EulerTable, scope: _Scope) -> str:
    cases = 0
    for p in _params_range(scope.betti_max_genus, scope.betti_max_n):
        poly = betti.poincare_closed(p)
        assert poly.reversed_to(p.dim) == poly, f"not palindromic at ({p.g}, {p.n})"
        cases += 1
    return f"Poincare duality over {cases} (g, n) pairs"


def _check_betti_rank_h2(table: EulerTable, scope: _Scope) -> str:
    cases = 0
    for g in range(scope.h2_max_genus + 1):
        n_range = range(5, scope.betti_max_n + 1, 2) if g == 0 else range(1, 10, 2)
        for n in n_range:
            p = betti.ModuliParams(g, n)
            if p.dim < 6:
                continue
            b2 = betti.poincare_closed(p).coeff(2)
            assert b2 == n + 1, f"b_2 = {b2} != n + 1 at (g, n) = ({g}, {n})"
            cases += 1
    return f"b_2 = n + 1 over {cases} pairs with dim >= 6"


def _check_betti_bgraded(table: EulerTable, scope: _Scope) -> str:
    for n in range(3, scope.betti_max_n + 1, 2):
        p = betti.ModuliParams(0, n)
        poly = betti.poincare_closed(p)
        counts = betti.bgraded_counts(n, max(n - 3, 0))
        for d in range(max(n - 3, 0) + 1):
            assert poly.coeff(d) == counts[d], f"n = {n}, degree {d}"
    return f"free-algebra counts match below middle dimension, n <= {scope.betti_max_n}"


def _check_relation_base_cases(table: EulerTable, scope: _Scope) -> str:
    R = relations
    assert R.relation_recurrence(1) == R.ABPoly.one()
    assert R.relation_recurrence(3) == R.ABPoly.alpha()
    assert R.relation_recurrence(5) == R.ABPoly({(2, 0): 1, (0, 1): -1})
    assert R.relation_recurrence(7) == R.ABPoly({(3, 0): 1, (1, 1): -5})
    assert R.relation_recurrence(9) == R.ABPoly({(4, 0): 1, (2, 1): -14, (0, 2): 9})
    return "r at n = 1, 3, 5, 7, 9 match their explicit forms"


def _check_relation_hankel(table: EulerTable, scope: _Scope) -> str:
    moments = euler_moments(table.max_index + 1, table)
    for n in range(3, scope.relation_max_n + 1, 2):
        via_kernel = relations.relation_hankel(n, moments)
        via_recurrence = relations.relation_recurrence(n)
        assert via_kernel == via_recurrence, f"routes disagree at n = {n}"
    return f"Hankel kernel = recurrence, odd n <= {scope.relation_max_n}"


def _check_relation_orthogonality(table: EulerTable, scope: _Scope) -> str:
    for n in range(5, scope.relation_max_n + 1, 2):
        relations.hankel_orthogonality_check(n, table)
    return f"complementary pairings vanish, odd n <= {scope.relation_max_n}"


def _check_ortho_three_term(table: EulerTable, scope: _Scope) -> str:
    moments = euler_moments(19, table)
    ops = gram_schmidt_ortho(moments, 9)
    alphas, betas = three_term_coeffs(ops)
    assert all(a == 0 for a in alphas), f"alphas {alphas} not all zero"
    assert betas == tuple(Fraction(k * k) for k in range(1, 9)), f"betas {betas}"
    for m in range(9):
        dehom = relations.relation_recurrence(2 * m + 1).dehomogenize()
        assert ops.polys[m] == dehom, f"p_{m} != dehomogenized relation"
    return "alpha_k = 0, beta_k = k^2, p_m matches relation polynomials, m <= 8"


def _check_ortho_cf(table: EulerTable, scope: _Scope) -> str:
    moments = euler_moments(19, table)
    for depth in range(1, 9):
        cf_vs_moments(moments, depth)
    return "J-fraction matches moment series through order 2d, d <= 8"


def _check_hilbert(table: EulerTable, scope: _Scope) -> str:
    for n in (3, 5, 7, 9):
        dims = relations.hilbert_series_quotient(n)
        poly = betti.poincare_closed(betti.ModuliParams(0, n))
        want = [poly.coeff(d) for d in range(len(dims))]
        assert dims == want, f"quotient dimensions at n = {n}: {dims} != {want}"
    return "presented-ring dimensions equal Betti numbers, n in {3, 5, 7, 9}"


def _check_basis_counts(table: EulerTable, scope: _Scope) -> str:
    for n in range(3, scope.counts_max_n + 1, 2):
        counts = relations.basis_degree_counts(n)
        assert counts == counts[::-1], f"counts not palindromic at n = {n}"
        poly = betti.poincare_closed(betti.ModuliParams(0, n))
        want = [poly.coeff(d) for d in range(len(counts))]
        assert counts == want, f"basis counts at n = {n} disagree with Betti numbers"
    return f"basis counts palindromic and equal Betti numbers, odd n <= {scope.counts_max_n}"


def _check_volumes(table: EulerTable, scope: _Scope) -> str:
    anchors = {
        (0, 3): Fraction(1),
        (0, 5): Fraction(1, 2),
        (1, 1): Fraction(1, 2),
    }
    for (g, n), want in anchors.items():
        got = relations.symplectic_volume(g, n, table)
        assert got == want, f"volume at (g, n) = ({g}, {n}) is {got}, expected {want}"
    cases = 0
    for g in range(scope.volume_max_genus + 1):
        for n in range(1, scope.volume_max_n + 1, 2):
            top = 3 * g + n - 3
            if top < 0:
                continue
            v = relations.symplectic_volume(g, n, table)
            x = v * 2**top * factorial(g) / factorial(top)
            assert x.denominator == 1, f"non-integral pattern at ({g}, {n})"
            assert x == table.abs(2 * g + n - 3), f"pattern mismatch at ({g}, {n})"
            cases += 1
    return f"anchor volumes 1, 1/2, 1/2; Euler-magnitude pattern over {cases} pairs"


def _check_pairings(table: EulerTable, scope: _Scope) -> str:
    assert relations.pairing_ab(0, 5, 2, 0, table) == 1
    assert relations.pairing_ab(0, 5, 0, 1, table) == 1
    assert relations.pairing_ab(1, 3, 3, 0, table) == 3
    # top alpha-power pairing at genus 0 is a bare Euler magnitude
    for n in range(3, scope.relation_max_n + 1, 2):
        assert relations.pairing_ab(0, n, n - 3, 0, table) == table.abs(n - 3)
    return "anchor pairings and genus-0 top powers"


_CHECKS: tuple[tuple[str, Callable[[EulerTable, _Scope], str]], ...] = (
    ("basis-counts", _check_basis_counts),
    ("betti-bgraded-middle", _check_betti_bgraded),
    ("betti-cross-method", _check_betti_cross_method),
    ("betti-palindrome", _check_betti_palindrome),
    ("betti-rank-h2", _check_betti_rank_h2),
    ("cf-convergents", _check_cf_convergents),
    ("dirichlet-beta", _check_dirichlet_beta),
    ("euler-recurrence-closure", _check_euler_recurrence),
    ("euler-series-oracle", _check_euler_series_oracle),
    ("euler-values", _check_euler_values),
    ("hilbert-vs-betti", _check_hilbert),
    ("ortho-cf-vs-moments", _check_ortho_cf),
    ("ortho-three-term", _check_ortho_three_term),
    ("pairings", _check_pairings),
    ("relations-base-cases", _check_relation_base_cases),
    ("relations-hankel-vs-recurrence", _check_relation_hankel),
    ("relations-orthogonality", _check_relation_orthogonality),
    ("volumes", _check_volumes),
)


def verify_suite(
    scope: str = "quick", euler_table: EulerTable | None = None
) -> VerificationReport:
    """Run every cross-check at the given scope; failures become entries.

    ``euler_table`` substitutes the table under test (the corruption hook
    used by the negative-control tests); it must cover E_0..E_24.
    """
    if scope not in _SCOPES:
        raise ValueError(f"scope must be one of {sorted(_SCOPES)}, got {scope!r}")
    sc = _SCOPES[scope]
    table = euler_table if euler_table is not None else euler_numbers(EULER_TABLE_SIZE)
    if table.max_index < EULER_TABLE_SIZE:
        raise ValueError(f"euler_table must cover E_0..E_{EULER_TABLE_SIZE}")
    results = []
    for name, fn in _CHECKS:
        try:
            detail = fn(table, sc)
            results.append(CheckResult(name=name, passed=True, detail=detail))
        except (AssertionError, ParmoduliError, ArithmeticError) as exc:
            results.append(CheckResult(name=name, passed=False, detail=str(exc)))
    results.sort(key=lambda c: c.name)
    return VerificationReport(scope=scope, checks=tuple(results))
