"""Euler numbers, their generating function, and Dirichlet beta values.

The Euler numbers E_n are the Taylor coefficients of sech(z) scaled by n!:

    sech(z) = 1/cosh(z) = sum_n E_n z^n / n!

so E_n = 0 for odd n and the nonzero entries alternate in sign:
1, 0, -1, 0, 5, 0, -61, 0, 1385, ...  The absolute values |E_{2n}| have the
classical continued-fraction expansion

    sum_n |E_{2n}| z^{2n} = 1/(1 - 1^2 z^2/(1 - 2^2 z^2/(1 - 3^2 z^2/(...))))

whose finite convergents are computed here exactly.  At odd arguments the
Dirichlet beta function beta(s) = sum_M (-1)^M/(2M+1)^s is a rational
multiple of pi^s:

    beta(2l+1) = (-1)^l E_{2l} / (2^{2l+2} (2l)!) * pi^{2l+1}

and that rational coefficient is what :func:`dirichlet_beta_coeff` returns.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .exact import Rational, TruncatedSeries, UniPoly

__all__ = [
    "EulerTable",
    "BetaCoefficient",
    "euler_numbers",
    "euler_numbers_series_oracle",
    "euler_abs_series",
    "cf_convergent",
    "dirichlet_beta_coeff",
]


@dataclass(frozen=True)
class EulerTable:
    """Signed Euler numbers E_0..E_{max_index} (zero at odd indices)."""

    values: tuple[int, ...]

    @property
    def max_index(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, j: int) -> int:
        if not 0 <= j <= self.max_index:
            raise IndexError(f"E_{j} not tabulated (max index {self.max_index})")
        return self.values[j]

    def abs(self, j: int) -> int:
        return abs(self[j])

    def corrupted(self, index: int, delta: int = 1) -> "EulerTable":
        """Copy with one entry perturbed; the verification-suite test hook."""
        if not 0 <= index <= self.max_index:
            raise IndexError(f"index {index} out of range")
        vals = list(self.values)
        vals[index] += delta
        return EulerTable(tuple(vals))


def euler_numbers(max_index: int) -> EulerTable:
    """E_0..E_{max_index} via the cosh-inverse recurrence, integer-only.

    Matching coefficients in cosh(z) * sech(z) = 1 degree by degree gives,
    for n >= 1,

        sum_{k=0..n} C(2n, 2k) E_{2k} = 0

    which determines E_{2n} from the earlier even entries.
    """
    if max_index < 0:
        raise ValueError("max_index must be >= 0")
    even = [1]
    for n in range(1, max_index // 2 + 1):
        s = 0
        for k in range(n):
            s += comb(2 * n, 2 * k) * even[k]
        even.append(-s)
    values = [0] * (max_index + 1)
    for k, e in enumerate(even):
        if 2 * k <= max_index:
            values[2 * k] = e
    return EulerTable(tuple(values))


def euler_numbers_series_oracle(max_index: int) -> EulerTable:
    """Independent cross-check: E_j = j! * [z^j] (1 / cosh-series).

    Deliberately avoids the recurrence of :func:`euler_numbers`; the two
    must agree exactly.
    """
    cosh = TruncatedSeries(
        max_index,
        [Fraction(1, factorial(j)) if j % 2 == 0 else 0 for j in range(max_index + 1)],
    )
    sech = cosh.reciprocal()
    values = []
    for j in range(max_index + 1):
        x = sech.coeff(j) * factorial(j)
        if x.denominator != 1:
            raise ArithmeticError(f"non-integer E_{j} from series division: {x}")
        values.append(x.numerator)
    return EulerTable(tuple(values))


def euler_abs_series(order: int, table: EulerTable | None = None) -> TruncatedSeries:
    """The moment generating series sum_{2n <= order} |E_{2n}| z^{2n}."""
    if table is None or table.max_index < order:
        table = euler_numbers(order)
    return TruncatedSeries(
        order, [abs(table[j]) if j % 2 == 0 else 0 for j in range(order + 1)]
    )


def cf_convergent(depth: int, order: int) -> TruncatedSeries:
    """Depth-``depth`` convergent of the |E| continued fraction, as a series.

    Evaluates 1/(1 - 1^2 z^2/(1 - 2^2 z^2/(... - depth^2 z^2))) bottom-up
    as a ratio of two polynomials, then expands to the requested order.
    The depth-d convergent agrees with the Euler moment series through
    z^{2d}.
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    num, den = UniPoly.one(), UniPoly.one()
    for k in range(depth, 0, -1):
        num, den = den, den - UniPoly.monomial(k * k, 2) * num
    return TruncatedSeries.from_poly(num, order) / TruncatedSeries.from_poly(den, order)


@dataclass(frozen=True)
class BetaCoefficient:
    """beta(2l+1) = coeff * pi^(2l+1), with coeff exact and positive."""

    l: int
    coeff: Rational


def dirichlet_beta_coeff(l: int, table: EulerTable | None = None) -> BetaCoefficient:
    """Exact rational coefficient of pi^{2l+1} in beta(2l+1)."""
    if l < 0:
        raise ValueError("l must be >= 0")
    if table is None or table.max_index < 2 * l:
        table = euler_numbers(2 * l)
    coeff = Fraction((-1) ** l * table[2 * l], 2 ** (2 * l + 2) * factorial(2 * l))
    return BetaCoefficient(l=l, coeff=coeff)
