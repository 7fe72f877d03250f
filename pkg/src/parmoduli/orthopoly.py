"""Moment functionals, Hankel matrices, and monic orthogonal polynomials.

A moment sequence c_0, c_1, ... defines a linear functional L on
polynomials by L(x^n) = c_n.  When the leading Hankel matrices (c_{i+j})
are nonsingular there is a unique sequence of monic orthogonal polynomials
p_0, p_1, ... with L(p_j p_k) = 0 for j != k, computed here by exact
Gram-Schmidt on the monomials.  They satisfy the three-term recurrence

    p_{k+1}(x) = (x - alpha_k) p_k(x) - beta_k p_{k-1}(x)

with alpha_k = L(x p_k^2)/L(p_k^2) and beta_k = L(p_k^2)/L(p_{k-1}^2)
(ratios of *squared* norms; that convention is the one under which the
continued-fraction identity below holds exactly), and the moment
generating function has the J-fraction expansion

    sum c_n x^n = c_0/(1 - alpha_0 x - beta_1 x^2/(1 - alpha_1 x - ...)).

The flagship instance is c_n = |E_n| (absolute Euler numbers), for which
alpha_k = 0 and beta_k = k^2.

No measure is ever constructed: the functional is the moment sequence.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DegenerateMoments,
    InsufficientMoments,
    MatchFailure,
    RecurrenceMismatch,
)
from .euler import EulerTable, euler_numbers
from .exact import Rational, TruncatedSeries, UniPoly
from .linalg import RationalMatrix

__all__ = [
    "MomentSequence",
    "OrthoPolySequence",
    "CfMomentVerdict",
    "euler_moments",
    "hankel",
    "gram_schmidt_ortho",
    "three_term_coeffs",
    "cf_vs_moments",
]


@dataclass(frozen=True)
class MomentSequence:
    """Moments c_0, c_1, ... of an abstract linear functional."""

    moments: tuple[Fraction, ...]

    @classmethod
    def of(cls, values) -> "MomentSequence":
        return cls(tuple(Fraction(v) for v in values))

    def __len__(self) -> int:
        return len(self.moments)

    def moment(self, n: int) -> Fraction:
        if n >= len(self.moments):
            raise InsufficientMoments(
                f"moment c_{n} requested, only {len(self.moments)} supplied"
            )
        return self.moments[n]

    def functional(self, p: UniPoly) -> Fraction:
        """L(p) = sum of coeff_i * c_i."""
        total = Fraction(0)
        for i, a in enumerate(p.coefficients):
            if a:
                total += a * self.moment(i)
        return total


def euler_moments(count: int, table: EulerTable | None = None) -> MomentSequence:
    """The sequence c_n = |E_n| with c_0..c_{count-1} available."""
    if table is None or table.max_index < count - 1:
        table = euler_numbers(max(count - 1, 0))
    return MomentSequence.of([abs(table[j]) for j in range(count)])


def hankel(ms: MomentSequence, m: int, parity_offset: int) -> RationalMatrix:
    """Moment matrix with entry (i, j) = c_{2e + 2i + 2j}, e = parity_offset.

    Shape floor(m/2) x (floor(m/2) + 1): one fewer row than columns, so a
    nonsingular moment functional gives a one-dimensional kernel.  Entries
    are constant along anti-diagonals (a Hankel matrix in the even-indexed
    moments).
    """
    if parity_offset not in (0, 1):
        raise ValueError("parity_offset must be 0 or 1")
    if m < 0:
        raise ValueError("m must be >= 0")
    rows = m // 2
    cols = rows + 1
    top = (2 * parity_offset + 2 * (rows - 1) + 2 * rows) if rows else 0
    if rows and top >= len(ms):
        raise InsufficientMoments(
            f"need moments through c_{top}, only {len(ms)} supplied"
        )
    return RationalMatrix(
        [
            [ms.moment(2 * parity_offset + 2 * i + 2 * j) for j in range(cols)]
            for i in range(rows)
        ],
        cols=cols,
    )


@dataclass(frozen=True)
class OrthoPolySequence:
    """Monic orthogonal polynomials p_0..p_K with their recurrence data.

    alphas has length K (alpha_0..alpha_{K-1}), betas length K-1
    (beta_1..beta_{K-1}), norms length K+1 (L(p_k^2) for each k).
    """

    polys: tuple[UniPoly, ...]
    alphas: tuple[Fraction, ...]
    betas: tuple[Fraction, ...]
    norms: tuple[Fraction, ...]

    @property
    def depth(self) -> int:
        return len(self.polys) - 1


def gram_schmidt_ortho(ms: MomentSequence, K: int) -> OrthoPolySequence:
    """Monic orthogonal polynomials p_0..p_K under the moment pairing.

    p_k is x^k minus its projections onto p_0..p_{k-1}; a vanishing
    squared norm L(p_k^2) along the way means the leading moment matrix is
    singular and raises DegenerateMoments.  Exact arithmetic makes the
    result unique, independent of summation order.
    """
    if K < 0:
        raise ValueError("K must be >= 0")
    polys: list[UniPoly] = [UniPoly.one()]
    norms: list[Fraction] = []

    def pair(a: UniPoly, b: UniPoly) -> Fraction:
        return ms.functional(a * b)

    norms.append(pair(polys[0], polys[0]))
    if norms[0] == 0:
        raise DegenerateMoments("L(1) = 0")
    for k in range(1, K + 1):
        xk = UniPoly.monomial(1, k)
        p = xk
        for j in range(k):
            c = pair(xk, polys[j]) / norms[j]
            if c:
                p = p - c * polys[j]
        polys.append(p)
        norm = pair(p, p)
        if norm == 0:
            raise DegenerateMoments(f"L(p_{k}^2) = 0")
        norms.append(norm)

    x = UniPoly.t()
    alphas = tuple(
        ms.functional(x * polys[k] * polys[k]) / norms[k] for k in range(K)
    )
    betas = tuple(norms[k] / norms[k - 1] for k in range(1, K))
    return OrthoPolySequence(
        polys=tuple(polys), alphas=alphas, betas=betas, norms=tuple(norms)
    )


def three_term_coeffs(
    ops: OrthoPolySequence,
) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    """Extract (alphas, betas) and re-verify the recurrence exactly.

    Checks p_{k+1} = (x - alpha_k) p_k - beta_k p_{k-1} for every stored
    step (the beta term is absent at k = 0 where p_{-1} = 0); any failure
    raises RecurrenceMismatch.
    """
    x = UniPoly.t()
    polys, alphas, betas = ops.polys, ops.alphas, ops.betas
    for k in range(len(polys) - 1):
        expected = (x - UniPoly((alphas[k],))) * polys[k]
        if k >= 1:
            expected = expected - betas[k - 1] * polys[k - 1]
        if expected != polys[k + 1]:
            raise RecurrenceMismatch(
                f"p_{k + 1} != (x - alpha_{k}) p_{k} - beta_{k} p_{k - 1}"
            )
    return alphas, betas


@dataclass(frozen=True)
class CfMomentVerdict:
    """Successful continued-fraction/moment comparison."""

    depth: int
    matched_through: int  # series order verified


def cf_vs_moments(ms: MomentSequence, depth: int) -> CfMomentVerdict:
    """Check the J-fraction built from (alpha, beta) against the moments.

    Builds c_0/(1 - alpha_0 x - beta_1 x^2/(... 1 - alpha_{d-1} x -
    beta_d x^2)) with d = depth levels, expands it as a truncated series,
    and compares with sum c_n x^n through order 2*depth.  The first
    disagreeing order, if any, is raised as MatchFailure.
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    ops = gram_schmidt_ortho(ms, depth + 1)
    alphas = ops.alphas
    betas = (None,) + ops.betas  # 1-indexed

    order = 2 * depth
    num, den = UniPoly.one(), UniPoly.one()
    # R_k = 1 - alpha_k x - beta_{k+1} x^2 / R_{k+1}, innermost R_depth = 1
    for k in range(depth - 1, -1, -1):
        level = UniPoly((1, -alphas[k]))
        num, den = level * num - UniPoly.monomial(betas[k + 1], 2) * den, num
    fraction = (
        TruncatedSeries.from_poly(den, order)
        * ms.moment(0)
        / TruncatedSeries.from_poly(num, order)
    )
    for i in range(order + 1):
        if fraction.coeff(i) != ms.moment(i):
            raise MatchFailure(
                i,
                f"continued fraction gives {fraction.coeff(i)}, moment c_{i} = {ms.moment(i)}",
            )
    return CfMomentVerdict(depth=depth, matched_through=order)
