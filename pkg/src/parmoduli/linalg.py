"""Exact linear algebra over the rationals.

Two tools live here:

* :class:`RationalMatrix` - a small dense matrix of ``Fraction`` entries
  with pivoted exact Gaussian elimination, right-kernel bases, and linear
  solves.  Results are independent of pivot order because the arithmetic
  is exact.

* :class:`IntRowEchelon` - an incremental sparse echelon form over the
  integers (equivalently, over Q after clearing denominators), used for
  the large degreewise rank computations in the graded-quotient checks.
  Rows are dicts, content (gcd) is stripped after every elimination to
  keep entries small.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

__all__ = ["RationalMatrix", "IntRowEchelon", "solve_exact"]

_ZERO = Fraction(0)


class RationalMatrix:
    """Immutable dense matrix over ``Fraction``."""

    __slots__ = ("_rows", "_cols", "_e")

    def __init__(self, entries: Iterable[Iterable[Fraction | int]], cols: int | None = None):
        rows = [tuple(Fraction(x) for x in row) for row in entries]
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("ragged rows")
        else:
            if cols is None:
                raise ValueError("empty matrix needs an explicit column count")
            width = cols
        if cols is not None and rows and cols != width:
            raise ValueError("cols disagrees with row width")
        self._rows = len(rows)
        self._cols = width
        self._e = tuple(rows)

    @property
    def rows(self) -> int:
        return self._rows

    @property
    def cols(self) -> int:
        return self._cols

    @property
    def entries(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._e

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self._e[i][j]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RationalMatrix):
            return self._e == other._e and self._cols == other._cols
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._cols, self._e))

    def mul_vector(self, v: Sequence[Fraction | int]) -> tuple[Fraction, ...]:
        if len(v) != self._cols:
            raise ValueError("vector length mismatch")
        return tuple(
            sum((row[j] * Fraction(v[j]) for j in range(self._cols)), _ZERO)
            for row in self._e
        )

    def _rref(self) -> tuple[list[list[Fraction]], list[int]]:
        """Reduced row echelon form; returns (rows, pivot column indices)."""
        m = [list(row) for row in self._e]
        pivots: list[int] = []
        r = 0
        for c in range(self._cols):
            pivot_row = None
            for i in range(r, len(m)):
                if m[i][c] != 0:
                    pivot_row = i
                    break
            if pivot_row is None:
                continue
            m[r], m[pivot_row] = m[pivot_row], m[r]
            inv = 1 / m[r][c]
            m[r] = [x * inv for x in m[r]]
            for i in range(len(m)):
                if i != r and m[i][c] != 0:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == len(m):
                break
        return m, pivots

    def rank(self) -> int:
        return len(self._rref()[1])

    def kernel(self) -> list[tuple[Fraction, ...]]:
        """Basis of the right null space, one vector per free column.

        Each basis vector is scaled so its last nonzero entry is 1, which
        makes downstream fixtures deterministic.
        """
        m, pivots = self._rref()
        pivot_set = set(pivots)
        free = [c for c in range(self._cols) if c not in pivot_set]
        basis: list[tuple[Fraction, ...]] = []
        for fc in free:
            v = [_ZERO] * self._cols
            v[fc] = Fraction(1)
            for r, pc in enumerate(pivots):
                v[pc] = -m[r][fc]
            # rescale so the last nonzero coordinate is 1
            last = max(i for i, x in enumerate(v) if x != 0)
            scale = 1 / v[last]
            basis.append(tuple(x * scale for x in v))
        return basis

    def __repr__(self) -> str:
        body = "; ".join(
            "[" + ", ".join(str(x) for x in row) + "]" for row in self._e
        )
        return f"RationalMatrix({self._rows}x{self._cols}: {body})"


def solve_exact(
    columns: Sequence[Sequence[Fraction | int]], target: Sequence[Fraction | int]
) -> list[Fraction] | None:
    """Solve ``sum_j x_j * columns[j] == target`` exactly.

    Returns one solution (free variables set to 0) or ``None`` when the
    system is inconsistent.  Intended for the modest systems arising in
    reduction witnesses; the big rank computations use IntRowEchelon.
    """
    ncols = len(columns)
    dim = len(target)
    aug = [
        [Fraction(columns[j][i]) for j in range(ncols)] + [Fraction(target[i])]
        for i in range(dim)
    ]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, dim):
            if aug[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(dim):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == dim:
            break
    for i in range(r, dim):
        if aug[i][ncols] != 0:
            return None
    x = [_ZERO] * ncols
    for row, c in enumerate(pivots):
        x[c] = aug[row][ncols]
    return x


class IntRowEchelon:
    """Incremental rank of integer row vectors, exact over Q.

    Rows are sparse dicts ``{column: int}``.  Each inserted row is reduced
    by cross-multiplication against the stored pivot rows (keyed by their
    leading column) and divided by its content, so all arithmetic stays in
    Z and entries stay small.  Insertion order does not affect the final
    rank because elimination over a field is rank-preserving.
    """

    def __init__(self) -> None:
        self._pivot_rows: dict[int, dict[int, int]] = {}

    @property
    def rank(self) -> int:
        return len(self._pivot_rows)

    @staticmethod
    def _normalize(row: dict[int, int]) -> dict[int, int]:
        g = 0
        for v in row.values():
            g = gcd(g, v)
            if g == 1:
                break
        lead = min(row)
        if row[lead] < 0:
            g = -g
        if g not in (0, 1):
            return {c: v // g for c, v in row.items()}
        return row

    def reduce(self, row: dict[int, int]) -> dict[int, int]:
        """Eliminate ``row`` against the stored pivots; returns the residue."""
        row = {c: v for c, v in row.items() if v}
        while row:
            lead = min(row)
            pivot = self._pivot_rows.get(lead)
            if pivot is None:
                return self._normalize(row)
            a = pivot[lead]
            b = row[lead]
            new: dict[int, int] = {}
            for c, v in row.items():
                w = a * v - b * pivot.get(c, 0)
                if w:
                    new[c] = w
            for c, v in pivot.items():
                if c not in row:
                    w = -b * v
                    if w:
                        new[c] = w
            row = new
        return {}

    def insert(self, row: dict[int, int]) -> bool:
        """Add a row to the span; returns True if the rank grew."""
        residue = self.reduce(row)
        if not residue:
            return False
        self._pivot_rows[min(residue)] = residue
        return True

    def contains(self, row: dict[int, int]) -> bool:
        """Whether ``row`` already lies in the row span."""
        return not self.reduce(row)
