"""Exact rational scalars, dense univariate polynomials, and truncated series.

Every quantity in this package is an exact rational number; no floating
point is used anywhere in the computations.  The scalar type is the
standard-library ``fractions.Fraction`` (always in lowest terms, positive
denominator), re-exported as :data:`Rational`.

``UniPoly`` is a dense polynomial in one variable ``t`` with ``Rational``
coefficients, kept canonical (no trailing zero coefficients, the zero
polynomial has no coefficients at all) so that equality is structural.

``TruncatedSeries`` is a power series in ``t`` capped at a fixed order:
all arithmetic discards terms above the cap.  Reciprocals exist exactly
when the constant term is nonzero.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import NonExactDivision, NonPolynomialResult

__all__ = [
    "Rational",
    "RationalLike",
    "rational_str",
    "parse_rational",
    "UniPoly",
    "TruncatedSeries",
    "poly_divide_exact",
]

Rational = Fraction
RationalLike = Union[int, Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def rational_str(x: RationalLike) -> str:
    """Render ``p/q`` (or just ``p`` when q = 1); the JSON wire format."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    """Inverse of :func:`rational_str`."""
    return Fraction(s)


def _as_fraction(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


class UniPoly:
    """Dense univariate polynomial over ``Rational``, canonical form.

    Coefficient ``i`` multiplies ``t**i``.  Instances are immutable; all
    operations return new polynomials.
    """

    __slots__ = ("_c",)

    def __init__(self, coefficients: Iterable[RationalLike] = ()):
        c = [_as_fraction(x) for x in coefficients]
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "UniPoly":
        return cls(())

    @classmethod
    def one(cls) -> "UniPoly":
        return cls((1,))

    @classmethod
    def t(cls) -> "UniPoly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, coeff: RationalLike, power: int) -> "UniPoly":
        if power < 0:
            raise ValueError("power must be >= 0")
        return cls([0] * power + [coeff])

    # -- structure ----------------------------------------------------

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._c

    def coeff(self, i: int) -> Fraction:
        """Coefficient of ``t**i`` (zero beyond the stored degree)."""
        if 0 <= i < len(self._c):
            return self._c[i]
        return _ZERO

    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self._c) - 1

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, UniPoly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self == UniPoly((other,))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "UniPoly | RationalLike") -> "UniPoly":
        other = self._coerce(other)
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return UniPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly(tuple(-x for x in self._c))

    def __sub__(self, other: "UniPoly | RationalLike") -> "UniPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other: RationalLike) -> "UniPoly":
        return self._coerce(other) - self

    def __mul__(self, other: "UniPoly | RationalLike") -> "UniPoly":
        if isinstance(other, (int, Fraction)):
            x = _as_fraction(other)
            return UniPoly(tuple(c * x for c in self._c))
        if not isinstance(other, UniPoly):
            return NotImplemented
        if not self._c or not other._c:
            return UniPoly.zero()
        out = [_ZERO] * (len(self._c) + len(other._c) - 1)
        for i, a in enumerate(self._c):
            if a == 0:
                continue
            for j, b in enumerate(other._c):
                if b:
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "UniPoly":
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result = UniPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def shift(self, k: int) -> "UniPoly":
        """Multiply by ``t**k``."""
        if k < 0:
            raise ValueError("shift must be >= 0")
        if not self._c:
            return self
        return UniPoly((0,) * k + self._c)

    def __call__(self, x: RationalLike) -> Fraction:
        """Evaluate at an exact point (Horner)."""
        x = _as_fraction(x)
        acc = _ZERO
        for c in reversed(self._c):
            acc = acc * x + c
        return acc

    def reversed_to(self, degree: int) -> "UniPoly":
        """``t**degree * p(1/t)``: the coefficient list reversed within
        ``degree + 1`` slots.  Requires ``degree >= self.degree()``."""
        if degree < self.degree():
            raise ValueError("degree bound below actual degree")
        out = [_ZERO] * (degree + 1)
        for i, c in enumerate(self._c):
            out[degree - i] = c
        return UniPoly(out)

    @staticmethod
    def _coerce(x: "UniPoly | RationalLike") -> "UniPoly":
        if isinstance(x, UniPoly):
            return x
        return UniPoly((_as_fraction(x),))

    # -- display ------------------------------------------------------

    def __repr__(self) -> str:
        return f"UniPoly({list(self._c)!r})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for i, c in enumerate(self._c):
            if c == 0:
                continue
            if i == 0:
                term = rational_str(c)
            else:
                t = "t" if i == 1 else f"t^{i}"
                if c == 1:
                    term = t
                elif c == -1:
                    term = f"-{t}"
                else:
                    term = f"{rational_str(c)}*{t}"
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out


def poly_divide_exact(num: UniPoly, den: UniPoly) -> UniPoly:
    """Exact polynomial quotient: returns q with ``q * den == num``.

    This is an exactness assertion, not Euclidean division: a nonzero
    remainder raises :class:`NonExactDivision` (it would mean a formula
    was transcribed wrongly, since every division in this package is of a
    numerator constructed to be divisible).
    """
    if den.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if num.is_zero():
        return UniPoly.zero()
    dn, dd = num.degree(), den.degree()
    if dn < dd:
        raise NonExactDivision(f"degree {dn} numerator not divisible by degree {dd}")
    rem = list(num.coefficients) + [_ZERO] * 0
    q = [_ZERO] * (dn - dd + 1)
    lead = den.coefficients[-1]
    for k in range(dn - dd, -1, -1):
        c = rem[k + dd] / lead
        q[k] = c
        if c:
            for j, b in enumerate(den.coefficients):
                rem[k + j] -= c * b
    if any(rem):
        raise NonExactDivision("nonzero remainder")
    return UniPoly(q)


class TruncatedSeries:
    """Power series in ``t`` over ``Rational``, truncated above ``order``.

    Holds coefficients of ``t**0`` through ``t**order`` inclusive and
    silently drops anything higher, so products and reciprocals stay
    finite.  A reciprocal requires a nonzero constant term.
    """

    __slots__ = ("_order", "_c")

    def __init__(self, order: int, coefficients: Iterable[RationalLike] = ()):
        if order < 0:
            raise ValueError("order must be >= 0")
        c = [_as_fraction(x) for x in coefficients]
        if len(c) > order + 1:
            del c[order + 1 :]
        c.extend([_ZERO] * (order + 1 - len(c)))
        self._order = order
        self._c = tuple(c)

    @classmethod
    def from_poly(cls, p: UniPoly, order: int) -> "TruncatedSeries":
        return cls(order, p.coefficients)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls(order, (1,))

    @property
    def order(self) -> int:
        return self._order

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._c

    def coeff(self, i: int) -> Fraction:
        if i > self._order:
            raise IndexError(f"coefficient {i} beyond truncation order {self._order}")
        return self._c[i]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, TruncatedSeries):
            return self._order == other._order and self._c == other._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._order, self._c))

    def _check(self, other: "TruncatedSeries") -> None:
        if self._order != other._order:
            raise ValueError(
                f"mixed truncation orders {self._order} and {other._order}"
            )

    def _coerce(self, x: "TruncatedSeries | UniPoly | RationalLike") -> "TruncatedSeries":
        if isinstance(x, TruncatedSeries):
            self._check(x)
            return x
        if isinstance(x, UniPoly):
            return TruncatedSeries(self._order, x.coefficients)
        return TruncatedSeries(self._order, (_as_fraction(x),))

    def __add__(self, other: "TruncatedSeries | UniPoly | RationalLike") -> "TruncatedSeries":
        other = self._coerce(other)
        return TruncatedSeries(
            self._order, tuple(a + b for a, b in zip(self._c, other._c))
        )

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self._order, tuple(-a for a in self._c))

    def __sub__(self, other: "TruncatedSeries | UniPoly | RationalLike") -> "TruncatedSeries":
        return self + (-self._coerce(other))

    def __rsub__(self, other: "UniPoly | RationalLike") -> "TruncatedSeries":
        return self._coerce(other) - self

    def __mul__(self, other: "TruncatedSeries | UniPoly | RationalLike") -> "TruncatedSeries":
        if isinstance(other, (int, Fraction)):
            x = _as_fraction(other)
            return TruncatedSeries(self._order, tuple(c * x for c in self._c))
        other = self._coerce(other)
        n = self._order
        out = [_ZERO] * (n + 1)
        for i, a in enumerate(self._c):
            if a == 0:
                continue
            for j in range(n + 1 - i):
                b = other._c[j]
                if b:
                    out[i + j] += a * b
        return TruncatedSeries(n, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "TruncatedSeries":
        if k < 0:
            raise ValueError("use reciprocal() for negative powers")
        result = TruncatedSeries.one(self._order)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def reciprocal(self) -> "TruncatedSeries":
        """Multiplicative inverse up to the truncation order.

        Standard recurrence: b_0 = 1/a_0, b_m = -(sum_{k>=1} a_k b_{m-k})/a_0.
        Requires a nonzero constant term.
        """
        a = self._c
        if a[0] == 0:
            raise ZeroDivisionError("series reciprocal needs a unit constant term")
        n = self._order
        inv0 = 1 / a[0]
        b = [inv0] + [_ZERO] * n
        for m in range(1, n + 1):
            s = _ZERO
            for k in range(1, m + 1):
                if a[k]:
                    s += a[k] * b[m - k]
            b[m] = -s * inv0
        return TruncatedSeries(n, b)

    def __truediv__(self, other: "TruncatedSeries | UniPoly | RationalLike") -> "TruncatedSeries":
        """Exact division by a series with unit constant term."""
        if isinstance(other, (int, Fraction)):
            x = _as_fraction(other)
            return TruncatedSeries(self._order, tuple(c / x for c in self._c))
        return self * self._coerce(other).reciprocal()

    def polynomial(self, degree_bound: int) -> UniPoly:
        """Return the underlying polynomial, asserting the tail vanishes.

        Every coefficient strictly above ``degree_bound`` (up to the
        truncation order, which should exceed the bound by a guard band)
        must be zero; otherwise :class:`NonPolynomialResult` is raised.
        """
        for i in range(degree_bound + 1, self._order + 1):
            if self._c[i]:
                raise NonPolynomialResult(
                    f"nonzero coefficient {rational_str(self._c[i])} at t^{i} "
                    f"above degree bound {degree_bound}"
                )
        return UniPoly(self._c[: degree_bound + 1])

    def __repr__(self) -> str:
        return f"TruncatedSeries(order={self._order}, {list(self._c)!r})"

    def __str__(self) -> str:
        p = UniPoly(self._c)
        return f"{p} + O(t^{self._order + 1})"
