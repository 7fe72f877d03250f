"""Exception types raised by the exact-arithmetic and verification layers.

Every error here signals a *mathematical* failure (a division that should
have been exact was not, a kernel that should have been a line was not, ...)
rather than a programming error.  Callers that hit one of these in normal
operation have found either corrupted input data or a genuine bug, which is
exactly what the verification suite is designed to surface.
"""

__all__ = [
    "ParmoduliError",
    "NonExactDivision",
    "NonPolynomialResult",
    "CheckFailed",
    "InsufficientMoments",
    "DegenerateMoments",
    "RecurrenceMismatch",
    "MatchFailure",
    "KernelDimensionError",
    "DegreeMismatch",
    "ResourceLimit",
    "NotReducible",
]


class ParmoduliError(Exception):
    """Base class for all library-specific failures."""


class NonExactDivision(ParmoduliError):
    """Polynomial division left a nonzero remainder where none was allowed."""


class NonPolynomialResult(ParmoduliError):
    """A truncated series expected to be a polynomial had a nonzero tail."""


class CheckFailed(ParmoduliError):
    """A structural or cross-method consistency check was violated.

    The ``name`` attribute identifies the violated property.
    """

    def __init__(self, name: str, detail: str = ""):
        self.name = name
        self.detail = detail
        super().__init__(f"{name}: {detail}" if detail else name)


class InsufficientMoments(ParmoduliError):
    """A moment-indexed computation ran past the supplied moment sequence."""


class DegenerateMoments(ParmoduliError):
    """Gram-Schmidt hit a zero squared norm; the moment matrix is singular."""


class RecurrenceMismatch(ParmoduliError):
    """Extracted three-term coefficients fail to reproduce the polynomials."""


class MatchFailure(ParmoduliError):
    """A continued-fraction expansion disagreed with its moment series.

    The ``order`` attribute is the first disagreeing power.
    """

    def __init__(self, order: int, detail: str = ""):
        self.order = order
        super().__init__(f"mismatch at order {order}" + (f": {detail}" if detail else ""))


class KernelDimensionError(ParmoduliError):
    """A Hankel kernel expected to be one-dimensional was not."""


class DegreeMismatch(ParmoduliError):
    """A pairing was requested outside the top graded degree."""


class ResourceLimit(ParmoduliError):
    """A degreewise linear-algebra problem exceeded the configured size guard."""


class NotReducible(ParmoduliError):
    """A monomial could not be rewritten into the expected basis span."""
