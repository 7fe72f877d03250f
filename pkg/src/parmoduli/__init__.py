"""Exact topological invariants of rank-2 parabolic-bundle moduli spaces.

All weights are 1/4 and the number of marked points is odd, so the moduli
space R_{g,n} is a smooth compact manifold of dimension 6g - 6 + 2n.  The
package computes, in exact rational arithmetic throughout:

* Betti numbers by three independent methods (stratification sum, closed
  form, recursions) with structural sanity checks;
* Euler numbers, their continued-fraction convergents, and the Dirichlet
  beta coefficients they determine;
* monic orthogonal polynomials of arbitrary moment sequences with their
  three-term recurrence data and J-fraction comparison;
* the genus-0 cohomology relation polynomials (Hankel-kernel route and
  recurrence route), relation sets, intersection pairings, symplectic
  volumes, the monomial basis, and a degreewise machine verification that
  the presented ring has the correct Hilbert series.

The :mod:`parmoduli.verify` suite cross-validates everything; the
``parmoduli`` command line exposes each capability.
"""

from .errors import (
    CheckFailed,
    DegenerateMoments,
    DegreeMismatch,
    InsufficientMoments,
    KernelDimensionError,
    MatchFailure,
    NonExactDivision,
    NonPolynomialResult,
    NotReducible,
    ParmoduliError,
    RecurrenceMismatch,
    ResourceLimit,
)
from .exact import (
    Rational,
    TruncatedSeries,
    UniPoly,
    parse_rational,
    poly_divide_exact,
    rational_str,
)
from .linalg import IntRowEchelon, RationalMatrix
from .euler import (
    BetaCoefficient,
    EulerTable,
    cf_convergent,
    dirichlet_beta_coeff,
    euler_abs_series,
    euler_numbers,
    euler_numbers_series_oracle,
)
from .betti import (
    ModuliParams,
    StructuralReport,
    bgraded_counts,
    poincare_closed,
    poincare_recursion_g,
    poincare_recursion_n,
    poincare_strata,
    strata_sum,
    structural_checks,
)
from .orthopoly import (
    CfMomentVerdict,
    MomentSequence,
    OrthoPolySequence,
    cf_vs_moments,
    euler_moments,
    gram_schmidt_ortho,
    hankel,
    three_term_coeffs,
)
from .relations import (
    ABPoly,
    Monomial,
    OrthogonalityVerdict,
    ReductionWitness,
    RelationSet,
    basis_degree_counts,
    basis_enumeration,
    hankel_orthogonality_check,
    hilbert_series_quotient,
    monomials_of_degree,
    pairing_ab,
    reduction_witness,
    relation_hankel,
    relation_recurrence,
    relation_set,
    symplectic_volume,
)
from .verify import CheckResult, VerificationReport, verify_suite

__version__ = "0.1.0"

__all__ = [
    "Rational",
    "UniPoly",
    "TruncatedSeries",
    "RationalMatrix",
    "IntRowEchelon",
    "rational_str",
    "parse_rational",
    "poly_divide_exact",
    "EulerTable",
    "BetaCoefficient",
    "euler_numbers",
    "euler_numbers_series_oracle",
    "euler_abs_series",
    "cf_convergent",
    "dirichlet_beta_coeff",
    "ModuliParams",
    "StructuralReport",
    "strata_sum",
    "poincare_strata",
    "poincare_closed",
    "poincare_recursion_n",
    "poincare_recursion_g",
    "bgraded_counts",
    "structural_checks",
    "MomentSequence",
    "OrthoPolySequence",
    "CfMomentVerdict",
    "euler_moments",
    "hankel",
    "gram_schmidt_ortho",
    "three_term_coeffs",
    "cf_vs_moments",
    "ABPoly",
    "Monomial",
    "RelationSet",
    "OrthogonalityVerdict",
    "ReductionWitness",
    "relation_recurrence",
    "relation_hankel",
    "relation_set",
    "pairing_ab",
    "symplectic_volume",
    "hankel_orthogonality_check",
    "basis_enumeration",
    "basis_degree_counts",
    "monomials_of_degree",
    "hilbert_series_quotient",
    "reduction_witness",
    "CheckResult",
    "VerificationReport",
    "verify_suite",
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
