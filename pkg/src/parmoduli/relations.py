"""Genus-0 cohomology ring machinery for the weight-1/4 moduli spaces.

The rational cohomology of R_{0,n} (n = 2m + 1) is generated by classes
alpha (degree 2), beta (degree 4) and delta_1..delta_n (degree 2), subject
to delta_k^2 = beta and the family of relations

    R^J = r_{0,n-2|J|}(alpha, beta) * prod_{k in J} delta_k,   |J| <= m,

where r_{0,n} is the unique degree-2m polynomial in alpha, beta monic in
alpha lying in the relation ideal.  It is computable two independent ways:

* by the recurrence  r_{0,2m+3} = alpha r_{0,2m+1} - m^2 beta r_{0,2m-1}
  with r_{0,1} = 1 and r_{0,3} = alpha;

* as the kernel of a Hankel matrix of absolute Euler numbers
  |E_{2e+2i+2j}| (e = m mod 2): the coefficient vector of r_{0,n} is the
  unique kernel line, because the top pairings of alpha and beta powers
  are Euler magnitudes,

      <alpha^r beta^s, R_{g,n}> = r!/(r-g)! * |E_{r-g}|,  r + 2s = 3g+n-3.

The monomials alpha^a beta^b delta^J with a + b + |J| < m form a basis of
the quotient; completeness is verified degreewise by exact linear algebra
(rank of the span of relation multiples), which must reproduce the Betti
numbers of R_{0,n}.

The symplectic volume (top power of the symplectic class against the
fundamental class) is (3g+n-3)!/(2^{3g+n-3} g!) * |E_{2g+n-3}|.

Intersection pairings involving delta classes are deliberately not
implemented: their signs are not pinned down by the normalization
available here, so all delta-sensitive verification goes through the
quotient-rank route instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, factorial, lcm

from .errors import (
    CheckFailed,
    DegreeMismatch,
    KernelDimensionError,
    NotReducible,
    ResourceLimit,
)
from .euler import EulerTable, euler_numbers
from .exact import Rational, UniPoly, rational_str
from .linalg import IntRowEchelon, solve_exact
from .orthopoly import MomentSequence, euler_moments, hankel

__all__ = [
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
    "HILBERT_DEFAULT_LIMIT",
]

# hilbert_series_quotient refuses larger n unless forced; matrices grow
# combinatorially with C(n, s)
HILBERT_DEFAULT_LIMIT = 9


def _require_odd(n: int, minimum: int = 1) -> int:
    if n < minimum or n % 2 == 0:
        raise ValueError(f"n must be an odd natural >= {minimum}, got {n}")
    return (n - 1) // 2


class ABPoly:
    """Polynomial in the commuting graded variables alpha (2) and beta (4).

    Terms are stored as a canonical map (a, b) -> coefficient with zero
    coefficients dropped; a term has graded degree 2a + 4b.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[tuple[int, int], Fraction | int] | None = None):
        clean: dict[tuple[int, int], Fraction] = {}
        for (a, b), c in (terms or {}).items():
            c = Fraction(c)
            if c:
                if a < 0 or b < 0:
                    raise ValueError("exponents must be >= 0")
                clean[(a, b)] = c
        self._terms = clean

    @classmethod
    def zero(cls) -> "ABPoly":
        return cls()

    @classmethod
    def one(cls) -> "ABPoly":
        return cls({(0, 0): 1})

    @classmethod
    def alpha(cls) -> "ABPoly":
        return cls({(1, 0): 1})

    @classmethod
    def beta(cls) -> "ABPoly":
        return cls({(0, 1): 1})

    @property
    def terms(self) -> dict[tuple[int, int], Fraction]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def coeff(self, a: int, b: int) -> Fraction:
        return self._terms.get((a, b), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def graded_degree(self) -> int:
        """Common degree 2a + 4b of all terms; requires homogeneity."""
        degrees = {2 * a + 4 * b for (a, b) in self._terms}
        if len(degrees) != 1:
            raise ValueError(f"not homogeneous: degrees {sorted(degrees)}")
        return degrees.pop()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ABPoly):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(sorted(self._terms.items())))

    def __add__(self, other: "ABPoly") -> "ABPoly":
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, Fraction(0)) + c
        return ABPoly(out)

    def __neg__(self) -> "ABPoly":
        return ABPoly({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "ABPoly") -> "ABPoly":
        return self + (-other)

    def __mul__(self, other: "ABPoly | Fraction | int") -> "ABPoly":
        if isinstance(other, (int, Fraction)):
            return ABPoly({k: c * other for k, c in self._terms.items()})
        out: dict[tuple[int, int], Fraction] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                k = (a1 + a2, b1 + b2)
                out[k] = out.get(k, Fraction(0)) + c1 * c2
        return ABPoly(out)

    __rmul__ = __mul__

    def monic_in_alpha(self) -> "ABPoly":
        """Scale so the coefficient of the highest alpha power is 1."""
        if not self._terms:
            raise ValueError("zero polynomial cannot be made monic")
        a_max = max(a for (a, _) in self._terms)
        lead = self._terms.get((a_max, min(b for (a, b) in self._terms if a == a_max)))
        return self * (1 / lead)

    def dehomogenize(self) -> UniPoly:
        """Substitute beta = 1: the single-variable polynomial in alpha."""
        coeffs: dict[int, Fraction] = {}
        for (a, _), c in self._terms.items():
            coeffs[a] = coeffs.get(a, Fraction(0)) + c
        if not coeffs:
            return UniPoly.zero()
        top = max(coeffs)
        return UniPoly([coeffs.get(i, 0) for i in range(top + 1)])

    def __repr__(self) -> str:
        return f"ABPoly({self._terms!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (a, b), c in sorted(self._terms.items(), key=lambda kv: (-kv[0][0], kv[0][1])):
            factors = []
            if a:
                factors.append("alpha" if a == 1 else f"alpha^{a}")
            if b:
                factors.append("beta" if b == 1 else f"beta^{b}")
            body = "*".join(factors) if factors else "1"
            if c == 1 and factors:
                parts.append(body)
            elif c == -1 and factors:
                parts.append(f"-{body}")
            else:
                parts.append(f"{rational_str(c)}*{body}" if factors else rational_str(c))
        out = parts[0]
        for term in parts[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out


@dataclass(frozen=True)
class Monomial:
    """alpha^a beta^b delta^J with J squarefree (delta_k^2 rewrites to beta)."""

    a: int
    b: int
    deltas: frozenset[int]

    def __post_init__(self) -> None:
        if self.a < 0 or self.b < 0:
            raise ValueError("exponents must be >= 0")
        object.__setattr__(self, "deltas", frozenset(self.deltas))

    @property
    def degree(self) -> int:
        return 2 * self.a + 4 * self.b + 2 * len(self.deltas)

    def key(self) -> tuple[int, int, tuple[int, ...]]:
        return (self.a, self.b, tuple(sorted(self.deltas)))

    def __mul__(self, other: "Monomial") -> "Monomial":
        """Product in the ring with delta_k^2 = beta applied eagerly."""
        shared = self.deltas & other.deltas
        return Monomial(
            a=self.a + other.a,
            b=self.b + other.b + len(shared),
            deltas=self.deltas ^ other.deltas,
        )

    def __str__(self) -> str:
        factors = []
        if self.a:
            factors.append("alpha" if self.a == 1 else f"alpha^{self.a}")
        if self.b:
            factors.append("beta" if self.b == 1 else f"beta^{self.b}")
        factors.extend(f"delta_{k}" for k in sorted(self.deltas))
        return "*".join(factors) if factors else "1"


def relation_recurrence(n: int) -> ABPoly:
    """r_{0,n} by the three-term recurrence, monic in alpha by construction.

    r_{0,1} = 1, r_{0,3} = alpha, and
    r_{0,2m+3} = alpha * r_{0,2m+1} - m^2 * beta * r_{0,2m-1}.
    """
    m = _require_odd(n)
    prev, cur = ABPoly.one(), ABPoly.alpha()
    if m == 0:
        return prev
    alpha, beta = ABPoly.alpha(), ABPoly.beta()
    for k in range(1, m):
        prev, cur = cur, alpha * cur - (k * k) * beta * prev
    return cur


def relation_hankel(n: int, moments: MomentSequence | None = None) -> ABPoly:
    """r_{0,n} from the one-dimensional kernel of the Euler Hankel matrix.

    The matrix has entries c_{2e+2i+2j} over c = |E| (or any supplied
    moment sequence), with e = m mod 2; kernel coordinate j maps to the
    monomial alpha^{e+2j} beta^{floor(m/2)-j}.  A kernel of dimension
    other than one contradicts uniqueness and raises KernelDimensionError.
    """
    m = _require_odd(n)
    half = m // 2
    e = m % 2
    if moments is None:
        moments = euler_moments(2 * e + 4 * half - 1 if half else 1)
    matrix = hankel(moments, m, e)
    basis = matrix.kernel()
    if len(basis) != 1:
        raise KernelDimensionError(
            f"kernel of the {matrix.rows}x{matrix.cols} moment matrix for n={n} "
            f"has dimension {len(basis)}, expected 1"
        )
    vec = basis[0]
    poly = ABPoly({(e + 2 * j, half - j): vec[j] for j in range(half + 1)})
    if poly.coeff(m, 0) == 0:
        raise KernelDimensionError(
            f"kernel vector for n={n} has vanishing leading alpha coefficient"
        )
    return poly.monic_in_alpha()


@dataclass(frozen=True)
class RelationSet:
    """The generators R^J = r_{0,n-2|J|} * delta^J for all |J| <= m.

    The rewrite delta_k^2 = beta is part of the presentation but lives in
    the Monomial data model rather than in this list.
    """

    n: int
    generators: tuple[tuple[frozenset[int], ABPoly], ...]

    @property
    def count(self) -> int:
        return len(self.generators)


def relation_set(n: int) -> RelationSet:
    """All relation generators for R_{0,n}, recurrence-built r factors."""
    m = _require_odd(n)
    r_by_size = {s: relation_recurrence(n - 2 * s) for s in range(m + 1)}
    gens: list[tuple[frozenset[int], ABPoly]] = []
    for s in range(m + 1):
        for J in combinations(range(1, n + 1), s):
            gens.append((frozenset(J), r_by_size[s]))
    return RelationSet(n=n, generators=tuple(gens))


def pairing_ab(
    g: int, n: int, r: int, s: int, table: EulerTable | None = None
) -> Rational:
    """Top intersection pairing <alpha^r beta^s, R_{g,n}> = r!/(r-g)! |E_{r-g}|.

    Defined for r + 2s equal to the top graded degree 3g + n - 3 and
    r >= g; anything else is a DegreeMismatch / ValueError.
    """
    _require_odd(n)
    if g < 0 or r < 0 or s < 0:
        raise ValueError("g, r, s must be >= 0")
    top = 3 * g + n - 3
    if r + 2 * s != top:
        raise DegreeMismatch(f"r + 2s = {r + 2 * s}, top degree is {top}")
    if r < g:
        raise ValueError(f"r = {r} < g = {g}: pairing formula undefined")
    if table is None or table.max_index < r - g:
        table = euler_numbers(r - g)
    return Fraction(factorial(r) // factorial(r - g) * table.abs(r - g))


def symplectic_volume(g: int, n: int, table: EulerTable | None = None) -> Rational:
    """<[omega]^{3g+n-3}, R_{g,n}> = (3g+n-3)!/(2^{3g+n-3} g!) |E_{2g+n-3}|."""
    _require_odd(n)
    if g < 0:
        raise ValueError("g must be >= 0")
    top = 3 * g + n - 3
    if top < 0:
        raise ValueError(f"(g, n) = ({g}, {n}): negative top degree {top}")
    j = 2 * g + n - 3
    if table is None or table.max_index < j:
        table = euler_numbers(j)
    return Fraction(factorial(top) * table.abs(j), 2**top * factorial(g))


@dataclass(frozen=True)
class OrthogonalityVerdict:
    """All complementary pairings against r_{0,n} vanished."""

    n: int
    pairs_checked: tuple[tuple[int, int], ...]


def hankel_orthogonality_check(
    n: int, table: EulerTable | None = None
) -> OrthogonalityVerdict:
    """Verify r_{0,n} pairs to zero with every complementary monomial.

    For each (r', s') with r' + 2s' = m - 2, the sum of
    coeff * <alpha^{a+r'} beta^{b+s'}> over the terms of the Hankel-route
    r_{0,n} must vanish exactly; this is the defining property of the
    relation polynomial.  Violations raise CheckFailed naming (r', s').
    """
    m = _require_odd(n, minimum=3)
    if table is None:
        table = euler_numbers(max(2 * m - 2, 0))
    moments = euler_moments(max(2 * m - 1, 1), table)
    rel = relation_hankel(n, moments)
    comp_degree = m - 2
    pairs: list[tuple[int, int]] = []
    s_range = range(comp_degree // 2 + 1) if comp_degree >= 0 else range(0)
    for s_c in s_range:
        r_c = comp_degree - 2 * s_c
        total = Fraction(0)
        for (a, b), coeff in rel.items():
            total += coeff * pairing_ab(0, n, a + r_c, b + s_c, table)
        if total != 0:
            raise CheckFailed(
                "hankel-orthogonality",
                f"n={n}: pairing against alpha^{r_c} beta^{s_c} gives {total}",
            )
        pairs.append((r_c, s_c))
    return OrthogonalityVerdict(n=n, pairs_checked=tuple(pairs))


def monomials_of_degree(n: int, d: int) -> list[Monomial]:
    """All squarefree-delta monomials of degree d in the n-point ring."""
    _require_odd(n)
    if d < 0 or d % 2:
        return []
    out: list[Monomial] = []
    for j in range(min(n, d // 2) + 1):
        rest = d - 2 * j
        for J in combinations(range(1, n + 1), j):
            for b in range(rest // 4 + 1):
                a = (rest - 4 * b) // 2
                out.append(Monomial(a=a, b=b, deltas=frozenset(J)))
    out.sort(key=Monomial.key)
    return out


def basis_enumeration(n: int) -> list[Monomial]:
    """The quotient basis: monomials alpha^a beta^b delta^J, a + b + |J| < m.

    Returned grouped by degree (then by exponent key); the degree counts
    are palindromic about the middle dimension n - 3 and reproduce the
    Betti numbers of R_{0,n}.
    """
    m = _require_odd(n)
    out: list[Monomial] = []
    for j in range(min(n, max(m - 1, 0)) + 1):
        for J in combinations(range(1, n + 1), j):
            for b in range(m - j):
                for a in range(m - j - b):
                    out.append(Monomial(a=a, b=b, deltas=frozenset(J)))
    out.sort(key=lambda mo: (mo.degree,) + mo.key())
    return out


def basis_degree_counts(n: int) -> list[int]:
    """Degree counts of the quotient basis, computed combinatorially.

    Entry d counts monomials alpha^a beta^b delta^J with degree
    2a + 4b + 2|J| = d and a + b + |J| <= m - 1.  Closed-form counting
    keeps this usable far beyond the sizes where enumeration is sensible.
    """
    m = _require_odd(n)
    top = 2 * n - 6
    counts = [0] * (top + 1)
    for d in range(0, top + 1, 2):
        total = 0
        for j in range(min(n, d // 2, m - 1) + 1):
            e = d - 2 * j  # remaining degree for 2a + 4b
            budget = m - 1 - j  # bound on a + b
            # b ranges over max(0, e/2 - budget) <= b <= e/4
            b_lo = max(0, e // 2 - budget)
            b_hi = e // 4
            if b_hi >= b_lo:
                total += comb(n, j) * (b_hi - b_lo + 1)
        counts[d] = total
    return counts


def _relation_product_vectors(
    rels: RelationSet, d: int, index: dict[tuple[int, int, tuple[int, ...]], int]
) -> list[dict[int, int]]:
    """Degree-d span vectors {monomial index: int} of all relation multiples.

    Each generator R^J (degree 2m) is multiplied by every monomial of the
    complementary degree; products that coincide as vectors (same r
    factor, same combined exponents) are emitted once.  Vectors are
    integer after clearing denominators, which does not change the span.
    """
    n = rels.n
    m = (n - 1) // 2
    comp = monomials_of_degree(n, d - 2 * m)
    seen: set[tuple[int, int, int, frozenset[int]]] = set()
    vectors: list[tuple[int, dict[int, int]]] = []
    for J, rpoly in rels.generators:
        items = rpoly.items()
        for c in comp:
            inter = len(J & c.deltas)
            sym = J ^ c.deltas
            key = (len(J), c.a, c.b + inter, sym)
            if key in seen:
                continue
            seen.add(key)
            scale = lcm(*(coeff.denominator for _, coeff in items))
            vec: dict[int, int] = {}
            for (a, b), coeff in items:
                mono_key = (a + c.a, b + c.b + inter, tuple(sorted(sym)))
                vec[index[mono_key]] = int(coeff * scale)
            vectors.append((len(vec), vec))
    # short vectors first: they make cheap pivots
    vectors.sort(key=lambda lv: (lv[0], sorted(lv[1].items())))
    return [vec for _, vec in vectors]


def hilbert_series_quotient(
    n: int,
    max_degree: int | None = None,
    force: bool = False,
    table: EulerTable | None = None,
) -> list[int]:
    """Degreewise dimension of the presented ring, by exact rank computation.

    For each degree d, the dimension of (span of degree-d monomials)
    modulo (span of all relation multiples of degree d) is the monomial
    count minus the exact rank of the multiples.  The result, as a list
    indexed by degree (odd entries zero), must equal the Betti numbers of
    R_{0,n}; that comparison is the caller's (and the verification
    suite's) job.

    Sizes grow like C(n, s); n beyond HILBERT_DEFAULT_LIMIT needs
    force=True.
    """
    m = _require_odd(n)
    if n > HILBERT_DEFAULT_LIMIT and not force:
        raise ResourceLimit(
            f"n = {n} exceeds the default limit {HILBERT_DEFAULT_LIMIT}; "
            "pass force=True to run anyway"
        )
    top = 2 * n - 6
    if max_degree is None:
        max_degree = max(top, 0)
    rels = relation_set(n)
    dims = [0] * (max_degree + 1)
    for d in range(0, max_degree + 1, 2):
        monos = monomials_of_degree(n, d)
        if d < 2 * m:
            dims[d] = len(monos)
            continue
        index = {mo.key(): i for i, mo in enumerate(monos)}
        echelon = IntRowEchelon()
        for vec in _relation_product_vectors(rels, d, index):
            echelon.insert(vec)
        dims[d] = len(monos) - echelon.rank
    return dims


@dataclass(frozen=True)
class ReductionWitness:
    """An exact rewrite of a monomial into the quotient basis.

    ``terms`` lists (basis monomial, coefficient) pairs such that the
    monomial minus the combination lies in the degree-d span of relation
    multiples.
    """

    mono: Monomial
    terms: tuple[tuple[Monomial, Fraction], ...]

    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self) -> str:
        if not self.terms:
            return f"{self.mono} == 0"
        body = " + ".join(
            str(mo) if c == 1 else f"{rational_str(c)}*{mo}" for mo, c in self.terms
        )
        return f"{self.mono} == {body}"


def reduction_witness(n: int, mono: Monomial) -> ReductionWitness:
    """Rewrite ``mono`` as a combination of basis monomials modulo relations.

    Basis monomials (a + b + |J| < m) are their own witness.  Everything
    else of degree <= 2n - 6 must be expressible; the witness is found by
    one exact degreewise solve and failure raises NotReducible (which
    would falsify the spanning property, so it is never expected).
    """
    m = _require_odd(n)
    if any(k < 1 or k > n for k in mono.deltas):
        raise ValueError(f"delta indices must lie in 1..{n}")
    d = mono.degree
    if d > 2 * n - 6:
        raise ValueError(f"degree {d} exceeds the top dimension {2 * n - 6}")
    if mono.a + mono.b + len(mono.deltas) < m:
        return ReductionWitness(mono=mono, terms=((mono, Fraction(1)),))

    monos = monomials_of_degree(n, d)
    index = {mo.key(): i for i, mo in enumerate(monos)}
    dim = len(monos)
    basis = [mo for mo in basis_enumeration(n) if mo.degree == d]
    rel_vectors = _relation_product_vectors(relation_set(n), d, index)

    columns: list[list[Fraction]] = []
    for bmono in basis:
        col = [Fraction(0)] * dim
        col[index[bmono.key()]] = Fraction(1)
        columns.append(col)
    for vec in rel_vectors:
        col = [Fraction(0)] * dim
        for i, v in vec.items():
            col[i] = Fraction(v)
        columns.append(col)
    target = [Fraction(0)] * dim
    target[index[mono.key()]] = Fraction(1)

    solution = solve_exact(columns, target)
    if solution is None:
        raise NotReducible(f"{mono} is not in basis + relation span at degree {d}")
    terms = tuple(
        (bmono, solution[i]) for i, bmono in enumerate(basis) if solution[i]
    )
    return ReductionWitness(mono=mono, terms=terms)
