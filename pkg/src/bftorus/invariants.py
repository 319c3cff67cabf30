"""Bowen-Franks groups, the matrix <-> ideal dictionary, and the
equivalence engines built on top of both.

For an integer matrix A (acting on column vectors) and a rational
polynomial g with g(A) integral,

    BF_g(A) = Z^n / g(A) Z^n

is the generalized Bowen-Franks group; g = x - 1 gives the classical
one and g = x^k - 1 counts the k-periodic points of the induced torus
map.  When the characteristic polynomial p is irreducible, a row
eigenvector v with v.A = beta.v turns A into a fractional ideal of
Q[x]/(p) (Latimer-MacDuffee-Taussky), and the ideal side supplies both
invariants (BF_g(A) = I/g(beta)I) and certificates: equality of
coefficient rings is L-equivalence, and invertibility statements
upgrade it to (strong) BF-equivalence.

Deciding BF-equivalence outright is an open problem, so the engines
come in two sound halves.  ``bf_refute`` searches a finite, documented
candidate list for a distinguishing g - a found witness is a proof of
inequivalence.  ``bf_certify`` applies the sufficient conditions
(square-free discriminant, invertible ideals, degree at most 3) - a
certificate is a proof of equivalence.  When neither side bites, the
verdict is an explicit ``inconclusive`` carrying the exhausted search
bound, never a guess.
"""

import itertools
import math
from fractions import Fraction
from typing import Dict, List, NamedTuple, Tuple

from .config import debug_asserts_enabled
from .errors import (
    CharPolyMismatch,
    DegeneratePeriod,
    NonIntegralResult,
    ReduciblePolynomial,
)
from .exactmat import (
    IntMatrix,
    char_poly,
    copy_matrix,
    det,
    eval_poly_at_matrix,
    mat_pow,
)
from .ideals import (
    AbelianGroup,
    FractionalIdeal,
    coefficient_ring,
    colon,
    fractional_ideal,
    is_invertible,
    zbeta,
)
from .kernels import snf_rows
from .numberfield import NumberField, multiplication_matrix
from .polyring import (
    IntPoly,
    RatPoly,
    discriminant,
    format_poly,
    is_irreducible,
    parse_rat_poly,
    poly_mod,
    square_part,
)


def _as_rat_poly(g):
    if isinstance(g, str):
        return parse_rat_poly(g)
    if isinstance(g, IntPoly):
        return g.to_rat()
    if isinstance(g, RatPoly):
        return g
    return RatPoly(g)


def _require_same_char_poly(a, b):
    pa, pb = char_poly(a), char_poly(b)
    if pa != pb:
        raise CharPolyMismatch(f"characteristic polynomials differ: {pa} vs {pb}")
    return pa


# ---------------------------------------------------------------------
# BF groups and periodic points

def bf_group(a, g) -> AbelianGroup:
    """BF_g(A) = Z^n/g(A)Z^n in canonical invariant-factor form.

    ``g`` may be a RatPoly, an IntPoly, a coefficient list or a string
    like "x^2-x-1".  Free rank appears exactly when det g(A) = 0.
    Raises NonIntegralResult when g(A) has a denominator; that failure
    is itself conjugacy-invariant information (see bf_refute).
    """
    m = eval_poly_at_matrix(_as_rat_poly(g), a)
    diag, _, _ = snf_rows(m)
    return AbelianGroup.from_diagonal(diag)


def bf_k(a, k) -> AbelianGroup:
    """BF_k(A) = Z^n/(A^k - I)Z^n, the group of k-periodic points."""
    k = int(k)
    if k < 1:
        raise ValueError("k must be a positive integer")
    return bf_group(a, IntPoly.cyclic(k))


class BFProfile:
    """A cache of BF_g(A) values keyed by g reduced mod the char poly.

    Cayley-Hamilton makes g(A) depend only on g mod p, so the reduced
    polynomial is the canonical key.  Only g with g(A) integral are
    ever stored; a non-integral g raises through ``group``.
    """

    def __init__(self, a):
        self.matrix = copy_matrix(a)
        self.p = char_poly(a)
        self._p_rat = self.p.to_rat()
        self.entries: Dict[RatPoly, AbelianGroup] = {}

    def reduce(self, g) -> RatPoly:
        return poly_mod(_as_rat_poly(g), self._p_rat)

    def group(self, g) -> AbelianGroup:
        key = self.reduce(g)
        got = self.entries.get(key)
        if got is None:
            got = bf_group(self.matrix, key)
            self.entries[key] = got
        return got

    def __contains__(self, g):
        return self.reduce(g) in self.entries

    def __len__(self):
        return len(self.entries)

    def __repr__(self):
        return f"BFProfile({self.p}, {len(self.entries)} entries)"


class PeriodicStructure(NamedTuple):
    k: int
    group: AbelianGroup
    generators: List[Tuple[Fraction, ...]]  # torus points, coords in [0, 1)


def periodic_structure(a, k) -> PeriodicStructure:
    """Per_k(A) as an explicit subgroup of the torus.

    With U(A^k - I)V = D, generator i is column i of V divided by d_i
    and reduced mod 1.  V is unimodular, so its columns are primitive
    and generator i has order exactly d_i; in particular it lies in
    T_{d_i} (the d_i-division points) and the containments
    T_{d_1} <= Per_k(A) <= T_{d_n} hold.
    """
    a = copy_matrix(a)
    k = int(k)
    if k < 1:
        raise ValueError("period k must be positive")
    n = len(a)
    m = mat_pow(a, k)
    for i in range(n):
        m[i][i] -= 1
    diag, _, v = snf_rows(m)
    if any(d == 0 for d in diag):
        raise DegeneratePeriod(f"det(A^{k} - I) = 0: k-periodic points are not finite")
    gens = []
    for i in range(n):
        gens.append(tuple(Fraction(v[r][i], diag[i]) % 1 for r in range(n)))
    if debug_asserts_enabled():
        ak = mat_pow(a, k)
        for vec in gens:
            img = [sum(ak[r][t] * vec[t] for t in range(n)) - vec[r] for r in range(n)]
            assert all(x.denominator == 1 for x in img), "generator is not k-periodic"
    return PeriodicStructure(k, AbelianGroup.from_diagonal(diag), gens)


# ---------------------------------------------------------------------
# the matrix <-> ideal dictionary

def _row_eigenvector(field, a):
    """A nonzero v (entries in K) with v.A = beta.v.

    Gaussian elimination over K on A^t - beta.I, whose kernel is a line
    when p is irreducible.
    """
    n = field.n
    beta = field.beta()
    one = field.one()
    zero = field.zero()
    rows = [
        [a[j][i] * one - (beta if i == j else zero) for j in range(n)]
        for i in range(n)
    ]
    pivots = []
    rank = 0
    for c in range(n):
        pivot_row = next((i for i in range(rank, n) if not rows[i][c].is_zero()), None)
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        inv = rows[rank][c].inverse()
        rows[rank] = [e * inv for e in rows[rank]]
        for i in range(n):
            if i != rank and not rows[i][c].is_zero():
                f = rows[i][c]
                rows[i] = [rows[i][j] - f * rows[rank][j] for j in range(n)]
        pivots.append(c)
        rank += 1
    free = [c for c in range(n) if c not in pivots]
    assert len(free) == 1, "eigenvector kernel should be one-dimensional"
    v = [zero] * n
    v[free[0]] = one
    for idx, c in enumerate(pivots):
        v[c] = -rows[idx][free[0]]
    if debug_asserts_enabled():
        for i in range(n):
            lhs = field.zero()
            for j in range(n):
                lhs = lhs + v[j] * a[j][i]
            assert lhs == v[i] * beta, "v.A != beta.v"
    return v


def matrix_to_ideal(a) -> FractionalIdeal:
    """The ideal of A: the Z-span of the entries of a row eigenvector.

    The eigenvector is determined only up to a K-scalar, so the ideal
    is canonical only as an ideal class.  A deterministic
    representative is fixed in two steps: the eigenvector is divided
    by its first entry, then the span is rescaled by the rational that
    makes its intersection with Q exactly Z.  Feeding a
    multiplication-by-beta matrix back in recovers the very lattice
    the basis came from whenever that lattice was so normalized (e.g.
    any order), and round-trips through ideal_to_matrix agree up to
    this normalization in general.
    """
    a = copy_matrix(a)
    p = char_poly(a)
    if p.degree < 2:
        raise ReduciblePolynomial("the eigenvector dictionary needs degree >= 2")
    if not is_irreducible(p):
        raise ReduciblePolynomial(f"characteristic polynomial {p} is reducible over Q")
    field = NumberField(p)
    vec = _row_eigenvector(field, a)
    # Every entry is nonzero (a zero entry would cap the span at rank
    # n-1), so dividing by the first one picks a canonical point on the
    # K-line of eigenvectors.
    inv = vec[0].inverse()
    raw = fractional_ideal(field, [z * inv for z in vec])
    first_rational = Fraction(raw.cols[0][0], raw.denom)
    if first_rational == 1:
        return raw
    return raw.scaled(1 / first_rational)


def ideal_to_matrix(ideal) -> IntMatrix:
    """The matrix of multiplication by beta on the canonical basis.

    Inverse direction of the dictionary: beta-stability of the lattice
    is exactly integrality of the result.
    """
    field = ideal.field
    m = multiplication_matrix(field.beta(), basis=ideal.basis_elements())
    out = []
    for row in m:
        vals = []
        for e in row:
            if e.denominator != 1:
                raise NonIntegralResult(
                    "multiplication by beta does not preserve this lattice"
                )
            vals.append(int(e))
        out.append(vals)
    if debug_asserts_enabled():
        assert char_poly(out) == field.p, "dictionary broke the char poly"
    return out


# ---------------------------------------------------------------------
# verdicts

VERDICT_KINDS = frozenset(
    {
        "L-equivalent",
        "not-L-equivalent",
        "BF-distinguished",
        "BF-certified",
        "strong-BF-certified",
        "strong-BF-refuted",
        "inconclusive",
    }
)


class EquivalenceVerdict:
    """Outcome of an equivalence engine, always carrying its evidence.

    ``witness`` is a polynomial string for distinguishers or a prose
    reason for certificates; ``groups`` maps "A"/"B" to group strings
    when a mismatch was exhibited ("non-integral" marks a side where
    g(A) left the integers); ``bound`` records the exhausted search
    radius on inconclusive verdicts.
    """

    __slots__ = ("kind", "witness", "groups", "bound")

    def __init__(self, kind, witness=None, groups=None, bound=None):
        if kind not in VERDICT_KINDS:
            raise ValueError(f"unknown verdict kind {kind!r}")
        if kind == "inconclusive":
            if bound is None:
                raise ValueError("inconclusive verdicts must carry the search bound")
        elif witness is None:
            raise ValueError(f"a {kind} verdict must carry its witness/reason")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "witness", witness)
        object.__setattr__(self, "groups", dict(groups) if groups else None)
        object.__setattr__(self, "bound", bound)

    def __setattr__(self, *a):
        raise AttributeError("EquivalenceVerdict is immutable")

    @property
    def conclusive(self):
        return self.kind != "inconclusive"

    def to_json_dict(self):
        out = {"verdict": self.kind}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.groups is not None:
            out["groups"] = dict(self.groups)
        if self.bound is not None:
            out["bound"] = self.bound
        return out

    def __eq__(self, other):
        return isinstance(other, EquivalenceVerdict) and (
            (self.kind, self.witness, self.groups, self.bound)
            == (other.kind, other.witness, other.groups, other.bound)
        )

    def __str__(self):
        if self.kind == "inconclusive":
            return f"inconclusive (searched up to bound {self.bound})"
        extra = f" [{self.witness}]" if self.witness else ""
        return self.kind + extra

    def __repr__(self):
        return f"EquivalenceVerdict({self})"


def _basis_str(lattice):
    return ", ".join(str(z) for z in lattice.basis_elements())


# ---------------------------------------------------------------------
# L-equivalence and the BF engines

def l_equivalent(a, b) -> EquivalenceVerdict:
    """Compare the coefficient rings of the two associated ideals.

    The ideal of A is only an ideal class, but C(I) is a class
    invariant, so this is well defined.
    """
    _require_same_char_poly(a, b)
    ring_a = coefficient_ring(matrix_to_ideal(a))
    ring_b = coefficient_ring(matrix_to_ideal(b))
    if ring_a == ring_b:
        return EquivalenceVerdict(
            "L-equivalent", witness=f"common coefficient ring ({_basis_str(ring_a)})"
        )
    return EquivalenceVerdict(
        "not-L-equivalent",
        witness=(
            f"coefficient rings differ: ({_basis_str(ring_a)}) vs "
            f"({_basis_str(ring_b)})"
        ),
    )


def _refutation_candidates(p, a, b, bound):
    """The documented candidate list, deduplicated mod p.

    Deterministic graded order: x^k - 1 for k = 1..bound first (the
    periodic-point invariants), then the basis denominators of both
    coefficient rings (a g that is integral on one side only refutes
    through integrality alone), then every g(beta) with power-basis
    coordinates in max-norm shells 1..bound, first nonzero coordinate
    positive, constants skipped (they never distinguish).
    """
    p_rat = p.to_rat()
    seen = set()

    def fresh(g):
        key = poly_mod(g, p_rat).coeffs
        neg = tuple(-c for c in key)
        if key in seen or neg in seen:
            return False
        seen.add(key)
        return True

    for k in range(1, bound + 1):
        g = IntPoly.cyclic(k).to_rat()
        if fresh(g):
            yield g
    n = p.degree
    if n >= 2 and is_irreducible(p):
        for mat in (a, b):
            ring = coefficient_ring(matrix_to_ideal(mat))
            for z in ring.basis_elements():
                g = RatPoly(z.coords)
                if any(c.denominator != 1 for c in g.coeffs) and fresh(g):
                    yield g
    for radius in range(1, bound + 1):
        for tup in itertools.product(range(-radius, radius + 1), repeat=n):
            if max(abs(c) for c in tup) != radius:
                continue
            if not any(tup[1:]):
                continue  # constants (and zero) never distinguish
            first = next(c for c in tup if c)
            if first < 0:
                continue  # g and -g define the same subgroup
            g = RatPoly(tup)
            if fresh(g):
                yield g


def bf_refute(a, b, bound=4) -> EquivalenceVerdict:
    """Search for a g with BF_g(A) != BF_g(B).

    A witness is a proof that A and B are not BF-equivalent (for
    integrality mismatches: not even L-equivalent).  Exhausting the
    bound proves nothing - the verdict says so.
    """
    p = _require_same_char_poly(a, b)
    bound = int(bound)
    if bound < 1:
        raise ValueError("bound must be at least 1")
    prof_a = BFProfile(a)
    prof_b = BFProfile(b)
    for g in _refutation_candidates(p, a, b, bound):
        try:
            group_a = prof_a.group(g)
        except NonIntegralResult:
            group_a = None
        try:
            group_b = prof_b.group(g)
        except NonIntegralResult:
            group_b = None
        if group_a is None and group_b is None:
            continue
        if group_a != group_b:
            return EquivalenceVerdict(
                "BF-distinguished",
                witness=format_poly(g.coeffs),
                groups={
                    "A": str(group_a) if group_a is not None else "non-integral",
                    "B": str(group_b) if group_b is not None else "non-integral",
                },
            )
    return EquivalenceVerdict("inconclusive", bound=bound)


def _pair_has_invertible(ideal, zb):
    """At least one of I, (Z[beta]:I) is an invertible Z[beta]-ideal."""
    if is_invertible(ideal, zb):
        return True
    return is_invertible(colon(zb, ideal).as_ideal(), zb)


def bf_certify(a, b) -> EquivalenceVerdict:
    """Apply the sufficient conditions for (strong) BF-equivalence.

    Cascade, strongest certificate first:
      1. square-free disc(p) and p(0) = +-1: Z[beta] is the maximal
         order, all ideals are invertible there, and every matrix with
         char poly p carries the same BF_g for integral g.
      2. coefficient rings differ: not L-equivalent, hence (L-equivalence
         being necessary) not BF-equivalent either.
      3. both ideals invertible over the common coefficient ring R:
         each is strongly BF-equivalent to R itself, so to each other.
      4. in each pair (I, (Z[beta]:I)) at least one member invertible
         over Z[beta]: BF-equivalent.
      5. degree <= 3: L-equivalence already decides BF-equivalence.
    Anything else is inconclusive (bound 0: no search was involved).
    """
    p = _require_same_char_poly(a, b)
    n = p.degree
    if n < 2:
        raise ReduciblePolynomial("certificates need degree >= 2")
    if not is_irreducible(p):
        raise ReduciblePolynomial(f"characteristic polynomial {p} is reducible over Q")
    disc = discriminant(p)
    square, _ = square_part(disc)
    if square == 1 and abs(p.coeffs[0]) == 1:
        return EquivalenceVerdict(
            "BF-certified",
            witness=(
                f"disc(p) = {disc} is square-free and p(0) = {p.coeffs[0]}: "
                "Z[beta] is maximal, so all matrices with this characteristic "
                "polynomial share every BF_g"
            ),
        )
    ideal_a = matrix_to_ideal(a)
    ideal_b = matrix_to_ideal(b)
    ring_a = coefficient_ring(ideal_a)
    ring_b = coefficient_ring(ideal_b)
    if ring_a != ring_b:
        return EquivalenceVerdict(
            "not-L-equivalent",
            witness=(
                f"coefficient rings differ: ({_basis_str(ring_a)}) vs "
                f"({_basis_str(ring_b)}); L-equivalence is necessary for "
                "BF-equivalence, so the pair is BF-inequivalent as well"
            ),
        )
    if is_invertible(ideal_a, ring_a) and is_invertible(ideal_b, ring_b):
        return EquivalenceVerdict(
            "strong-BF-certified",
            witness=(
                "both ideals are invertible over the common coefficient ring "
                f"({_basis_str(ring_a)}); each is strongly BF-equivalent to "
                "that ring, hence to the other"
            ),
        )
    zb = zbeta(ideal_a.field)
    if _pair_has_invertible(ideal_a, zb) and _pair_has_invertible(ideal_b, zb):
        return EquivalenceVerdict(
            "BF-certified",
            witness=(
                "L-equivalent, and in each pair (I, (Z[beta]:I)) at least one "
                "member is an invertible Z[beta]-ideal"
            ),
        )
    if n <= 3:
        return EquivalenceVerdict(
            "BF-certified",
            witness=(
                f"degree {n} <= 3 and equal coefficient rings: L-equivalence "
                "decides BF-equivalence in degree at most 3"
            ),
        )
    return EquivalenceVerdict("inconclusive", bound=0)


_CONJUGACY_MODULI = (2, 3, 4, 5, 6, 7, 8)


def conjugate_mod(a, b, m) -> bool:
    """Is there P with P.A = B.P (mod m) and det(P) a unit mod m?

    Exhaustive over all m^(n^2) candidate matrices - strictly a
    small-case oracle.  Strong BF-equivalence forces conjugacy mod
    every m, so a single failing modulus is a refutation.
    """
    m = int(m)
    if m < 1:
        raise ValueError("modulus must be positive")
    if m == 1:
        return True
    a = copy_matrix(a)
    b = copy_matrix(b)
    n = len(a)
    if len(b) != n:
        raise ValueError("matrix sizes differ")
    am = [[e % m for e in row] for row in a]
    bm = [[e % m for e in row] for row in b]
    for flat in itertools.product(range(m), repeat=n * n):
        pm = [list(flat[i * n:(i + 1) * n]) for i in range(n)]
        if math.gcd(det(pm) % m, m) != 1:
            continue
        pa = [
            [sum(pm[i][t] * am[t][j] for t in range(n)) % m for j in range(n)]
            for i in range(n)
        ]
        bp = [
            [sum(bm[i][t] * pm[t][j] for t in range(n)) % m for j in range(n)]
            for i in range(n)
        ]
        if pa == bp:
            return True
    return False


def strong_bf_refute(a, b, bound=4) -> EquivalenceVerdict:
    """Refute strong BF-equivalence (R-module isomorphism of all BF_g).

    Any plain abelian mismatch refutes a fortiori, so bf_refute runs
    first.  For degree <= 2 an independent oracle follows: strong
    BF-equivalence is the same as conjugacy mod m for every m, and
    conjugacy is checked exhaustively for small moduli.  Degree >= 3
    conjugacy search is combinatorially out of reach and deliberately
    not attempted.
    """
    p = _require_same_char_poly(a, b)
    first = bf_refute(a, b, bound)
    if first.kind == "BF-distinguished":
        return EquivalenceVerdict(
            "strong-BF-refuted", witness=first.witness, groups=first.groups
        )
    if p.degree <= 2:
        for m in _CONJUGACY_MODULI:
            if not conjugate_mod(a, b, m):
                return EquivalenceVerdict(
                    "strong-BF-refuted", witness=f"not conjugate over Z/{m}"
                )
    return EquivalenceVerdict("inconclusive", bound=bound)


# ---------------------------------------------------------------------
# the suspension flow

def suspension_h1(a) -> AbelianGroup:
    """H1 of the mapping torus of A: Z (the flow direction) + BF_1(A)."""
    g = bf_group(a, IntPoly([-1, 1]))
    return AbelianGroup(g.free_rank + 1, g.torsion)


def flow_invariant_pair(a) -> Tuple[int, AbelianGroup]:
    """(det(I - A), BF_1(A)): the complete flow-equivalence data in the
    subshift setting, recorded here for torus maps."""
    a = copy_matrix(a)
    n = len(a)
    m = [[(1 if i == j else 0) - a[i][j] for j in range(n)] for i in range(n)]
    return det(m), bf_group(a, IntPoly([-1, 1]))


def _power_word(exponents):
    parts = []
    for idx, e in enumerate(exponents, start=1):
        if e == 0:
            continue
        parts.append(f"x{idx}" if e == 1 else f"x{idx}^{e}")
    return "*".join(parts) if parts else "1"


class Pi1Presentation(NamedTuple):
    generators: List[str]
    relations: List[str]
    matrix: IntMatrix

    def abelianization(self) -> AbelianGroup:
        """Kill the commutators; x0 survives free and relator j becomes
        the vector e_j - (row j of A), so the torsion is Z^n modulo the
        column span of I - A^t (same invariant factors as A - I)."""
        n = len(self.matrix)
        rows = [
            [(1 if i == j else 0) - self.matrix[j][i] for j in range(n)]
            for i in range(n)
        ]
        diag, _, _ = snf_rows(rows)
        g = AbelianGroup.from_diagonal(diag)
        return AbelianGroup(g.free_rank + 1, g.torsion)

    def __str__(self):
        return "<" + ", ".join(self.generators) + " | " + ", ".join(self.relations) + ">"


def pi1_presentation(a) -> Pi1Presentation:
    """The fundamental group of the suspension of A.

    Generators x1..xn span the fibre torus, x0 is the loop traced by
    the flow through 0; conjugation by x0 acts on the fibre by the rows
    of A.  The relation schema x0 X^m x0^-1 = X^(mA) over all integer
    row vectors m is generated by its basis instances, so the emitted
    presentation is finite.  Works for any integer matrix (for
    non-unimodular A the "suspension" is the mapping torus of an
    endomorphism and the presentation is emitted all the same).
    """
    a = copy_matrix(a)
    n = len(a)
    gens = [f"x{i}" for i in range(n + 1)]
    rels = [
        f"x{i}*x{j} = x{j}*x{i}"
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
    ]
    for j in range(1, n + 1):
        rels.append(f"x0*x{j}*x0^-1 = {_power_word(a[j - 1])}")
    return Pi1Presentation(gens, rels, a)
