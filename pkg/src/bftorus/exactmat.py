"""Exact integer/rational matrix layer.

Matrices are plain lists of rows with ``int`` entries (arbitrary
precision; nothing here ever overflows or rounds).  They act on column
vectors from the left.  The two normal-form results carry their
unimodular transforms so callers can recover generators, not just
diagonal data.
"""

import math
from fractions import Fraction
from typing import List, NamedTuple

from . import ratlin
from .config import debug_asserts_enabled
from .errors import NonIntegralResult
from .kernels import det_bareiss, hnf_cols, mat_mul_rows, snf_rows
from .polyring import IntPoly, RatPoly

IntMatrix = List[List[int]]


class SmithDecomposition(NamedTuple):
    D: IntMatrix
    U: IntMatrix
    V: IntMatrix

    @property
    def diagonal(self):
        return [self.D[i][i] for i in range(len(self.D))]


class HermiteBasis(NamedTuple):
    H: IntMatrix
    T: IntMatrix


def copy_matrix(a) -> IntMatrix:
    """Validated copy: square, integer entries."""
    rows = [[int(e) for e in row] for row in a]
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise ValueError("matrix must be square")
    return rows


def identity_matrix(n) -> IntMatrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(a):
    return [list(col) for col in zip(*a)]


def mat_vec(a, v):
    return [sum(e * x for e, x in zip(row, v)) for row in a]


def mat_pow(a, k) -> IntMatrix:
    """A**k for k >= 0 by repeated squaring."""
    if k < 0:
        raise ValueError("negative matrix power")
    n = len(a)
    out = identity_matrix(n)
    base = copy_matrix(a)
    while k:
        if k & 1:
            out = mat_mul_rows(out, base)
        base = mat_mul_rows(base, base)
        k >>= 1
    return out


def det(a) -> int:
    return det_bareiss(copy_matrix(a))


def rational_inverse(a):
    """Exact inverse as a Fraction matrix; SingularMatrix on det = 0."""
    return ratlin.inverse(copy_matrix(a))


def char_poly(a) -> IntPoly:
    """det(xI - A) by the Faddeev-LeVerrier recurrence, all integer.

    The trace divisions are exact; with debug assertions enabled the
    Cayley-Hamilton identity p(A) = 0 is verified on every call.
    """
    a = copy_matrix(a)
    n = len(a)
    if n == 0:
        return IntPoly([1])
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    m = identity_matrix(n)
    for k in range(1, n + 1):
        am = mat_mul_rows(a, m)
        tr = sum(am[i][i] for i in range(n))
        c, rem = divmod(-tr, k)
        if rem:
            raise AssertionError("Faddeev-LeVerrier division was not exact")
        coeffs[n - k] = c
        for i in range(n):
            am[i][i] += c
        m = am
    p = IntPoly(coeffs)
    if debug_asserts_enabled():
        z = eval_poly_at_matrix(p, a)
        assert all(all(e == 0 for e in row) for row in z), "p(A) != 0"
    return p


def eval_poly_at_matrix(g, a) -> IntMatrix:
    """g(A) for g over Q, exact; NonIntegralResult unless g(A) is integral.

    Integrality of g(A) depends only on the conjugacy class of A, so a
    failure here is meaningful: g lies outside the ring of polynomials
    that are integral on this class.
    """
    a = copy_matrix(a)
    n = len(a)
    if isinstance(g, IntPoly):
        g = g.to_rat()
    elif not isinstance(g, RatPoly):
        g = RatPoly(g)
    if g.is_integral():
        out = [[0] * n for _ in range(n)]
        for c in reversed(g.coeffs):
            out = mat_mul_rows(out, a)
            ci = int(c)
            for i in range(n):
                out[i][i] += ci
        return out
    out = [[Fraction(0)] * n for _ in range(n)]
    for c in reversed(g.coeffs):
        out = ratlin.mat_mul(out, a)
        for i in range(n):
            out[i][i] += c
    if any(e.denominator != 1 for row in out for e in row):
        raise NonIntegralResult(f"{g} evaluated at the matrix is not integral")
    return [[int(e) for e in row] for row in out]


def smith_normal_form(a) -> SmithDecomposition:
    """U·A·V = D with d1 | d2 | ... | dn, d_i >= 0, U and V unimodular."""
    a = copy_matrix(a)
    n = len(a)
    diag, u, v = snf_rows(a)
    d = [[diag[i] if i == j else 0 for j in range(n)] for i in range(n)]
    if debug_asserts_enabled():
        assert mat_mul_rows(mat_mul_rows(u, a), v) == d, "U*A*V != D"
        assert abs(det_bareiss(u)) == 1 and abs(det_bareiss(v)) == 1
        for i in range(n - 1):
            assert diag[i] >= 0 and (diag[i] == 0) <= (diag[i + 1] == 0)
            if diag[i]:
                assert diag[i + 1] % diag[i] == 0
    return SmithDecomposition(d, u, v)


def hermite_normal_form(a) -> HermiteBasis:
    """Column Hermite form A·T = H (zero columns leftmost, positive
    pivots, entries right of each pivot reduced into [0, pivot))."""
    a = copy_matrix(a)
    cols = [list(col) for col in zip(*a)] if a else []
    h, t = hnf_cols(cols, transform=True)
    hm = [list(row) for row in zip(*h)] if h else []
    tm = [list(row) for row in zip(*t)] if t else []
    if debug_asserts_enabled():
        assert mat_mul_rows(a, tm) == hm, "A*T != H"
        assert abs(det_bareiss(tm)) == 1
    return HermiteBasis(hm, tm)


def kernel_mod_m(a, m):
    """Generators of {x in (Z/m)^n : A·x = 0 mod m}.

    Computed from the Smith form: with U·A·V = D the kernel is spanned
    by the columns of V scaled by m/gcd(d_i, m).  Vectors that vanish
    mod m are dropped; the empty list means the kernel is trivial.
    """
    a = copy_matrix(a)
    m = int(m)
    if m < 1:
        raise ValueError("modulus must be positive")
    if m == 1:
        return []
    n = len(a)
    diag, _, v = snf_rows(a)
    out = []
    for i in range(n):
        scale = m // math.gcd(diag[i], m)
        vec = [v[r][i] * scale % m for r in range(n)]
        if any(vec):
            out.append(vec)
    return out
