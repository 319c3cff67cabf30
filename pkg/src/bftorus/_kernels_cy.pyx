# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled integer linear-algebra kernels.

Cython twin of ``_kernels_py``: identical algorithms, identical output
bits, unbounded Python integers for the entries (no C overflow), typed
loop counters and C-level list access for the speed.  Keep the two
files in lockstep — the bit-exactness test compares them on randomized
inputs.
"""

BACKEND = "compiled"


def _xgcd(a, b):
    """Extended gcd: returns (g, s, t) with g = s*a + t*b, g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        return -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def mat_mul_rows(a, b):
    """Product of two row-major integer matrices (lists of rows)."""
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t k = len(b)
    cdef Py_ssize_t m = len(b[0]) if k else 0
    cdef Py_ssize_t i, t, j
    cdef list out = []
    cdef list ai, row, bt
    for i in range(n):
        ai = a[i]
        row = [0] * m
        for t in range(k):
            e = ai[t]
            if e:
                bt = b[t]
                for j in range(m):
                    row[j] = row[j] + e * bt[j]
        out.append(row)
    return out


def hnf_cols(cols, transform=False):
    """Column Hermite normal form; see the pure twin for the contract."""
    cdef Py_ssize_t m = len(cols)
    cdef list h = [list(col) for col in cols]
    if m == 0:
        return h, ([] if transform else None)
    cdef Py_ssize_t n = len(h[0])
    cdef bint want_t = bool(transform)
    cdef list t = None
    cdef Py_ssize_t i, j, r, c, piv
    cdef list hj, hp, hc, tj, tp, tc
    if want_t:
        t = [[1 if i == j else 0 for i in range(m)] for j in range(m)]
    c = m - 1
    for i in range(n - 1, -1, -1):
        if c < 0:
            break
        piv = -1
        while True:
            piv = -1
            best = 0
            for j in range(c + 1):
                e = h[j][i]
                if e:
                    e = -e if e < 0 else e
                    if piv < 0 or e < best:
                        best = e
                        piv = j
            if piv < 0:
                break
            done = True
            p = h[piv][i]
            for j in range(c + 1):
                if j == piv:
                    continue
                e = h[j][i]
                if e:
                    q = e // p
                    if q:
                        hj = h[j]
                        hp = h[piv]
                        for r in range(n):
                            hj[r] = hj[r] - q * hp[r]
                        if want_t:
                            tj = t[j]
                            tp = t[piv]
                            for r in range(m):
                                tj[r] = tj[r] - q * tp[r]
                    if h[j][i]:
                        done = False
            if done:
                break
        if piv < 0:
            continue  # row i is identically zero on the active columns
        if piv != c:
            h[piv], h[c] = h[c], h[piv]
            if want_t:
                t[piv], t[c] = t[c], t[piv]
        if h[c][i] < 0:
            h[c] = [-e for e in h[c]]
            if want_t:
                t[c] = [-e for e in t[c]]
        p = h[c][i]
        for j in range(c + 1, m):
            q = h[j][i] // p
            if q:
                hj = h[j]
                hc = h[c]
                for r in range(n):
                    hj[r] = hj[r] - q * hc[r]
                if want_t:
                    tj = t[j]
                    tc = t[c]
                    for r in range(m):
                        tj[r] = tj[r] - q * tc[r]
        c -= 1
    return h, t


def solve_upper_cols(hcols, rhs):
    """Solve H·x = rhs in integers, H upper-triangular column list."""
    cdef Py_ssize_t n = len(rhs)
    cdef list x = [0] * n
    cdef Py_ssize_t i, j
    cdef list col
    for i in range(n - 1, -1, -1):
        s = rhs[i]
        for j in range(i + 1, n):
            xj = x[j]
            if xj:
                col = hcols[j]
                s = s - col[i] * xj
        p = hcols[i][i]
        q, r = divmod(s, p)
        if r:
            return None
        x[i] = q
    return x


def det_bareiss(rows):
    """Exact determinant by fraction-free (Bareiss) elimination."""
    cdef Py_ssize_t n = len(rows)
    if n == 0:
        return 1
    cdef list a = [list(r) for r in rows]
    cdef Py_ssize_t i, j, k
    cdef int sign = 1
    cdef list ai, ak
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            ai = a[i]
            aik = ai[k]
            ak = a[k]
            for j in range(k + 1, n):
                ai[j] = (ai[j] * akk - aik * ak[j]) // prev
            ai[k] = 0
        prev = akk
    return sign * a[n - 1][n - 1]


def snf_rows(rows):
    """Smith normal form (diag, U, V) with U·A·V = diag; see pure twin."""
    cdef list a = [list(r) for r in rows]
    cdef Py_ssize_t n = len(a)
    cdef list u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    cdef list v = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    cdef Py_ssize_t t, i, j, pi, pj
    cdef list ai, at, ui, ut, uj, row

    for t in range(n):
        while True:
            pi = -1
            pj = -1
            best = 0
            for i in range(t, n):
                ai = a[i]
                for j in range(t, n):
                    e = ai[j]
                    if e:
                        e = -e if e < 0 else e
                        if pi < 0 or e < best:
                            best = e
                            pi = i
                            pj = j
            if pi < 0:
                break
            if pi != t:
                a[pi], a[t] = a[t], a[pi]
                u[pi], u[t] = u[t], u[pi]
            if pj != t:
                for row in a:
                    row[pj], row[t] = row[t], row[pj]
                for row in v:
                    row[pj], row[t] = row[t], row[pj]
            p = a[t][t]
            clean = True
            for i in range(t + 1, n):
                e = a[i][t]
                if e:
                    q = e // p
                    if q:
                        ai = a[i]
                        at = a[t]
                        for j in range(t, n):
                            ai[j] = ai[j] - q * at[j]
                        ui = u[i]
                        ut = u[t]
                        for j in range(n):
                            ui[j] = ui[j] - q * ut[j]
                    if a[i][t]:
                        clean = False
            for j in range(t + 1, n):
                e = a[t][j]
                if e:
                    q = e // p
                    if q:
                        for row in a:
                            row[j] = row[j] - q * row[t]
                        for row in v:
                            row[j] = row[j] - q * row[t]
                    if a[t][j]:
                        clean = False
            if clean:
                ok = True
                for i in range(t + 1, n):
                    if a[i][t]:
                        ok = False
                        break
                if ok:
                    for j in range(t + 1, n):
                        if a[t][j]:
                            ok = False
                            break
                if ok:
                    break

    cdef list d = [a[i][i] for i in range(n)]
    for i in range(n):
        if d[i] < 0:
            d[i] = -d[i]
            u[i] = [-e for e in u[i]]

    cdef bint changed = True
    while changed:
        changed = False
        for i in range(n - 1):
            if d[i] == 0 and d[i + 1] != 0:
                d[i], d[i + 1] = d[i + 1], d[i]
                u[i], u[i + 1] = u[i + 1], u[i]
                for row in v:
                    row[i], row[i + 1] = row[i + 1], row[i]
                changed = True
        for i in range(n):
            if d[i] == 0:
                continue
            for j in range(i + 1, n):
                # d[i] shrinks when a fold fires, so re-read it every pass
                di = d[i]
                dj = d[j]
                if dj % di == 0:
                    continue
                g, s, tt = _xgcd(di, dj)
                lcm = di // g * dj
                bi = dj // g
                ai_ = di // g
                ui = u[i]
                uj = u[j]
                u[i] = [s * x + tt * y for x, y in zip(ui, uj)]
                u[j] = [ai_ * y - bi * x for x, y in zip(ui, uj)]
                cj = tt * bi
                ci = s * ai_
                for row in v:
                    vi = row[i]
                    vj = row[j]
                    row[i] = vi + vj
                    row[j] = ci * vj - cj * vi
                d[i], d[j] = g, lcm
                changed = True
    return d, u, v
