"""Integer matrices: Smith and Hermite normal forms, lattice membership.

Matrices are lists of lists of Python ints (arbitrary precision).  Anything
indexable row by row (including numpy arrays) is accepted as input.
"""

from fractions import Fraction
from math import lcm


def to_int_matrix(m):
    return [[int(x) for x in row] for row in m]


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a, b):
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    return [[sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(cols)] for i in range(len(a))]


def det(m):
    """Exact determinant by fraction-free Bareiss elimination."""
    a = to_int_matrix(m)
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def snf(m):
    """Smith normal form.

    Returns ``(S, U, V)`` with ``U * M * V == S``, U and V unimodular, S
    diagonal with nonnegative entries d_1 | d_2 | ... (zeros last).
    """
    a = to_int_matrix(m)
    rows = len(a)
    cols = len(a[0]) if rows else 0
    u = identity(rows)
    v = identity(cols)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, k):
        a[dst] = [x + k * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, k):
        for row in a:
            row[dst] += k * row[src]
        for row in v:
            row[dst] += k * row[src]

    t = 0
    while t < min(rows, cols):
        nz = [(abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if a[i][j]]
        if not nz:
            break
        _, i0, j0 = min(nz)
        swap_rows(t, i0)
        swap_cols(t, j0)
        while True:
            moved = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(t, i, -(a[i][t] // a[t][t]))
                    if a[i][t]:
                        swap_rows(t, i)
                        moved = True
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(t, j, -(a[t][j] // a[t][t]))
                    if a[t][j]:
                        swap_cols(t, j)
                        moved = True
            if moved:
                continue
            bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                        if a[i][j] % a[t][t]), None)
            if bad is None:
                break
            add_row(bad[0], t, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return a, u, v


def invariant_factors(m):
    """Diagonal of the Smith form, length min(rows, cols), zeros included."""
    s, _, _ = snf(m)
    return [s[i][i] for i in range(min(len(s), len(s[0]) if s else 0))]


def hnf(m):
    """Row Hermite normal form.

    Returns ``(H, T, pivots)`` with ``T * M == H`` and T unimodular.  The first
    ``len(pivots)`` rows of H are a basis of the row lattice in echelon form
    with positive pivots and entries above each pivot reduced into
    ``[0, pivot)``; the remaining rows are zero.
    """
    a = to_int_matrix(m)
    rows = len(a)
    cols = len(a[0]) if rows else 0
    t = identity(rows)
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        if not any(a[i][c] for i in range(r, rows)):
            continue
        while True:
            i0 = min((i for i in range(r, rows) if a[i][c]), key=lambda i: abs(a[i][c]))
            a[r], a[i0] = a[i0], a[r]
            t[r], t[i0] = t[i0], t[r]
            clean = True
            for i in range(r + 1, rows):
                if a[i][c]:
                    q = a[i][c] // a[r][c]
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                    t[i] = [x - q * y for x, y in zip(t[i], t[r])]
                    if a[i][c]:
                        clean = False
            if clean:
                break
        if a[r][c] < 0:
            a[r] = [-x for x in a[r]]
            t[r] = [-x for x in t[r]]
        for i in range(r):
            q = a[i][c] // a[r][c]
            if q:
                a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                t[i] = [x - q * y for x, y in zip(t[i], t[r])]
        pivots.append(c)
        r += 1
    return a, t, pivots


def lattice_min_multiple(rows, v):
    """Least m > 0 with m*v in the integer row lattice of ``rows``.

    Returns ``(m, a)`` where ``a`` is an integer vector with ``a * rows == m * v``,
    or None when no positive multiple of v lies in the lattice.
    """
    rows = to_int_matrix(rows)
    v = [int(x) for x in v]
    if not any(v):
        return 1, [0] * len(rows)
    if not rows:
        return None
    h, t, pivots = hnf(rows)
    residual = [Fraction(x) for x in v]
    y = []
    for k, c in enumerate(pivots):
        coef = residual[c] / h[k][c]
        y.append(coef)
        if coef:
            residual = [x - coef * hk for x, hk in zip(residual, h[k])]
    if any(residual):
        return None
    m = lcm(*(c.denominator for c in y)) if y else 1
    ym = [int(c * m) for c in y]
    a = [sum(ym[k] * t[k][i] for k in range(len(ym))) for i in range(len(rows))]
    check = [sum(a[i] * rows[i][j] for i in range(len(rows))) for j in range(len(v))]
    assert check == [m * x for x in v], "lattice back-substitution inconsistent"
    return m, a
