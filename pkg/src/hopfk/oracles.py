"""Slow, independent reference computations used to check the fast kernels.

Nothing here shares code with ``exactla.intmat`` or the structure layer: the
Smith form is read off determinantal divisors, lattice membership is decided
by comparing gcds of maximal minors, and projectivity by asking whether the
projective cover splits.
"""

from fractions import Fraction
from itertools import combinations
from math import gcd

import numpy as np

from .algcore.algebra import direct_sum, hom_space, quotient, regular_module, spin, submodule
from .algcore.structure import projective_cover
from . import chop


def bareiss_det(m):
    """Exact determinant of a square integer matrix (fraction-free elimination)."""
    a = [list(map(int, r)) for r in m]
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


def minors_gcd(m, k, rows=None):
    """gcd of all k x k minors, optionally restricted to minors using every row in ``rows``."""
    r, c = len(m), len(m[0]) if m else 0
    g = 0
    for ri in combinations(range(r), k):
        if rows is not None and not set(rows) <= set(ri):
            continue
        for ci in combinations(range(c), k):
            g = gcd(g, bareiss_det([[m[i][j] for j in ci] for i in ri]))
    return g


def rational_rank(m):
    a = [[Fraction(int(x)) for x in r] for r in m]
    rank, cols = 0, len(a[0]) if a else 0
    for col in range(cols):
        piv = next((i for i in range(rank, len(a)) if a[i][col]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        for i in range(len(a)):
            if i != rank and a[i][col]:
                f = a[i][col] / a[rank][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[rank])]
        rank += 1
    return rank


def snf_diagonal(m):
    """Invariant factors d_k / d_(k-1) from determinantal divisors, zeros padded."""
    m = [list(map(int, r)) for r in m]
    n = min(len(m), len(m[0]) if m else 0)
    out, prev = [], 1
    for k in range(1, n + 1):
        d = minors_gcd(m, k)
        if d == 0:
            out.extend([0] * (n - len(out)))
            break
        out.append(d // prev)
        prev = d
    return out


def min_multiple_exhaustive(rows, v, limit=50):
    """Least m in 1..limit with m v in the row lattice, or None.

    With r = rank(rows) = rank(rows + v), the lattice L + Z m v contains L
    with index d_r(L) / gcd(d_r(L), m g), where g is the gcd of the r x r
    minors that use the row v.  So m v lies in L exactly when d_r(L) divides
    m g.
    """
    rows = [list(map(int, r)) for r in rows]
    v = list(map(int, v))
    if not any(v):
        return 1
    r = rational_rank(rows)
    if r == 0 or rational_rank(rows + [v]) != r:
        return None
    d = minors_gcd(rows, r)
    g = minors_gcd(rows + [v], r, rows=[len(rows)])
    for m in range(1, limit + 1):
        if (m * g) % d == 0:
            return m
    return None


def is_projective_by_splitting(M, seed=0):
    """M is projective iff its projective cover P -> M admits a section."""
    F = M.field
    cover = projective_cover(M, seed)
    P, pi = cover.module, cover.surjection
    hom = hom_space(M, P)
    if hom.dim == 0:
        return M.dim == 0
    # sum_t x_t (S_t @ pi) = I is linear in x.
    system = np.stack([F.matmul(S, pi).reshape(-1) for S in hom.basis])
    x = F.solve_left(system, F.identity(M.dim).reshape(1, -1))
    return x is not None


# -- random modules ----------------------------------------------------------

def module_pieces(A, seed=0):
    simples, pl = chop.pims(A, seed)
    return list(simples.simples) + list(pl.pims) + [regular_module(A)]


def random_module(A, rng, max_dim=None, seed=0):
    """A seeded random module: a sub, quotient or subquotient of a small direct sum."""
    F = A.field
    pieces = module_pieces(A, seed)
    if max_dim is not None:
        pieces = [P for P in pieces if P.dim <= max_dim] or pieces[:1]
    while True:
        k = int(rng.integers(1, 3))
        chosen = [pieces[int(i)] for i in rng.integers(0, len(pieces), size=k)]
        M = direct_sum(*chosen) if k > 1 else chosen[0]
        op = int(rng.integers(0, 4))
        if op in (1, 3):
            W = spin(M, F.random(rng, (int(rng.integers(1, 3)), M.dim)))
            if W.shape[0] == 0:
                continue
            if op == 1:
                M = submodule(M, W)
            else:
                M = quotient(M, W)[0]
        elif op == 2:
            W = spin(M, F.random(rng, (1, M.dim)))
            if W.shape[0] == 0:
                continue
            M = submodule(M, W)
            W2 = spin(M, F.random(rng, (1, M.dim)))
            if 0 < W2.shape[0] < M.dim:
                M = quotient(M, W2)[0]
        if M.dim > 0:
            return M
