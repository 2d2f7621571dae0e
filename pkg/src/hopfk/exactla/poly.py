"""Univariate polynomials over GF(q).

A polynomial is a list of encoded field elements, lowest degree first, with
no trailing zeros (the zero polynomial is ``[]``).  Only what the MeatAxe
needs is here: characteristic polynomials, evaluation at a matrix, and
splitting into distinct irreducible factors.
"""

import numpy as np

from .field import Echelon


def trim(f):
    f = [int(c) for c in f]
    while f and f[-1] == 0:
        f.pop()
    return f


def deg(f):
    return len(f) - 1


def add(F, f, g):
    n = max(len(f), len(g))
    a = np.zeros(n, dtype=np.int64)
    b = np.zeros(n, dtype=np.int64)
    a[: len(f)] = f
    b[: len(g)] = g
    return trim(F.add(a, b))


def sub(F, f, g):
    n = max(len(f), len(g))
    a = np.zeros(n, dtype=np.int64)
    b = np.zeros(n, dtype=np.int64)
    a[: len(f)] = f
    b[: len(g)] = g
    return trim(F.sub(a, b))


def mul(F, f, g):
    if not f or not g:
        return []
    prod = F.mul(np.asarray(f)[:, None], np.asarray(g)[None, :])
    out = np.zeros(len(f) + len(g) - 1, dtype=np.int64)
    for i in range(len(f)):
        out[i : i + len(g)] = F.add(out[i : i + len(g)], prod[i])
    return trim(out)


def divmod_(F, f, g):
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = np.array(f, dtype=np.int64)
    dg = len(g) - 1
    lead_inv = int(F.inv(g[-1]))
    g = np.asarray(g, dtype=np.int64)
    if len(r) <= dg:
        return [], trim(r)
    quot = np.zeros(len(r) - dg, dtype=np.int64)
    for k in range(len(r) - 1, dg - 1, -1):
        c = r[k]
        if c == 0:
            continue
        c = int(F.mul(c, lead_inv))
        quot[k - dg] = c
        r[k - dg : k + 1] = F.sub(r[k - dg : k + 1], F.mul(g, c))
    return trim(quot), trim(r[:dg])


def mod(F, f, g):
    return divmod_(F, f, g)[1]


def monic(F, f):
    if not f:
        return []
    inv = int(F.inv(f[-1]))
    return trim(F.mul(np.asarray(f), inv))


def gcd(F, f, g):
    f, g = trim(f), trim(g)
    while g:
        f, g = g, mod(F, f, g)
    return monic(F, f)


def derivative(F, f):
    out = []
    for i in range(1, len(f)):
        # i * f_i, with i reduced into the prime field
        out.append(int(F.mul(f[i], i % F.p)))
    return trim(out)


def powmod(F, f, k, m):
    result = [1]
    base = mod(F, f, m)
    while k:
        if k & 1:
            result = mod(F, mul(F, result, base), m)
        base = mod(F, mul(F, base, base), m)
        k >>= 1
    return result


def eval_matrix(F, f, a):
    """f(a) for a square matrix a, by Horner's rule."""
    n = a.shape[0]
    out = F.zeros((n, n))
    eye = F.identity(n)
    for c in reversed(f):
        out = F.matmul(out, a)
        if c:
            out = F.add(out, F.mul(eye, int(c)))
    return out


def charpoly(F, a):
    """Characteristic polynomial of a square matrix via relative Krylov chains."""
    n = a.shape[0]
    done = Echelon(F, n)
    result = [1]
    for j in range(n):
        e = np.zeros(n, dtype=np.int64)
        e[j] = 1
        if done.contains(e):
            continue
        chain = Echelon(F, n, track=True)
        for row in done.rows:
            chain.add(row)
        base = len(done)
        v = e
        k = 0
        vecs = []
        while chain.add(v):
            vecs.append(v)
            v = F.matmul(v, a)
            k += 1
        c = chain.coords(v)[base:]
        # v A^k = sum c_i v A^i  (mod the earlier chains)
        piece = trim(list(F.neg(c)) + [1])
        result = mul(F, result, piece)
        for w in vecs:
            done.add(w)
    return result


def _pth_root(F, f):
    # f(x) = g(x^p); coefficients of g are p-th roots
    root_exp = F.q // F.p
    return [F.power(f[i], root_exp) for i in range(0, len(f), F.p)]


def squarefree_parts(F, f):
    """Yun-style square-free decomposition: list of square-free factors.

    Their product has the same irreducible factors as f.
    """
    f = monic(F, f)
    out = []
    if deg(f) < 1:
        return out
    d = derivative(F, f)
    if not d:
        return squarefree_parts(F, _pth_root(F, f))
    c = gcd(F, f, d)
    w = divmod_(F, f, c)[0]
    if deg(w) > 0:
        out.append(w)
    if deg(c) > 0:
        out.extend(squarefree_parts(F, c))
    return out


def distinct_degree(F, f):
    out = []
    x = [0, 1]
    h = x
    i = 1
    fs = f
    while deg(fs) >= 2 * i:
        h = powmod(F, h, F.q, fs)
        g = gcd(F, fs, sub(F, h, x))
        if deg(g) > 0:
            out.append((g, i))
            fs = divmod_(F, fs, g)[0]
            h = mod(F, h, fs)
        i += 1
    if deg(fs) > 0:
        out.append((fs, deg(fs)))
    return out


def equal_degree(F, f, d, rng):
    n = deg(f)
    if n == d:
        return [monic(F, f)]
    r = n // d
    factors = [monic(F, f)]
    qd = F.q**d
    while len(factors) < r:
        h = trim(F.random(rng, n))
        if deg(h) < 1:
            continue
        if F.p == 2:
            t = list(h)
            cur = h
            for _ in range(F.e * d - 1):
                cur = mod(F, mul(F, cur, cur), f)
                t = add(F, t, cur)
        else:
            t = sub(F, powmod(F, h, (qd - 1) // 2, f), [1])
        nxt = []
        for u in factors:
            if deg(u) == d:
                nxt.append(u)
                continue
            g = gcd(F, u, t)
            if 0 < deg(g) < deg(u):
                nxt.append(g)
                nxt.append(monic(F, divmod_(F, u, g)[0]))
            else:
                nxt.append(u)
        factors = nxt
    return factors


def irreducible_factors(F, f):
    """Distinct monic irreducible factors of f, sorted by (degree, coefficients)."""
    rng = np.random.default_rng(0x5EED)
    found = set()
    for part in squarefree_parts(F, f):
        for g, d in distinct_degree(F, part):
            for h in equal_degree(F, g, d, rng):
                found.add(tuple(h))
    return [list(h) for h in sorted(found, key=lambda h: (len(h), h[::-1]))]
