"""Finite fields GF(p^e) and dense linear algebra over them.

An element of GF(p^e) is the reduced residue c_0 + c_1 x + ... + c_{e-1} x^{e-1}
modulo a monic irreducible polynomial.  It is stored as the integer
c_0 + c_1 p + ... + c_{e-1} p^{e-1}, so 0 and 1 are the field's zero and one
and the prime field embeds as {0, ..., p-1}.

Matrices are plain ``numpy.int64`` arrays of such integers; every operation
that needs field semantics goes through a :class:`FiniteField` instance.
"""

import functools
import itertools

import numpy as np

from ..errors import DimensionMismatch, InputError


def _is_prime(p):
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p**0.5) + 1))


def _polymod_p(a, b, p):
    # remainder of integer coefficient lists (low -> high) over F_p
    a = [c % p for c in a]
    inv_lead = pow(b[-1], -1, p)
    while len(a) >= len(b):
        coef = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] = (a[shift + i] - coef * c) % p
        while a and a[-1] == 0:
            a.pop()
    return a


def is_irreducible_mod_p(poly, p):
    """Exhaustive check that ``poly`` has no monic factor of degree <= deg/2."""
    e = len(poly) - 1
    if e < 1:
        return False
    for d in range(1, e // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            if not _polymod_p(poly, list(tail) + [1], p):
                return False
    return True


def first_irreducible(p, e):
    """Lexicographically first monic irreducible polynomial of degree e over F_p."""
    for k in range(p**e):
        coeffs = [(k // p**i) % p for i in range(e)] + [1]
        if is_irreducible_mod_p(coeffs, p):
            return tuple(coeffs)
    raise AssertionError("no irreducible polynomial found")  # unreachable


class FiniteField:
    """The field GF(p^e) defined by ``modulus`` (coefficients low -> high).

    Instances are interned; build them with :func:`GF`.
    """

    def __init__(self, p, modulus):
        if not _is_prime(p):
            raise InputError(f"characteristic {p} is not prime")
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) < 2 or modulus[-1] != 1:
            raise InputError(f"modulus {modulus} must be monic of degree >= 1")
        if not is_irreducible_mod_p(list(modulus), p):
            raise InputError(f"modulus {modulus} is reducible over F_{p}")
        self.p = p
        self.e = len(modulus) - 1
        self.q = p**self.e
        self.modulus = modulus
        self._pows = np.array([p**i for i in range(self.e)], dtype=np.int64)
        if self.e > 1:
            self._build_tables()
        else:
            vals = np.arange(p, dtype=np.int64)
            self._neg = (-vals) % p
            self._inv = np.array([0] + [pow(int(v), -1, p) for v in range(1, p)], dtype=np.int64)

    def _build_tables(self):
        q, e, p = self.q, self.e, self.p
        elems = np.arange(q, dtype=np.int64)
        dig = self.digits(elems)  # (e, q)
        self._add = self.encode((dig[:, :, None] + dig[:, None, :]) % p)
        self._sub = self.encode((dig[:, :, None] - dig[:, None, :]) % p)
        self._neg = self.encode((-dig) % p)
        conv = np.zeros((2 * e - 1, q, q), dtype=np.int64)
        for i in range(e):
            for j in range(e):
                conv[i + j] += dig[i][:, None] * dig[j][None, :]
        self._mul = self.encode(self._reduce(conv))
        inv = np.zeros(q, dtype=np.int64)
        rows, cols = np.nonzero(self._mul == 1)
        inv[rows] = cols
        self._inv = inv

    # -- representation ---------------------------------------------------

    def __repr__(self):
        if self.e == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.e})"

    def __reduce__(self):
        return (GF, (self.p, self.e, self.modulus))

    def digits(self, a):
        """Coefficient arrays: ``digits(a)[i]`` is the x^i coefficient of each entry."""
        a = np.asarray(a, dtype=np.int64)
        return (a[None, ...] // self._pows.reshape((-1,) + (1,) * a.ndim)) % self.p

    def encode(self, dig):
        dig = np.asarray(dig, dtype=np.int64)
        return np.tensordot(self._pows, dig, axes=(0, 0))

    def _reduce(self, conv):
        # fold x^d, d >= e, back using x^e = -(m_0 + ... + m_{e-1} x^{e-1})
        conv = conv % self.p
        e = self.e
        for d in range(conv.shape[0] - 1, e - 1, -1):
            top = conv[d]
            if not top.any():
                continue
            for k in range(e):
                if self.modulus[k]:
                    conv[d - e + k] = (conv[d - e + k] - self.modulus[k] * top) % self.p
        return conv[:e]

    def element(self, value):
        """Field element from an int (prime-field value) or a coefficient sequence."""
        if isinstance(value, (int, np.integer)):
            if self.e == 1:
                return int(value) % self.p
            if 0 <= value < self.p:
                return int(value)
            raise InputError(f"integer {value} is not a prime-field element of {self}; "
                             "use a coefficient tuple")
        coeffs = [int(c) for c in value]
        if len(coeffs) > self.e or any(not 0 <= c < self.p for c in coeffs):
            raise InputError(f"{tuple(coeffs)} is not a reduced residue in {self}")
        return sum(c * self.p**i for i, c in enumerate(coeffs))

    def coeffs(self, a):
        a = int(a)
        return tuple((a // self.p**i) % self.p for i in range(self.e))

    def to_plain(self, a):
        """JSON/TOML friendly form of one element: int for prime fields, list otherwise."""
        if self.e == 1:
            return int(a)
        c = list(self.coeffs(a))
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        return int(c[0]) if len(c) == 1 else c

    def asarray(self, a):
        arr = np.array(a, dtype=np.int64)
        if arr.size and (arr.min() < 0 or arr.max() >= self.q):
            raise InputError(f"entries out of range for {self}")
        return arr

    def elements(self):
        return range(self.q)

    # -- elementwise arithmetic -------------------------------------------

    def add(self, a, b):
        if self.e == 1:
            return (np.asarray(a) + b) % self.p
        return self._add[a, b]

    def sub(self, a, b):
        if self.e == 1:
            return (np.asarray(a) - b) % self.p
        return self._sub[a, b]

    def neg(self, a):
        return self._neg[a]

    def mul(self, a, b):
        if self.e == 1:
            return (np.asarray(a) * b) % self.p
        return self._mul[a, b]

    def inv(self, a):
        if np.any(np.asarray(a) == 0):
            raise ZeroDivisionError("inverse of zero")
        return self._inv[a]

    def power(self, a, k):
        result, base = 1, int(a)
        if k < 0:
            base, k = int(self.inv(base)), -k
        while k:
            if k & 1:
                result = int(self.mul(result, base))
            base = int(self.mul(base, base))
            k >>= 1
        return result

    def sum(self, a, axis=None):
        a = np.asarray(a, dtype=np.int64)
        if self.e == 1:
            return np.sum(a, axis=axis) % self.p
        dig = self.digits(a)
        ax = None if axis is None else (axis + 1 if axis >= 0 else axis)
        if ax is None:
            return int(self.encode(dig.reshape(self.e, -1).sum(axis=1) % self.p))
        return self.encode(dig.sum(axis=ax) % self.p)

    def scale(self, c, a):
        return self.mul(np.asarray(a, dtype=np.int64), int(c))

    # -- bilinear products -------------------------------------------------

    def contract(self, subscripts, a, b):
        """``numpy.einsum`` of two operands with field arithmetic."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.e == 1:
            return np.einsum(subscripts, a, b) % self.p
        da, db = self.digits(a), self.digits(b)
        e = self.e
        out = None
        for i in range(e):
            for j in range(e):
                term = np.einsum(subscripts, da[i], db[j])
                if out is None:
                    out = np.zeros((2 * e - 1,) + term.shape, dtype=np.int64)
                out[i + j] += term
        return self.encode(self._reduce(out))

    def matmul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if a.shape[-1] != b.shape[-2 if b.ndim > 1 else 0]:
            raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
        if self.e == 1:
            return (a @ b) % self.p
        da, db = self.digits(a), self.digits(b)
        e = self.e
        out = None
        for i in range(e):
            for j in range(e):
                term = da[i] @ db[j]
                if out is None:
                    out = np.zeros((2 * e - 1,) + term.shape, dtype=np.int64)
                out[i + j] += term
        return self.encode(self._reduce(out))

    def matpow(self, a, k):
        result = self.identity(a.shape[0])
        base = a
        while k:
            if k & 1:
                result = self.matmul(result, base)
            base = self.matmul(base, base)
            k >>= 1
        return result

    def kron(self, a, b):
        """Kronecker product; the row/column index of the left factor is major."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        out = self.mul(a[:, None, :, None], b[None, :, None, :])
        return out.reshape(a.shape[0] * b.shape[0], a.shape[1] * b.shape[1])

    def lincomb(self, coeffs, mats):
        """sum_i coeffs[i] * mats[i] for a stack of arrays ``mats``."""
        mats = np.asarray(mats, dtype=np.int64)
        coeffs = np.asarray(coeffs, dtype=np.int64)
        flat = mats.reshape(mats.shape[0], -1)
        return self.matmul(coeffs, flat).reshape(mats.shape[1:])

    # -- constructors -------------------------------------------------------

    def zeros(self, shape):
        return np.zeros(shape, dtype=np.int64)

    def identity(self, n):
        return np.eye(n, dtype=np.int64)

    def random(self, rng, shape):
        return rng.integers(0, self.q, size=shape, dtype=np.int64)

    def random_nonzero(self, rng, shape):
        return rng.integers(1, self.q, size=shape, dtype=np.int64)

    # -- Gaussian elimination ---------------------------------------------

    def rref(self, a):
        """Reduced row echelon form; returns ``(R, pivot_columns)``."""
        m = np.array(a, dtype=np.int64, copy=True)
        if m.ndim != 2:
            raise DimensionMismatch("rref needs a 2-d array")
        rows, cols = m.shape
        pivots = []
        r = 0
        for c in range(cols):
            if r == rows:
                break
            nz = np.flatnonzero(m[r:, c])
            if nz.size == 0:
                continue
            piv = r + nz[0]
            if piv != r:
                m[[r, piv]] = m[[piv, r]]
            lead = m[r, c]
            if lead != 1:
                m[r, c:] = self.mul(m[r, c:], self._inv[lead])
            col = m[:, c].copy()
            col[r] = 0
            hit = np.flatnonzero(col)
            if hit.size:
                m[hit, c:] = self.sub(m[hit, c:], self.mul(col[hit, None], m[r, c:][None, :]))
            pivots.append(c)
            r += 1
        return m, pivots

    def rank(self, a):
        a = np.asarray(a)
        if a.size == 0:
            return 0
        return len(self.rref(a)[1])

    def row_space(self, a, cols=None):
        """Nonzero rows of the RREF: a canonical basis of the row space."""
        a = np.asarray(a, dtype=np.int64)
        if a.ndim == 1:
            a = a[None, :]
        if a.shape[0] == 0:
            return np.zeros((0, a.shape[1] if cols is None else cols), dtype=np.int64)
        r, piv = self.rref(a)
        return r[: len(piv)]

    def kernel(self, a):
        """Basis (as rows) of the right null space {v : a v^T = 0}."""
        a = np.asarray(a, dtype=np.int64)
        cols = a.shape[1]
        if a.shape[0] == 0:
            return self.identity(cols)
        r, piv = self.rref(a)
        free = [c for c in range(cols) if c not in set(piv)]
        k = np.zeros((len(free), cols), dtype=np.int64)
        if free:
            k[np.arange(len(free)), free] = 1
            if piv:
                k[:, piv] = self.neg(r[: len(piv)][:, free]).T
        return k

    def left_kernel(self, a):
        """Basis (as rows) of {x : x a = 0}."""
        return self.kernel(np.asarray(a).T)

    def solve(self, a, b):
        """A solution x of a x = b (b a vector or matrix of columns), or None."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        vec = b.ndim == 1
        if vec:
            b = b[:, None]
        rows, cols = a.shape
        r, piv = self.rref(np.hstack([a, b]))
        if piv and piv[-1] >= cols:
            return None
        x = np.zeros((cols, b.shape[1]), dtype=np.int64)
        if piv:
            x[piv] = r[: len(piv), cols:]
        return x[:, 0] if vec else x

    def solve_left(self, a, b):
        """A solution x of x a = b (rows), or None."""
        b = np.asarray(b, dtype=np.int64)
        x = self.solve(np.asarray(a).T, b.T)
        return None if x is None else x.T

    def inverse(self, a):
        a = np.asarray(a, dtype=np.int64)
        n = a.shape[0]
        if a.shape != (n, n):
            raise DimensionMismatch("inverse of a non-square matrix")
        r, piv = self.rref(np.hstack([a, self.identity(n)]))
        if len(piv) < n or piv[n - 1] != n - 1:
            raise ZeroDivisionError("matrix is singular")
        return r[:, n:]

    def is_invertible(self, a):
        a = np.asarray(a)
        return a.shape[0] == a.shape[1] and self.rank(a) == a.shape[0]


class Echelon:
    """Incrementally grown basis kept in reduced row echelon form.

    With ``track=True`` it also records how each echelon row is expressed in
    terms of the vectors that were accepted by :meth:`add`, which gives
    coordinates with respect to those vectors.
    """

    def __init__(self, field, dim, track=False):
        self.field = field
        self.dim = dim
        self.rows = np.zeros((0, dim), dtype=np.int64)
        self.pivots = []
        self.track = track
        self.trans = np.zeros((0, 0), dtype=np.int64)

    def __len__(self):
        return len(self.pivots)

    def reduce(self, v):
        v = np.asarray(v, dtype=np.int64)
        if not self.pivots:
            return v.copy()
        f = self.field
        return f.sub(v, f.matmul(v[self.pivots], self.rows))

    def contains(self, v):
        return not self.reduce(v).any()

    def add(self, v):
        """Add v if independent; return True when the span grew."""
        f = self.field
        v = np.asarray(v, dtype=np.int64)
        coeffs = v[self.pivots].copy() if self.pivots else np.zeros(0, dtype=np.int64)
        r = self.reduce(v)
        nz = np.flatnonzero(r)
        if nz.size == 0:
            return False
        p = int(nz[0])
        lead_inv = f.inv(r[p])
        r = f.mul(r, lead_inv)
        if self.track:
            k = self.trans.shape[1]
            t = np.zeros(k + 1, dtype=np.int64)
            if len(self.pivots):
                t[:k] = f.neg(f.matmul(coeffs, self.trans))
            t[k] = 1
            t = f.mul(t, lead_inv)
            self.trans = np.hstack([self.trans, np.zeros((self.trans.shape[0], 1), dtype=np.int64)])
        col = self.rows[:, p].copy()
        if col.any():
            self.rows = f.sub(self.rows, f.mul(col[:, None], r[None, :]))
            if self.track:
                self.trans = f.sub(self.trans, f.mul(col[:, None], t[None, :]))
        self.rows = np.vstack([self.rows, r])
        self.pivots.append(p)
        if self.track:
            self.trans = np.vstack([self.trans, t])
        return True

    def coords(self, v):
        """Coordinates of v in terms of the accepted vectors (``track`` mode)."""
        v = np.asarray(v, dtype=np.int64)
        c = v[self.pivots]
        return self.field.matmul(c, self.trans)

    def basis(self):
        """Basis sorted into genuine RREF order (pivots increasing)."""
        order = np.argsort(self.pivots, kind="stable")
        return self.rows[order]


@functools.lru_cache(maxsize=None)
def _field(p, modulus):
    return FiniteField(p, modulus)


def GF(p, e=1, modulus=None):
    """Interned finite field of order p^e.

    ``modulus`` lists the coefficients (low degree first) of a monic irreducible
    polynomial of degree e; by default the lexicographically first one is used.
    """
    if modulus is None:
        modulus = (0, 1) if e == 1 else first_irreducible(p, e)
    modulus = tuple(int(c) for c in modulus)
    if len(modulus) - 1 != e:
        raise InputError(f"modulus {modulus} does not have degree {e}")
    return _field(int(p), modulus)
