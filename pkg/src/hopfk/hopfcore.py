"""Hopf algebras, comodule algebras, the trivial module and twisted tensor products.

Structure maps are stored column-wise: column j of ``comul`` (an n^2 x n
matrix) holds the coordinates of Delta(a_j) on the basis a_i (x) a_k of
H (x) H, index i*n + k; ``counit`` is 1 x n and column j of ``antipode`` is
sigma(a_j).  A coaction A -> A (x) H is a (dim A * dim H) x dim A matrix in
the same way.  Internally these are reshaped to tensors, e.g.
``delta[i, k, j]`` is the coefficient of a_i (x) a_k in Delta(a_j).
"""

from functools import cached_property

import numpy as np

from .algcore.algebra import Algebra, ModuleRep, validate_algebra
from .errors import (AntipodeAxiomFails, AntipodeSingular, CounitAxiomFails, DimensionMismatch,
                     NotAGroup, NotBialgebraMap, NotCoassociative, NotComoduleAlgebra,
                     NotPrimitiveRoot)


def tensor_algebra(A, B):
    """A (x) B with basis a_i (x) b_k at index i * dim B + k."""
    F = A.field
    n, m = A.dim, B.dim
    c = F.contract("ijs,klt->ikjlst", A.c, B.c).reshape(n * m, n * m, n * m)
    unit = F.kron(A.unit[None], B.unit[None])[0]
    return Algebra(F, c, unit, name=f"{A.name}(x){B.name}")


def _first_bad(mask):
    bad = np.argwhere(mask)
    return tuple(int(x) for x in bad[0]) if bad.size else None


class HopfAlgebra:
    def __init__(self, algebra, comul, counit, antipode, name="", basis_names=None):
        F = algebra.field
        n = algebra.dim
        self.algebra = algebra
        self.field = F
        self.dim = n
        self.comul = F.asarray(comul).reshape(n * n, n)
        self.counit = F.asarray(counit).reshape(1, n)
        self.antipode = F.asarray(antipode).reshape(n, n)
        self.name = name or algebra.name
        self.basis_names = list(basis_names) if basis_names else [f"h{i}" for i in range(n)]

    def __repr__(self):
        return f"<HopfAlgebra {self.name!r} dim={self.dim} over {self.field}>"

    @property
    def delta(self):
        n = self.dim
        return self.comul.reshape(n, n, n)

    @property
    def eps(self):
        return self.counit[0]

    @cached_property
    def tensor_square(self):
        return tensor_algebra(self.algebra, self.algebra)

    @cached_property
    def as_comodule_algebra(self):
        """H as a comodule algebra over itself via rho = Delta."""
        return ComoduleAlgebra(self.algebra, self, self.comul, check=False)

    @cached_property
    def antipode_inverse(self):
        return antipode_inverse(self)

    @cached_property
    def trivial(self):
        return trivial_module(self)

    @cached_property
    def regular(self):
        from .algcore.algebra import regular_module
        return regular_module(self.algebra)

    def tensor(self, V, W):
        """The H-module V (x) W, (v (x) w) h = v h_1 (x) w h_2."""
        return twist(self.as_comodule_algebra, V, W)


def _coassociativity_defect(F, rho, delta):
    # (rho (x) id) rho versus (id (x) Delta) rho, as [x, y, z, i] tensors
    lhs = F.contract("xyk,klj->xylj", rho, rho)
    rhs = F.contract("klj,yzl->kyzj", rho, delta)
    return _first_bad((lhs != rhs).any(axis=(0, 1, 2)))


def _multiplicativity_defect(F, A, AH, rho):
    """First basis pair (i, j) with rho(a_i a_j) != rho(a_i) rho(a_j)."""
    n = A.dim
    rows = rho.reshape(-1, n).T                        # rho(a_i) as rows
    t = F.contract("ix,xyz->iyz", rows, AH.c)
    prod = F.contract("jy,iyz->ijz", rows, t)
    expect = F.contract("ijk,kz->ijz", A.c, rows)
    return _first_bad((prod != expect).any(axis=2))


def validate_hopf(algebra, comul, counit, antipode, name="", basis_names=None):
    """Check every Hopf axiom and return a :class:`HopfAlgebra`.

    Order: coassociativity, counit, bialgebra (Delta and epsilon are unital
    algebra maps), antipode.  The first failing family is raised.
    """
    H = HopfAlgebra(algebra, comul, counit, antipode, name=name, basis_names=basis_names)
    F, A, n = H.field, H.algebra, H.dim
    delta, eps, S = H.delta, H.eps, H.antipode
    eye = F.identity(n)

    bad = _coassociativity_defect(F, delta, delta)
    if bad is not None:
        raise NotCoassociative(f"(Delta (x) id) Delta != (id (x) Delta) Delta on {H.basis_names[bad[0]]}")

    left = F.contract("i,ikj->kj", eps, delta)         # (eps (x) id) Delta
    right = F.contract("ikj,k->ij", delta, eps)        # (id (x) eps) Delta
    for which, got in (("(eps (x) id) Delta", left), ("(id (x) eps) Delta", right)):
        bad = _first_bad((got != eye).any(axis=0))
        if bad is not None:
            raise CounitAxiomFails(f"{which} != id on {H.basis_names[bad[0]]}")

    HH = H.tensor_square
    if not np.array_equal(F.matmul(H.comul, A.unit), HH.unit):
        raise NotBialgebraMap("Delta(1) != 1 (x) 1")
    if F.matmul(eps, A.unit) != 1:
        raise NotBialgebraMap("eps(1) != 1")
    bad = _multiplicativity_defect(F, A, HH, delta)
    if bad is not None:
        i, j = bad
        raise NotBialgebraMap(f"Delta(a b) != Delta(a) Delta(b) for a = {H.basis_names[i]}, "
                              f"b = {H.basis_names[j]}")
    prod_eps = F.contract("ijk,k->ij", A.c, eps)
    bad = _first_bad(prod_eps != F.mul(eps[:, None], eps[None, :]))
    if bad is not None:
        i, j = bad
        raise NotBialgebraMap(f"eps(a b) != eps(a) eps(b) for a = {H.basis_names[i]}, "
                              f"b = {H.basis_names[j]}")

    unit_eps = F.mul(A.unit[:, None], eps[None, :])    # column j = eps(a_j) 1
    t = F.contract("ikj,xi->xkj", delta, S)            # sigma(h_1) (x) h_2
    left = F.contract("xkj,xkt->tj", t, A.c)
    t = F.contract("ikj,xk->ixj", delta, S)            # h_1 (x) sigma(h_2)
    right = F.contract("ixj,ixt->tj", t, A.c)
    for which, got in (("sigma(h_1) h_2", left), ("h_1 sigma(h_2)", right)):
        bad = _first_bad((got != unit_eps).any(axis=0))
        if bad is not None:
            raise AntipodeAxiomFails(f"{which} != eps(h) 1 for h = {H.basis_names[bad[0]]}")
    return H


def antipode_inverse(H):
    """sigma^{-1}, checked against sigma^{-1}(h_2) h_1 = eps(h) 1 = h_2 sigma^{-1}(h_1)."""
    F, A = H.field, H.algebra
    try:
        Si = F.inverse(H.antipode)
    except ZeroDivisionError:
        raise AntipodeSingular("the antipode is not invertible") from None
    delta = H.delta
    unit_eps = F.mul(A.unit[:, None], H.eps[None, :])
    t = F.contract("ikj,xk->xij", delta, Si)           # sigma^{-1}(h_2) (x) h_1
    left = F.contract("xij,xit->tj", t, A.c)
    t = F.contract("ikj,xi->kxj", delta, Si)           # h_2 (x) sigma^{-1}(h_1)
    right = F.contract("kxj,kxt->tj", t, A.c)
    if not (np.array_equal(left, unit_eps) and np.array_equal(right, unit_eps)):
        raise AntipodeAxiomFails("sigma^{-1}(h_2) h_1 = eps(h) 1 = h_2 sigma^{-1}(h_1) fails")
    return Si


def trivial_module(H):
    """The 1-dimensional module on which h acts as eps(h)."""
    return ModuleRep(H.algebra, H.eps.reshape(H.dim, 1, 1), name="trivial")


class ComoduleAlgebra:
    """An algebra A with a coaction rho: A -> A (x) H that is an algebra map."""

    def __init__(self, algebra, hopf, coaction, check=True, name=""):
        F = algebra.field
        self.algebra = algebra
        self.hopf = hopf
        self.field = F
        self.coaction = F.asarray(coaction).reshape(algebra.dim * hopf.dim, algebra.dim)
        self.name = name or algebra.name
        self._cache = {}
        if check:
            self.check()

    def __repr__(self):
        return f"<ComoduleAlgebra {self.name!r} dim={self.algebra.dim} over {self.hopf!r}>"

    @property
    def rho(self):
        """rho[k, l, i]: coefficient of a_k (x) h_l in rho(a_i)."""
        return self.coaction.reshape(self.algebra.dim, self.hopf.dim, self.algebra.dim)

    @cached_property
    def tensor_algebra(self):
        return tensor_algebra(self.algebra, self.hopf.algebra)

    def check(self):
        F, A, H = self.field, self.algebra, self.hopf
        rho = self.rho
        AH = self.tensor_algebra
        if not np.array_equal(F.matmul(self.coaction, A.unit), AH.unit):
            raise NotComoduleAlgebra("rho(1) != 1 (x) 1")
        bad = _multiplicativity_defect(F, A, AH, rho)
        if bad is not None:
            raise NotComoduleAlgebra(f"rho(a{bad[0]} a{bad[1]}) != rho(a{bad[0]}) rho(a{bad[1]})")
        bad = _coassociativity_defect(F, rho, H.delta)
        if bad is not None:
            raise NotComoduleAlgebra(f"(rho (x) id) rho != (id (x) Delta) rho on a{bad[0]}")
        back = F.contract("kli,l->ki", rho, H.eps)
        bad = _first_bad((back != F.identity(A.dim)).any(axis=0))
        if bad is not None:
            raise NotComoduleAlgebra(f"(id (x) eps) rho != id on a{bad[0]}")


def twist(CA, M, V):
    """The A-module M (x) V with (m (x) v) a = m a_0 (x) v a_1."""
    A, H = CA.algebra, CA.hopf.algebra
    if M.algebra is not A and not M.algebra.same_as(A):
        raise DimensionMismatch("M is not a module over the comodule algebra")
    if V.algebra is not H and not V.algebra.same_as(H):
        raise DimensionMismatch("V is not a module over the Hopf algebra")
    F = CA.field
    # sum_{k,l} rho[k, l, i] R^M_k (x) R^V_l
    vpart = F.contract("kli,lcd->kicd", CA.rho, V.action)
    act = F.contract("kab,kicd->iacbd", M.action, vpart)
    n = A.dim
    act = act.reshape(n, M.dim * V.dim, M.dim * V.dim)
    return ModuleRep(A, act, check=True)


# -- constructors ------------------------------------------------------------

def check_group_table(table):
    """Return (table, identity index, inverses) or raise NotAGroup."""
    t = np.asarray(table, dtype=np.int64)
    if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
        raise NotAGroup("the multiplication table must be a non-empty square array")
    n = t.shape[0]
    if t.min() < 0 or t.max() >= n:
        raise NotAGroup("table entries must be element indices")
    bad = np.argwhere(t[t, :] != t[:, t])
    if bad.size:
        g, h, k = (int(x) for x in bad[0])
        raise NotAGroup(f"(g{g} g{h}) g{k} != g{g} (g{h} g{k})")
    ids = [e for e in range(n) if np.array_equal(t[e], np.arange(n)) and np.array_equal(t[:, e], np.arange(n))]
    if not ids:
        raise NotAGroup("no identity element")
    e = ids[0]
    inv = []
    for g in range(n):
        cand = np.flatnonzero(t[g] == e)
        if cand.size != 1 or t[cand[0], g] != e:
            raise NotAGroup(f"g{g} has no two-sided inverse")
        inv.append(int(cand[0]))
    return t, e, inv


def group_algebra(table, F, name="", names=None):
    """kG with Delta g = g (x) g, eps(g) = 1, sigma(g) = g^{-1}."""
    t, e, inv = check_group_table(table)
    n = t.shape[0]
    c = np.zeros((n, n, n), dtype=np.int64)
    c[np.arange(n)[:, None], np.arange(n)[None, :], t] = 1
    A = validate_algebra(F, c, np.eye(n, dtype=np.int64)[e], name=name)
    comul = np.zeros((n * n, n), dtype=np.int64)
    comul[np.arange(n) * n + np.arange(n), np.arange(n)] = 1
    antipode = np.zeros((n, n), dtype=np.int64)
    antipode[inv, np.arange(n)] = 1
    return validate_hopf(A, comul, np.ones(n, dtype=np.int64), antipode, name=name,
                         basis_names=names or [f"g{i}" for i in range(n)])


def is_primitive_root(F, q, n):
    q = int(q)
    if q == 0 or F.power(q, n) != 1:
        return False
    return all(F.power(q, k) != 1 for k in range(1, n))


def sweedler_taft(n, F, q, name=""):
    """Taft algebra of dimension n^2 (Sweedler's H_4 for n = 2).

    Basis g^a x^b at index b * n + a (so 1, g, x, gx for n = 2), with
    g^n = 1, x^n = 0, x g = q g x, Delta g = g (x) g, Delta x = x (x) 1 + g (x) x,
    sigma(g) = g^{-1}, sigma(x) = -g^{-1} x.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    # an int in range is taken as an encoded element, anything else goes through F.element
    q = int(q) if isinstance(q, (int, np.integer)) and 0 <= q < F.q else int(F.element(q))
    if not is_primitive_root(F, q, n):
        raise NotPrimitiveRoot(f"{F.to_plain(q)} is not a primitive {n}-th root of unity in {F}")
    dim = n * n

    def idx(a, b):
        return b * n + a

    c = np.zeros((dim, dim, dim), dtype=np.int64)
    for a in range(n):
        for b in range(n):
            for a2 in range(n):
                for b2 in range(n):
                    if b + b2 < n:
                        # g^a x^b g^a2 x^b2 = q^(b a2) g^(a+a2) x^(b+b2)
                        c[idx(a, b), idx(a2, b2), idx((a + a2) % n, b + b2)] = F.power(q, b * a2)
    A = validate_algebra(F, c, np.eye(dim, dtype=np.int64)[0], name=name)
    g, x = np.eye(dim, dtype=np.int64)[idx(1, 0)], np.eye(dim, dtype=np.int64)[idx(0, 1)]
    one = A.unit
    ginv = np.eye(dim, dtype=np.int64)[idx(n - 1, 0)]
    HH = tensor_algebra(A, A)

    def kron(u, v):
        return F.kron(u[None], v[None])[0]

    dg = kron(g, g)
    dx = F.add(kron(x, one), kron(g, x))
    sg, sx = ginv, F.neg(A.mul(ginv, x))
    comul = np.zeros((dim * dim, dim), dtype=np.int64)
    antipode = np.zeros((dim, dim), dtype=np.int64)
    counit = np.zeros(dim, dtype=np.int64)
    for a in range(n):
        for b in range(n):
            d = HH.unit
            s = one
            for _ in range(a):
                d = HH.mul(d, dg)
                s = A.mul(sg, s)
            for _ in range(b):
                d = HH.mul(d, dx)
                s = A.mul(sx, s)
            comul[:, idx(a, b)] = d
            antipode[:, idx(a, b)] = s        # sigma is an anti-homomorphism
            counit[idx(a, b)] = int(b == 0)
    names = []
    for b in range(n):
        for a in range(n):
            gpart = "" if a == 0 else ("g" if a == 1 else f"g^{a}")
            xpart = "" if b == 0 else ("x" if b == 1 else f"x^{b}")
            names.append(gpart + xpart or "1")
    return validate_hopf(A, comul, counit, antipode, name=name or f"taft{n}", basis_names=names)
