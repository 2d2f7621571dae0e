"""Finite-dimensional algebras by structure constants and their right modules.

Conventions used everywhere in hopfk:

* an algebra with basis a_0, ..., a_{n-1} has ``c[i, j, k]`` with
  a_i a_j = sum_k c[i, j, k] a_k;
* vectors are rows and act on the right: a module is a stack of matrices
  ``action[i]`` with v . a_i = v @ action[i];
* a linear map between modules is a matrix X with v |-> v @ X.
"""

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from ..errors import DimensionMismatch, NoUnit, NotAModule, NotAssociative
from ..exactla.field import Echelon


class Algebra:
    """Associative unital algebra over a finite field, given by structure constants."""

    def __init__(self, field, structconsts, unit, name=""):
        self.field = field
        self.c = field.asarray(structconsts)
        n = self.c.shape[0]
        if self.c.shape != (n, n, n):
            raise DimensionMismatch(f"structure constants have shape {self.c.shape}")
        self.dim = n
        self.unit = field.asarray(unit)
        self.name = name
        self.basis_names = None
        # caches keyed by seed, filled by chop.pims and friends
        self._cache = {}

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<Algebra{label} dim={self.dim} over {self.field}>"

    @cached_property
    def right_action(self):
        """Matrices of right multiplication: x . a_i = x @ right_action[i]."""
        return np.ascontiguousarray(self.c.transpose(1, 0, 2))

    @cached_property
    def left_action(self):
        """Matrices of left multiplication: a_i x = x @ left_action[i]."""
        return self.c

    def basis_vector(self, i):
        v = np.zeros(self.dim, dtype=np.int64)
        v[i] = 1
        return v

    def mul(self, x, y):
        F = self.field
        t = F.contract("i,ijk->jk", np.asarray(x), self.c)
        return F.contract("j,jk->k", np.asarray(y), t)

    def left_mult_matrix(self, x):
        return self.field.lincomb(x, self.c)

    def right_mult_matrix(self, x):
        return self.field.lincomb(x, self.right_action)

    @cached_property
    def generators(self):
        """A small set of basis indices generating the algebra, chosen greedily."""
        F = self.field
        gens = []
        span = F.row_space(self.unit)
        for i in range(self.dim):
            if _in_row_space(F, span, self.basis_vector(i)):
                continue
            gens.append(i)
            span = _spin_rows(F, span, [self.right_action[g] for g in gens])
            if span.shape[0] == self.dim:
                break
        return tuple(gens)

    def same_as(self, other):
        return (self.field is other.field and self.dim == other.dim
                and np.array_equal(self.c, other.c) and np.array_equal(self.unit, other.unit))


def _in_row_space(F, rref_rows, v):
    if rref_rows.shape[0] == 0:
        return not np.any(v)
    piv = [int(np.flatnonzero(r)[0]) for r in rref_rows]
    return not F.sub(v, F.matmul(np.asarray(v)[piv], rref_rows)).any()


def _spin_rows(F, rows, mats):
    w = F.row_space(rows, cols=mats[0].shape[0] if len(mats) else None)
    frontier = w
    while frontier.shape[0]:
        images = [F.matmul(frontier, g) for g in mats]
        new = F.row_space(np.vstack([w] + images))
        if new.shape[0] == w.shape[0]:
            return w
        # only the genuinely new directions need to be pushed further
        ech = Echelon(F, w.shape[1])
        for r in w:
            ech.add(r)
        fresh = [r for r in new if ech.add(r)]
        w = new
        frontier = np.array(fresh, dtype=np.int64).reshape(-1, w.shape[1])
    return w


def validate_algebra(field, structconsts, unit=None, name=""):
    """Check associativity and the two-sided unit; return an :class:`Algebra`.

    When ``unit`` is None it is solved for.
    """
    F = field
    c = F.asarray(structconsts)
    n = c.shape[0]
    if c.shape != (n, n, n):
        raise DimensionMismatch(f"structure constants must be n x n x n, got {c.shape}")
    lhs = F.contract("ijm,mkl->ijkl", c, c)
    rhs = F.contract("jkm,iml->ijkl", c, c)
    bad = np.argwhere((lhs != rhs).any(axis=3))
    if bad.size:
        i, j, k = (int(x) for x in bad[0])
        raise NotAssociative(i, j, k)
    eye = F.identity(n).reshape(-1)
    sys_left = c.reshape(n, n * n)                       # sum_i u_i c[i, j, k] = delta_jk
    sys_right = c.transpose(1, 0, 2).reshape(n, n * n)   # sum_i u_i c[j, i, k] = delta_jk
    system = np.hstack([sys_left, sys_right])
    target = np.concatenate([eye, eye])
    if unit is None:
        u = F.solve_left(system, target[None, :])
        if u is None:
            raise NoUnit("no two-sided unit exists")
        unit = u[0]
    else:
        unit = F.asarray(unit)
        if not np.array_equal(F.matmul(unit, system), target):
            raise NoUnit("the given unit vector is not a two-sided identity")
    return Algebra(F, c, unit, name=name)


class ModuleRep:
    """A finite-dimensional right module: one d x d matrix per algebra basis element."""

    def __init__(self, algebra, action, check=True, name=""):
        self.algebra = algebra
        self.field = algebra.field
        action = np.asarray(action, dtype=np.int64)
        n = algebra.dim
        if action.ndim != 3 or action.shape[0] != n or action.shape[1] != action.shape[2]:
            raise DimensionMismatch(f"action of shape {action.shape} for an algebra of dim {n}")
        self.action = action
        self.dim = action.shape[1]
        self.name = name
        if check:
            self.check()

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<ModuleRep{label} dim={self.dim} over {self.algebra!r}>"

    def check(self):
        F, A, R = self.field, self.algebra, self.action
        d, n = self.dim, A.dim
        if d == 0:
            return
        if not np.array_equal(F.lincomb(A.unit, R), F.identity(d)):
            raise NotAModule("the unit does not act as the identity")
        prods = F.matmul(R[:, None], R[None, :])                       # R_i R_j
        expect = F.matmul(A.c.reshape(n * n, n), R.reshape(n, d * d))  # sum_k c_ijk R_k
        bad = np.argwhere((prods.reshape(n * n, d * d) != expect).any(axis=1))
        if bad.size:
            i, j = divmod(int(bad[0][0]), n)
            raise NotAModule(f"R_{i} R_{j} != sum_k c[{i},{j},k] R_k")

    @cached_property
    def gen_action(self):
        return self.action[list(self.algebra.generators)]

    def act(self, x):
        """Matrix of the algebra element with coordinate vector x."""
        return self.field.lincomb(x, self.action)


def regular_module(algebra):
    return ModuleRep(algebra, algebra.right_action, check=False, name="regular")


def zero_module(algebra):
    return ModuleRep(algebra, np.zeros((algebra.dim, 0, 0), dtype=np.int64), check=False)


def direct_sum(*modules):
    if not modules:
        raise ValueError("direct_sum of nothing")
    A = modules[0].algebra
    d = sum(m.dim for m in modules)
    act = np.zeros((A.dim, d, d), dtype=np.int64)
    off = 0
    for m in modules:
        if m.algebra is not A:
            raise DimensionMismatch("direct sum of modules over different algebras")
        act[:, off:off + m.dim, off:off + m.dim] = m.action
        off += m.dim
    return ModuleRep(A, act, check=False)


def spin(M, vectors, transpose=False):
    """RREF basis of the submodule generated by ``vectors``.

    With ``transpose=True`` the transposed action is used, which spins in the
    dual module (used by the MeatAxe).
    """
    F = M.field
    vectors = np.asarray(vectors, dtype=np.int64).reshape(-1, M.dim)
    mats = M.gen_action
    if transpose:
        mats = mats.transpose(0, 2, 1)
    if vectors.shape[0] == 0 or not vectors.any():
        return np.zeros((0, M.dim), dtype=np.int64)
    return _spin_rows(F, vectors, list(mats))


def _pivots(rows):
    return [int(np.flatnonzero(r)[0]) for r in rows]


def submodule(M, W, check=False):
    """Module structure on the invariant subspace with RREF basis W."""
    F = M.field
    W = np.asarray(W, dtype=np.int64)
    piv = _pivots(W)
    images = F.matmul(W[None], M.action)          # (n, k, d)
    act = images[:, :, piv]
    if check:
        recon = F.matmul(act, W[None])
        if not np.array_equal(recon, images):
            raise NotAModule("subspace is not invariant")
    return ModuleRep(M.algebra, act, check=False)


def quotient(M, W):
    """Quotient of M by the invariant subspace with RREF basis W.

    Returns ``(Q, proj)`` where ``proj`` is the d x (d - k) matrix of the
    canonical surjection in the coordinates of the complementary unit vectors.
    """
    F = M.field
    d = M.dim
    W = np.asarray(W, dtype=np.int64).reshape(-1, d)
    piv = _pivots(W)
    rest = [j for j in range(d) if j not in set(piv)]
    eye = F.identity(d)
    red = F.sub(eye, F.matmul(eye[:, piv], W)) if piv else eye
    proj = red[:, rest]
    act = F.matmul(M.action[:, rest, :], proj[None])
    return ModuleRep(M.algebra, act, check=False), proj


def is_invariant(M, W):
    F = M.field
    W = F.row_space(W)
    if W.shape[0] == 0:
        return True
    for g in M.gen_action:
        if F.rank(np.vstack([W, F.matmul(W, g)])) != W.shape[0]:
            return False
    return True


@dataclass
class HomBasis:
    source: ModuleRep
    target: ModuleRep
    basis: np.ndarray  # (h, dim source, dim target)

    @property
    def dim(self):
        return self.basis.shape[0]


def hom_space(M, N):
    """Basis of Hom_A(M, N).

    A homomorphism is pinned down by the images y_s of a set of module
    generators of M; spinning those generators gives a basis of M together
    with the relations b_k g = sum lambda_j b_j that the images must satisfy.
    The unknowns are the y_s, so the linear system has t * dim N unknowns
    rather than dim M * dim N.
    """
    if M.algebra is not N.algebra and not M.algebra.same_as(N.algebra):
        raise DimensionMismatch("Hom between modules over different algebras")
    F = M.field
    dM, dN = M.dim, N.dim
    if dM == 0 or dN == 0:
        return HomBasis(M, N, np.zeros((0, dM, dN), dtype=np.int64))
    GM, GN = M.gen_action, N.gen_action
    ech = Echelon(F, dM, track=True)
    bvecs, gen_of, wmats = [], [], []
    relations = []  # (k, g, coords over the basis known at that moment)
    eye_n = F.identity(dN)
    for j in range(dM):
        e = np.zeros(dM, dtype=np.int64)
        e[j] = 1
        if not ech.add(e):
            continue
        s = len(set(gen_of))
        bvecs.append(e)
        gen_of.append(s)
        wmats.append(eye_n)
        k = len(bvecs) - 1
        while k < len(bvecs):
            for g in range(len(GM)):
                w = F.matmul(bvecs[k], GM[g])
                if ech.add(w):
                    bvecs.append(w)
                    gen_of.append(gen_of[k])
                    wmats.append(F.matmul(wmats[k], GN[g]))
                else:
                    relations.append((k, g, ech.coords(w)))
            k += 1
    t = len(set(gen_of))
    wstack = np.array(wmats)
    sol = F.identity(t * dN)
    for k, g, lam in relations:
        blocks = np.zeros((t, dN, dN), dtype=np.int64)
        blocks[gen_of[k]] = F.matmul(wmats[k], GN[g])
        nz = np.flatnonzero(lam)
        for s in set(gen_of[j] for j in nz):
            idx = [j for j in nz if gen_of[j] == s]
            blocks[s] = F.sub(blocks[s], F.lincomb(lam[idx], wstack[idx]))
        z = F.matmul(sol, blocks.reshape(t * dN, dN))
        if not z.any():
            continue
        sol = F.matmul(F.left_kernel(z), sol)
        if sol.shape[0] == 0:
            break
    h = sol.shape[0]
    if h == 0:
        return HomBasis(M, N, np.zeros((0, dM, dN), dtype=np.int64))
    y = sol.reshape(h, t, dN)[:, gen_of, :]                  # (h, dM, dN): y_{s_k}
    fb = F.contract("hkr,krc->hkc", y, wstack)                # images of the spun basis
    binv = F.inverse(np.array(bvecs))
    basis = F.contract("jk,hkc->hjc", binv, fb)
    return HomBasis(M, N, basis)


def is_homomorphism(M, N, X):
    F = M.field
    X = np.asarray(X, dtype=np.int64)
    return bool(np.array_equal(F.matmul(M.action, X[None]), F.matmul(X[None], N.action)))


def annihilator(algebra, modules):
    """RREF basis (algebra coordinates) of the elements acting as zero on every module."""
    F = algebra.field
    n = algebra.dim
    cols = [m.action.reshape(n, -1) for m in modules if m.dim]
    if not cols:
        return F.identity(n)
    return F.row_space(F.left_kernel(np.hstack(cols)), cols=n)


def algebra_power_span(algebra, left, right):
    """RREF basis of span{x y : x in rows of left, y in rows of right}."""
    F = algebra.field
    n = algebra.dim
    if left.shape[0] == 0 or right.shape[0] == 0:
        return np.zeros((0, n), dtype=np.int64)
    t = F.contract("ai,ijk->ajk", left, algebra.c)
    prods = F.contract("bj,ajk->abk", right, t).reshape(-1, n)
    return F.row_space(prods, cols=n)


def radical_layer(M, rad):
    """RREF basis of M J where J has basis ``rad`` (algebra coordinates)."""
    F = M.field
    if rad.shape[0] == 0 or M.dim == 0:
        return np.zeros((0, M.dim), dtype=np.int64)
    images = F.contract("ri,ijk->rjk", rad, M.action).reshape(-1, M.dim)
    return F.row_space(images, cols=M.dim)
