"""Coinvariants, the canonical map beta, induction and restriction, crossed products.

Relative tensor products N (x)_B A are built as quotients of the plain
tensor space (index n * dim A + a) by the span of n b (x) a - n (x) b a.  A
quotient keeps the unit vectors not hit by a pivot of the relation space as
its basis, so a map out of it is obtained by restricting a map on the plain
tensor space to those rows, once the map has been checked to kill every
relation.
"""

from dataclasses import dataclass, field

import numpy as np

from .algcore.algebra import (Algebra, ModuleRep, is_homomorphism, is_invariant, quotient,
                              regular_module, validate_algebra)
from .algcore.structure import is_projective
from .errors import (CocycleConditionFails, DimensionMismatch, NotAutomorphism, NotGalois,
                     VerificationFailed)
from .hopfcore import ComoduleAlgebra, check_group_table, group_algebra, twist


@dataclass
class Coinvariants:
    algebra: Algebra      # B with its own structure constants
    basis: np.ndarray     # RREF rows: b_r in A coordinates


def coinvariants(CA):
    """B = {a : rho(a) = a (x) 1} as a subalgebra, with structure constants in its RREF basis."""
    F, A, H = CA.field, CA.algebra, CA.hopf
    n = A.dim
    emb = F.kron(F.identity(n), H.algebra.unit[None])    # a |-> a (x) 1, n x nm
    W = F.row_space(F.left_kernel(F.sub(CA.coaction.T, emb)), cols=n)
    piv = [int(np.flatnonzero(r)[0]) for r in W]
    k = W.shape[0]
    t = F.contract("ri,ijl->rjl", W, A.c)
    prods = F.contract("sj,rjl->rsl", W, t)                # b_r b_s in A coordinates
    c = prods[:, :, piv]
    if not np.array_equal(F.matmul(c.reshape(k * k, k), W), prods.reshape(k * k, n)):
        raise VerificationFailed("coinvariants are not closed under multiplication")
    unit = A.unit[piv]
    if not np.array_equal(F.matmul(unit, W), A.unit):
        raise VerificationFailed("the unit is not coinvariant")
    B = Algebra(F, c, unit, name=f"{A.name}^coH")
    return Coinvariants(B, W)


@dataclass
class RelativeTensor:
    module: ModuleRep       # the quotient, as a right A-module
    relations: np.ndarray   # RREF basis of the relation space
    proj: np.ndarray        # plain tensor space -> quotient
    rest: list              # plain basis indices that form the quotient basis

    @property
    def dim(self):
        return self.module.dim

    def section(self):
        eye = np.eye(self.proj.shape[0], dtype=np.int64)
        return eye[self.rest]


def relative_tensor(A, Bbasis, N):
    """N (x)_B A for a right B-module N, B given by its basis rows inside A."""
    F = A.field
    d, n = N.dim, A.dim
    eye_d, eye_n = F.identity(d), F.identity(n)
    rel = [F.sub(F.kron(N.action[r], eye_n), F.kron(eye_d, A.left_mult_matrix(b)))
           for r, b in enumerate(Bbasis)]
    rel = F.row_space(np.vstack(rel), cols=d * n) if rel else np.zeros((0, d * n), dtype=np.int64)
    act = np.stack([F.kron(eye_d, R) for R in A.right_action])
    plain = ModuleRep(A, act, check=False)
    if not is_invariant(plain, rel):
        raise VerificationFailed("the right A-action does not descend to the relative tensor product")
    Q, proj = quotient(plain, rel)
    piv = {int(np.flatnonzero(r)[0]) for r in rel}
    rest = [j for j in range(d * n) if j not in piv]
    return RelativeTensor(Q, rel, proj, rest)


@dataclass
class GaloisExtension:
    CA: ComoduleAlgebra
    coinv: Coinvariants
    tensor: RelativeTensor    # A (x)_B A
    beta: np.ndarray          # quotient basis -> A (x) H
    galois: bool
    regular_restricted: ModuleRep   # Res^A_B of the regular module
    certificate: dict = field(default_factory=dict)

    @property
    def A(self):
        return self.CA.algebra

    @property
    def B(self):
        return self.coinv.algebra

    @property
    def H(self):
        return self.CA.hopf

    @property
    def coinv_basis(self):
        return self.coinv.basis


def beta_tilde(CA):
    """x (x) y |-> x y_0 (x) y_1 on the plain tensor space A (x) A."""
    F, A = CA.field, CA.algebra
    n, m = A.dim, CA.hopf.dim
    # [(i, j), (x, l)] = sum_k rho[k, l, j] c[i, k, x]
    return F.contract("klj,ikx->ijxl", CA.rho, A.c).reshape(n * n, n * m)


def _check_bimodule(CA, bt):
    """beta(a (x y) b) = a beta(x y) b for every pair of basis elements a, b."""
    F, A = CA.field, CA.algebra
    n, m = A.dim, CA.hopf.dim
    eye_n, eye_m = F.identity(n), F.identity(m)
    right_AH = twist(CA, regular_module(A), regular_module(CA.hopf.algebra)).action
    for i in range(n):
        L = A.left_mult_matrix(A.basis_vector(i))
        if not np.array_equal(F.matmul(F.kron(L, eye_n), bt), F.matmul(bt, F.kron(L, eye_m))):
            return ("left", i)
        R = A.right_action[i]
        if not np.array_equal(F.matmul(F.kron(eye_n, R), bt), F.matmul(bt, right_AH[i])):
            return ("right", i)
    return None


def galois_check(CA, check_projective=True):
    """Certify that B = A^coH in A is H-Galois, or raise NotGalois."""
    F, A, H = CA.field, CA.algebra, CA.hopf
    n, m = A.dim, H.dim
    co = coinvariants(CA)
    resA = restrict_to(co, regular_module(A))
    T = relative_tensor(A, co.basis, resA)
    bt = beta_tilde(CA)
    if T.relations.shape[0] and F.matmul(T.relations, bt).any():
        raise VerificationFailed("beta does not vanish on the relations of A (x)_B A")
    bad = _check_bimodule(CA, bt)
    if bad is not None:
        raise VerificationFailed(f"beta is not {bad[0]} A-linear at basis element a{bad[1]}")
    beta = bt[T.rest]
    if T.dim != n * m:
        raise NotGalois(f"dim A (x)_B A = {T.dim} but dim A (x) H = {n * m}",
                        defect=n * m - T.dim)
    ker = F.left_kernel(beta)
    if ker.shape[0]:
        raise NotGalois("beta is not injective", witness=ker[0])
    cert = {"dim_B": co.algebra.dim, "dim_tensor": T.dim}
    if check_projective:
        if not is_projective(resA):
            raise VerificationFailed("A is not projective over B although beta is bijective")
        cert["A_projective_over_B"] = True
    return GaloisExtension(CA, co, T, beta, True, resA, cert)


def restrict_to(co, M):
    F = M.field
    act = F.contract("ri,iab->rab", co.basis, M.action)
    return ModuleRep(co.algebra, act, check=False, name=f"Res({M.name})" if M.name else "")


def restrict(ext, M):
    """Res^A_B M: the action of the basis of B only."""
    return restrict_to(ext.coinv, M)


def induction(ext, N):
    if N.algebra is not ext.B and not N.algebra.same_as(ext.B):
        raise DimensionMismatch("N is not a module over the coinvariant subalgebra")
    return relative_tensor(ext.A, ext.coinv_basis, N)


def induce(ext, N):
    """Ind^A_B N = N (x)_B A."""
    Q = induction(ext, N).module
    Q.name = f"Ind({N.name})" if N.name else ""
    return Q


def in_category_C(ext, M, seed=0):
    """Whether M restricts to a projective B-module."""
    return is_projective(restrict(ext, M), seed)


@dataclass
class IsoCertificate:
    source: ModuleRep
    target: ModuleRep
    map: np.ndarray
    inverse: np.ndarray = None


def verify_ind_res(ext, M):
    """Certify Ind Res M = M (x) H via m (x) a |-> m a_0 (x) a_1."""
    CA, F = ext.CA, ext.CA.field
    T = induction(ext, restrict(ext, M))
    target = twist(CA, M, regular_module(ext.H.algebra))
    dM, n, m = M.dim, ext.A.dim, ext.H.dim
    phi = F.contract("kst,klj->sjtl", M.action, CA.rho).reshape(dM * n, dM * m)
    if T.relations.shape[0]:
        bad = np.flatnonzero(F.matmul(T.relations, phi).any(axis=1))
        if bad.size:
            raise VerificationFailed(f"Ind Res map is not well defined on relation {bad[0]}")
    X = phi[T.rest]
    if not is_homomorphism(T.module, target, X):
        bad = [i for i in range(n)
               if not np.array_equal(F.matmul(T.module.action[i], X), F.matmul(X, target.action[i]))]
        raise VerificationFailed(f"Ind Res map is not A-linear at basis element a{bad[0]}")
    if not F.is_invertible(X):
        raise VerificationFailed("Ind Res map is not invertible")
    return IsoCertificate(T.module, target, X, F.inverse(X))


def verify_ind_twist(ext, N, V):
    """Certify Ind(N (x) V) = Ind(N) (x) V through the explicit maps phi and psi.

    phi(n (x) v (x) a) = n (x) a_0 (x) v a_1 and
    psi(n (x) a (x) v) = n (x) v sigma^{-1}(a_1) (x) a_0.
    """
    CA, F = ext.CA, ext.CA.field
    A, H = ext.A, ext.H
    dN, dV, n = N.dim, V.dim, A.dim
    eye_v = F.identity(dV)
    # N (x) V as a B-module: B is coinvariant, so b acts on the N factor only
    NV = ModuleRep(ext.B, np.stack([F.kron(R, eye_v) for R in N.action]), check=False)
    left = induction(ext, NV)
    right_ind = induction(ext, N)
    right = twist(CA, right_ind.module, V)
    rho = CA.rho
    Si = H.antipode_inverse

    # phi on plain spaces: N (x) V (x) A -> N (x) A (x) V
    core = F.contract("klj,lvw->vjkw", rho, V.action)                # [v, j, k, w]
    phi = np.einsum("ab,vjkw->avjbkw", np.eye(dN, dtype=np.int64), core).reshape(dN * dV * n, dN * n * dV)
    to_right = F.kron(right_ind.proj, eye_v)
    phi_q = F.matmul(phi, to_right)
    if left.relations.shape[0] and F.matmul(left.relations, phi_q).any():
        raise VerificationFailed("phi is not well defined on the relations")
    Phi = phi_q[left.rest]

    # psi on plain spaces: N (x) A (x) V -> N (x) V (x) A
    vsig = F.contract("xl,xvw->lvw", Si, V.action)                    # action of sigma^{-1}(h_l)
    core = F.contract("klj,lvw->jvwk", rho, vsig)                     # [j, v, w, k]
    psi = np.einsum("ab,jvwk->ajvbwk", np.eye(dN, dtype=np.int64), core).reshape(dN * n * dV, dN * dV * n)
    psi_q = F.matmul(psi, left.proj)
    rel_r = F.kron(right_ind.relations, eye_v) if right_ind.relations.shape[0] else right_ind.relations
    if rel_r.shape[0] and F.matmul(rel_r, psi_q).any():
        raise VerificationFailed("psi is not well defined on the relations")
    sec = F.kron(right_ind.section(), eye_v)
    Psi = F.matmul(sec, psi_q)

    if not is_homomorphism(left.module, right, Phi):
        raise VerificationFailed("phi is not A-linear")
    if not np.array_equal(F.matmul(Phi, Psi), F.identity(left.dim)):
        raise VerificationFailed("psi phi != id")
    if not np.array_equal(F.matmul(Psi, Phi), F.identity(right.dim)):
        raise VerificationFailed("phi psi != id")
    return IsoCertificate(left.module, right, Phi, Psi)


# -- crossed products --------------------------------------------------------

@dataclass
class CrossedProductSpec:
    B: Algebra
    table: np.ndarray       # group multiplication table
    action: np.ndarray      # (|G|, nB, nB); column j of action[g] is g(b_j)
    cocycle: np.ndarray     # (|G|, |G|, nB): tau(g, h) in B coordinates
    names: list = None      # optional group element names


def _is_unit_of(B, x):
    F = B.field
    try:
        F.inverse(B.left_mult_matrix(x))
    except ZeroDivisionError:
        return False
    return True


def check_crossed_product_spec(spec):
    B = spec.B
    F = B.field
    t, e, _ = check_group_table(spec.table)
    G, nB = t.shape[0], B.dim
    act = F.asarray(spec.action).reshape(G, nB, nB)
    tau = F.asarray(spec.cocycle).reshape(G, G, nB)
    rows = act.transpose(0, 2, 1)                      # g(b) = b @ rows[g]
    for g in range(G):
        M = rows[g]
        if not F.is_invertible(M):
            raise NotAutomorphism(g, "not bijective")
        if not np.array_equal(F.matmul(B.unit, M), B.unit):
            raise NotAutomorphism(g, "does not fix 1")
        lhs = F.contract("ijk,kl->ijl", B.c, M)                       # g(b_i b_j)
        prod = np.zeros_like(lhs)
        for i in range(nB):
            for j in range(nB):
                prod[i, j] = B.mul(M[i], M[j])                          # g(b_i) g(b_j)
        if not np.array_equal(lhs, prod):
            raise NotAutomorphism(g, "not multiplicative")
    if not np.array_equal(rows[e], F.identity(nB)):
        raise NotAutomorphism(e, "the identity element must act trivially")
    for g in range(G):
        if not (np.array_equal(tau[e, g], B.unit) and np.array_equal(tau[g, e], B.unit)):
            raise CocycleConditionFails(e, g, e, which="normalization tau(1, g) = tau(g, 1) = 1")
        for h in range(G):
            if not _is_unit_of(B, tau[g, h]):
                raise CocycleConditionFails(g, h, e, which="invertibility of tau(g, h)")
    for g in range(G):
        for h in range(G):
            gh = t[g, h]
            # twisted module condition: g(h(b)) tau(g, h) = tau(g, h) (gh)(b)
            for i in range(nB):
                lhs = B.mul(F.matmul(F.matmul(B.basis_vector(i), rows[h]), rows[g]), tau[g, h])
                rhs = B.mul(tau[g, h], F.matmul(B.basis_vector(i), rows[gh]))
                if not np.array_equal(lhs, rhs):
                    raise CocycleConditionFails(g, h, i, which="twisted module")
            for l in range(G):
                lhs = B.mul(F.matmul(tau[h, l], rows[g]), tau[g, t[h, l]])
                rhs = B.mul(tau[g, h], tau[gh, l])
                if not np.array_equal(lhs, rhs):
                    raise CocycleConditionFails(g, h, l)
    return t, e, rows, tau


def crossed_product(spec, name=""):
    """B * G with (b g)(c h) = b g(c) tau(g, h) gh, graded by rho(b g) = b g (x) g.

    The basis element b_i g has index i * |G| + g.
    """
    B = spec.B
    F = B.field
    t, e, rows, tau = check_crossed_product_spec(spec)
    G, nB = t.shape[0], B.dim
    n = nB * G
    c = np.zeros((n, n, n), dtype=np.int64)
    for i in range(nB):
        bi = B.basis_vector(i)
        for j in range(nB):
            bj = B.basis_vector(j)
            for g in range(G):
                left = B.mul(bi, F.matmul(bj, rows[g]))
                for h in range(G):
                    coeff = B.mul(left, tau[g, h])
                    c[i * G + g, j * G + h, np.arange(nB) * G + t[g, h]] = coeff
    unit = np.zeros(n, dtype=np.int64)
    unit[np.arange(nB) * G + e] = B.unit
    A = validate_algebra(F, c, unit, name=name)
    H = group_algebra(t, F, names=spec.names)
    coaction = np.zeros((n * G, n), dtype=np.int64)
    for a in range(n):
        coaction[a * G + a % G, a] = 1
    return ComoduleAlgebra(A, H, coaction, name=name)


def trivial_coaction(A, H):
    """rho(a) = a (x) 1, the negative control for the Galois test."""
    F = A.field
    return ComoduleAlgebra(A, H, F.kron(F.identity(A.dim), H.algebra.unit[None]).T, check=True)
