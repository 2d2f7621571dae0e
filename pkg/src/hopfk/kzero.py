"""Degree-zero K-theory: class vectors, Cartan matrices, the constant m and the bound verifier.

K_0 classes are integer row vectors over the PIMs, G_0 classes over the
simples, both in the order fixed by ``chop.pims``.  The Cartan map sends a
K_0 row vector x to x C with C[i][j] = [P_i : S_j].
"""

from dataclasses import dataclass, field

from . import chop
from .algcore.algebra import direct_sum, hom_space, regular_module, submodule, zero_module
from .algcore.structure import gldim, is_projective, projective_cover
from .errors import (BoundViolated, CartanNotInjective, IterationBoundExceeded, NoSuchPQ,
                     NotProjective, RegularityNotDetected, VerificationFailed)
from .exactla import intmat
from .galois import galois_check, in_category_C
from .hopfcore import twist


@dataclass(frozen=True)
class GrothendieckClass:
    kind: str          # "K0" (PIM basis) or "G0" (simple basis)
    coeffs: tuple

    def __post_init__(self):
        if self.kind not in ("K0", "G0"):
            raise ValueError(f"unknown class kind {self.kind!r}")
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    def _same(self, other):
        if self.kind != other.kind or len(self.coeffs) != len(other.coeffs):
            raise ValueError("classes live in different groups")

    def __add__(self, other):
        self._same(other)
        return GrothendieckClass(self.kind, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        self._same(other)
        return GrothendieckClass(self.kind, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rmul__(self, k):
        return GrothendieckClass(self.kind, [k * a for a in self.coeffs])

    def __neg__(self):
        return (-1) * self

    def __len__(self):
        return len(self.coeffs)

    @classmethod
    def zero(cls, kind, rank):
        return cls(kind, [0] * rank)

    @classmethod
    def basis(cls, kind, rank, i):
        return cls(kind, [int(j == i) for j in range(rank)])


@dataclass
class CartanData:
    algebra: object
    simples: chop.SimpleList
    pims: chop.PimList
    C: list

    @property
    def rank(self):
        return len(self.C)

    def cartan_map(self, x):
        """c_0 on a K_0 class: the G_0 class x C."""
        if x.kind != "K0":
            raise ValueError("the Cartan map takes K0 classes")
        n = self.rank
        return GrothendieckClass("G0", [sum(x.coeffs[i] * self.C[i][j] for i in range(n))
                                        for j in range(n)])


def cartan_matrix(A, seed=0):
    key = ("cartan", seed)
    if key in A._cache:
        return A._cache[key]
    simples, pl = chop.pims(A, seed)
    C = [chop.composition_factors(P, seed, simples) for P in pl.pims]
    for i, (row, P) in enumerate(zip(C, pl.pims)):
        if row[i] < 1 or sum(r * S.dim for r, S in zip(row, simples.simples)) != P.dim:
            raise VerificationFailed(f"Cartan row {i} is inconsistent with dim P{i}")
    data = CartanData(A, simples, pl, C)
    A._cache[key] = data
    return data


def g0_class(M, seed=0):
    return GrothendieckClass("G0", chop.composition_factors(M, seed))


def pim_sum(A, coeffs, seed=0):
    """The projective module with coeffs[i] copies of P_i (coefficients >= 0)."""
    _, pl = chop.pims(A, seed)
    parts = [P for P, k in zip(pl.pims, coeffs) for _ in range(int(k))]
    return direct_sum(*parts) if parts else zero_module(A)


def k0_class(P, seed=0, verify=True):
    """Multiplicities of the PIMs in a projective module, certified by an isomorphism."""
    if not is_projective(P, seed):
        raise NotProjective(f"module of dim {P.dim} is not projective")
    A = P.algebra
    simples, _ = chop.pims(A, seed)
    coeffs = []
    for S, k in zip(simples.simples, simples.endo_dims):
        h = hom_space(P, S).dim
        if h % k:
            raise VerificationFailed("dim Hom(P, S) is not a multiple of dim End(S)")
        coeffs.append(h // k)
    if verify and not chop.iso_test(pim_sum(A, coeffs, seed), P, seed):
        raise VerificationFailed("P is not isomorphic to the predicted sum of PIMs")
    return GrothendieckClass("K0", coeffs)


@dataclass
class CartanAnalysis:
    C: list
    invariant_factors: list      # SNF diagonal
    kernel_rank: int
    coker_torsion: list          # invariant factors > 1
    coker_free_rank: int
    det: int

    @property
    def injective(self):
        return self.kernel_rank == 0


def analyse_matrix(C):
    rows = len(C)
    cols = len(C[0]) if rows else 0
    d = intmat.invariant_factors(C)
    r = sum(1 for x in d if x)
    return CartanAnalysis(
        C=[list(map(int, row)) for row in C],
        invariant_factors=d,
        kernel_rank=rows - r,
        coker_torsion=[x for x in d if x > 1],
        coker_free_rank=cols - r,
        det=intmat.det(C) if rows == cols else None,
    )


def cartan_analysis(A, seed=0):
    return analyse_matrix(cartan_matrix(A, seed).C)


# -- the G_0(H) ring and its actions -----------------------------------------

def g0_ring_constants(H, seed=0):
    """N[i][j] = G_0 class of S_i (x) S_j over H."""
    key = ("g0ring", seed)
    cache = H.algebra._cache
    if key not in cache:
        simples = chop.simple_modules(H.algebra, seed)
        cache[key] = [[g0_class(H.tensor(S, T), seed).coeffs for T in simples.simples]
                      for S in simples.simples]
    return cache[key]


def g0_ring_product(H, u, v, seed=0):
    N = g0_ring_constants(H, seed)
    k = len(N)
    out = [0] * k
    for i in range(k):
        for j in range(k):
            if u.coeffs[i] and v.coeffs[j]:
                for t in range(k):
                    out[t] += u.coeffs[i] * v.coeffs[j] * N[i][j][t]
    return GrothendieckClass("G0", out)


def unit_class(H, seed=0):
    return g0_class(H.trivial, seed)


def g0_action(ext, x, v, seed=0):
    """[M] . [V] = [twist(M, V)], extended bilinearly, for K_0 or G_0 classes of A."""
    A, H = ext.A, ext.H
    simples_H = chop.simple_modules(H.algebra, seed)
    simples_A, pl = chop.pims(A, seed)
    gens = pl.pims if x.kind == "K0" else simples_A.simples
    out = GrothendieckClass.zero(x.kind, len(gens))
    for i, xi in enumerate(x.coeffs):
        for j, vj in enumerate(v.coeffs):
            if xi == 0 or vj == 0:
                continue
            T = twist(ext.CA, gens[i], simples_H.simples[j])
            cls = k0_class(T, seed) if x.kind == "K0" else g0_class(T, seed)
            out = out + (xi * vj) * cls
    return out


# -- the constant m ----------------------------------------------------------

def _min_multiple(H, seed=0):
    data = cartan_matrix(H.algebra, seed)
    one = unit_class(H, seed)
    return intmat.lattice_min_multiple(data.C, one.coeffs), one


def minimal_m(H, seed=0):
    """Least m > 0 with m [1] in the image of the Cartan map of H, or None."""
    found, _ = _min_multiple(H, seed)
    return None if found is None else found[0]


@dataclass
class PQ:
    P: list       # PIM indices with repetition
    Q: list
    m: int
    coeffs: list  # integer vector a with a C = m [1]

    @staticmethod
    def counts(idx, k):
        return [idx.count(i) for i in range(k)]


def find_pq(H, seed=0):
    """Projectives P, Q of H with [P] - [Q] = m [1] in G_0(H), re-verified by chopping."""
    found, one = _min_multiple(H, seed)
    if found is None:
        raise NoSuchPQ("no positive multiple of [1] lies in the image of the Cartan map")
    m, a = found
    P = [i for i, c in enumerate(a) for _ in range(max(c, 0))]
    Q = [i for i, c in enumerate(a) for _ in range(max(-c, 0))]
    k = len(a)
    lhs = g0_class(pim_sum(H.algebra, PQ.counts(P, k), seed), seed)
    rhs = g0_class(pim_sum(H.algebra, PQ.counts(Q, k), seed), seed)
    if lhs - rhs != m * one:
        raise VerificationFailed("[P] - [Q] != m [1] after chopping")
    return PQ(P, Q, m, list(a))


# -- resolutions by objects of C ----------------------------------------------

@dataclass
class Resolution:
    terms: list    # [Omega, P_{n-1}, ..., P_0, M]
    maps: list     # maps[t]: terms[t] -> terms[t + 1]
    length: int
    in_C: list     # certificates: every term except M is in C

    def check_exact(self):
        F = self.terms[-1].field
        ranks = [F.rank(X) if X.size else 0 for X in self.maps]
        dims = [T.dim for T in self.terms]
        if self.length == 0:
            return True
        if ranks[0] != dims[0] or ranks[-1] != dims[-1]:
            return False
        for t in range(len(self.maps) - 1):
            X, Y = self.maps[t], self.maps[t + 1]
            if X.size and Y.size and F.matmul(X, Y).any():
                return False
            if ranks[t] + ranks[t + 1] != dims[t + 1]:
                return False
        return True


def resolve_in_C(ext, M, bound=None, seed=0):
    """0 -> Omega -> P_{n-1} -> ... -> P_0 -> M -> 0 with Omega and every P_k in C.

    Requires gldim B to be detected; the length never exceeds it.
    """
    d = gldim(ext.B, bound, seed)
    if d is None:
        raise RegularityNotDetected("global dimension of the coinvariants not detected")
    F = M.field
    if in_category_C(ext, M, seed):
        return Resolution([M], [], 0, [])
    covers, kernels, omegas = [], [], []
    X = M
    for step in range(d + 1):
        cover = projective_cover(X, seed)
        K = F.row_space(F.left_kernel(cover.surjection), cols=cover.module.dim)
        omega = submodule(cover.module, K) if K.shape[0] else zero_module(M.algebra)
        covers.append(cover)
        kernels.append(K)
        omegas.append(omega)
        if in_category_C(ext, omega, seed):
            break
        X = omega
    else:
        raise IterationBoundExceeded(f"no syzygy in C within gldim B = {d} steps")
    n = len(covers)
    if n > d:
        raise IterationBoundExceeded(f"resolution length {n} exceeds gldim B = {d}")
    terms = [omegas[-1]] + [c.module for c in reversed(covers)] + [M]
    maps = [kernels[-1]]                                # Omega -> P_{n-1}
    for k in range(n - 1, 0, -1):                       # P_k -> P_{k-1}
        maps.append(F.matmul(covers[k].surjection, kernels[k - 1]))
    maps.append(covers[0].surjection)                   # P_0 -> M
    certs = [in_category_C(ext, T, seed) for T in terms[:-1]]
    if not all(certs):
        raise VerificationFailed("a resolution term is not in C")
    res = Resolution(terms, maps, n, certs)
    if not res.check_exact():
        raise VerificationFailed("resolution is not exact")
    return res


# -- the bound verifier ------------------------------------------------------

@dataclass
class BoundReport:
    verdict: str
    m: int
    P: list
    Q: list
    gldim_B: int
    cartan_H: CartanAnalysis
    cartan_A: CartanAnalysis
    mechanism: list = field(default_factory=list)   # per PIM R: (k0 R, k0 R(x)P - k0 R(x)Q)
    notes: list = field(default_factory=list)


def verify_cartan_bound(CA, H=None, bound=None, seed=0):
    """Certify at degree 0 that the Cartan map of A has kernel 0 and cokernel killed by m."""
    H = H or CA.hopf
    ext = galois_check(CA)                                          # (1)
    an_H = cartan_analysis(H.algebra, seed)                          # (2)
    if not an_H.injective:
        raise CartanNotInjective(f"Cartan matrix of H has kernel rank {an_H.kernel_rank}")
    pq = find_pq(H, seed)                                           # (3)
    gB = gldim(ext.B, bound, seed)                                  # (4)
    if gB is None:
        raise RegularityNotDetected("global dimension of the coinvariants not detected")
    an_A = cartan_analysis(ext.A, seed)                             # (5)
    if an_A.kernel_rank:
        raise BoundViolated(f"Cartan map of A has kernel rank {an_A.kernel_rank}")
    if an_A.coker_free_rank:
        raise BoundViolated("Cartan map of A has a non-torsion cokernel")
    bad = [f for f in an_A.coker_torsion if pq.m % f]
    if bad:
        raise BoundViolated(f"cokernel invariant factors {bad} do not divide m = {pq.m}")
    k = len(an_H.C)                                                 # (6)
    Pmod = pim_sum(H.algebra, PQ.counts(pq.P, k), seed)
    Qmod = pim_sum(H.algebra, PQ.counts(pq.Q, k), seed)
    _, pl = chop.pims(ext.A, seed)
    mech = []
    for i, R in enumerate(pl.pims):
        r = k0_class(R, seed)
        diff = k0_class(twist(ext.CA, R, Pmod), seed) - k0_class(twist(ext.CA, R, Qmod), seed)
        if diff != pq.m * r:
            raise BoundViolated(f"[R(x)P] - [R(x)Q] != m [R] for R = P{i}")
        mech.append((r.coeffs, diff.coeffs))
    return BoundReport("PASS", pq.m, pq.P, pq.Q, gB, an_H, an_A, mech)


def regular_class(A, seed=0):
    return g0_class(regular_module(A), seed)
