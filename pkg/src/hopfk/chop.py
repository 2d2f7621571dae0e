"""MeatAxe: irreducibility, composition factors, isomorphism, simples and PIMs.

Randomized steps draw from seeded streams (see ``hopfk._random``); whenever a
random search is inconclusive a deterministic enumeration is tried if it is
small enough, otherwise :class:`~hopfk.errors.Undecided` is raised.  No
verdict is ever returned without a proof.
"""

import itertools
import math
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from ._random import stream
from .algcore.algebra import (algebra_power_span, annihilator, hom_space, quotient, radical_layer,
                              regular_module, spin, submodule)
from .errors import Undecided, WedderburnSplitFailure
from .exactla import poly

ENUMERATION_LIMIT = 2**16


@dataclass
class Irreducibility:
    irreducible: bool
    witness: np.ndarray = None        # RREF basis of a proper nonzero submodule
    certificate: dict = field(default_factory=dict)

    def __bool__(self):
        return self.irreducible


def _enumerate_projective_points(F, d):
    # one representative per 1-dim subspace: first nonzero coordinate is 1
    for lead in range(d):
        for tail in itertools.product(range(F.q), repeat=d - lead - 1):
            v = np.zeros(d, dtype=np.int64)
            v[lead] = 1
            v[lead + 1:] = tail
            yield v


def is_irreducible(M, seed=0, budget=64):
    """Norton's irreducibility test.

    For a random algebra element a and an irreducible factor f of its
    characteristic polynomial, a nonzero v with v f(a) = 0 is spun; a proper
    result is a witness.  If the null space of f(a) has dimension deg f and
    both v and a null vector of the transposed action spin to everything, M is
    irreducible.
    """
    F = M.field
    d = M.dim
    if d == 0:
        raise ValueError("the zero module is not irreducible")
    if d == 1:
        return Irreducibility(True, certificate={"reason": "dimension 1"})
    rng = stream(seed, "is_irreducible")
    n = M.algebra.dim
    for _ in range(budget):
        x = F.random(rng, n)
        a = M.act(x)
        for f in poly.irreducible_factors(F, poly.charpoly(F, a)):
            fa = poly.eval_matrix(F, f, a)
            null = F.left_kernel(fa)
            sub = spin(M, null[0])
            if sub.shape[0] < d:
                return Irreducibility(False, witness=sub)
            if null.shape[0] != len(f) - 1:
                continue
            w = F.kernel(fa)[0]
            dual = spin(M, w, transpose=True)
            if dual.shape[0] < d:
                return Irreducibility(False, witness=F.row_space(F.kernel(dual)))
            return Irreducibility(True, certificate={
                "element": x.tolist(), "factor": [F.to_plain(c) for c in f],
                "vector": null[0].tolist()})
    if F.q**d <= ENUMERATION_LIMIT:
        for v in _enumerate_projective_points(F, d):
            sub = spin(M, v)
            if sub.shape[0] < d:
                return Irreducibility(False, witness=sub)
        return Irreducibility(True, certificate={"reason": "every vector spins to M"})
    raise Undecided(f"irreducibility of a {d}-dimensional module not settled within budget")


def chop(M, seed=0):
    """Composition factors of M as a list of irreducible modules (with repeats)."""
    out = []
    stack = [M]
    while stack:
        X = stack.pop()
        if X.dim == 0:
            continue
        verdict = is_irreducible(X, seed=seed + len(out))
        if verdict.irreducible:
            out.append(X)
        else:
            W = verdict.witness
            stack.append(quotient(X, W)[0])
            stack.append(submodule(X, W))
    return out


def _isomorphic_irreducibles(S, T):
    return S.dim == T.dim and hom_space(S, T).dim > 0


def _sort_key(S):
    F = S.field
    nonzero = [i for i in range(S.algebra.dim) if S.action[i].any()]
    traces = tuple(int(F.sum(np.diagonal(S.action[i]))) for i in range(S.algebra.dim))
    return (S.dim, nonzero[0] if nonzero else -1, traces)


@dataclass
class SimpleList:
    simples: list
    endo_dims: list

    def __len__(self):
        return len(self.simples)

    def index(self, S):
        """Position of the irreducible module S in the list (up to isomorphism)."""
        for i, T in enumerate(self.simples):
            if _isomorphic_irreducibles(S, T):
                return i
        raise ValueError("module is not isomorphic to any listed simple")


@dataclass
class PimList:
    pims: list              # P_i = e_i A as modules, aligned with the simples
    idempotents: np.ndarray  # (k, dim A): primitive orthogonal idempotents e_i
    bases: list             # RREF basis of e_i A inside A
    multiplicities: list    # copies of P_i in the regular module

    def __len__(self):
        return len(self.pims)


def simple_modules(A, seed=0):
    key = ("simples", seed)
    if key not in A._cache:
        found = []
        for S in chop(regular_module(A), seed=seed):
            if not any(_isomorphic_irreducibles(S, T) for T in found):
                found.append(S)
        found.sort(key=_sort_key)
        for i, S in enumerate(found):
            S.name = f"S{i}"
        endo = [hom_space(S, S).dim for S in found]
        A._cache[key] = SimpleList(found, endo)
    return A._cache[key]


def composition_factors(M, seed=0, simples=None):
    """Jordan-Hoelder multiplicities of M, indexed like the algebra's simple list."""
    simples = simples or simple_modules(M.algebra, seed)
    counts = Counter(simples.index(S) for S in chop(M, seed=seed))
    return [counts.get(i, 0) for i in range(len(simples))]


def _module_invariants(M, simples):
    return ([hom_space(S, M).dim for S in simples.simples]
            + [hom_space(M, S).dim for S in simples.simples])


def iso_test(M, N, seed=0, budget=256):
    """Decide M = N (up to isomorphism).

    True is certified by an invertible homomorphism; False by a differing
    invariant (dimension, Hom dimensions against simples, or an exhaustive
    search of Hom(M, N)).  Raises Undecided otherwise.
    """
    if M.dim != N.dim:
        return False
    if M.dim == 0:
        return True
    F = M.field
    hom = hom_space(M, N)
    if hom.dim == 0:
        return False
    rng = stream(seed, "iso_test")
    for _ in range(budget):
        X = F.lincomb(F.random(rng, hom.dim), hom.basis)
        if F.is_invertible(X):
            return True
    if hom_space(M, M).dim != hom.dim or hom_space(N, N).dim != hom.dim:
        return False
    simples = simple_modules(M.algebra, seed)
    if _module_invariants(M, simples) != _module_invariants(N, simples):
        return False
    if F.q**hom.dim <= ENUMERATION_LIMIT:
        for coeffs in itertools.product(range(F.q), repeat=hom.dim):
            if F.is_invertible(F.lincomb(np.array(coeffs), hom.basis)):
                return True
        return False
    raise Undecided("isomorphism not settled within budget")


def find_isomorphism(M, N, seed=0, budget=256):
    """An invertible element of Hom(M, N), or None if the random search fails."""
    if M.dim != N.dim:
        return None
    F = M.field
    hom = hom_space(M, N)
    rng = stream(seed, "find_isomorphism")
    for _ in range(budget if hom.dim else 0):
        X = F.lincomb(F.random(rng, hom.dim), hom.basis)
        if F.is_invertible(X):
            return X
    return None


def _division_basis_projection(S, endo):
    """Projection of S onto one line v D along a D-complement (D = End(S))."""
    F = S.field
    d = S.dim
    lines = []
    covered = np.zeros((0, d), dtype=np.int64)
    for j in range(d):
        e = np.zeros(d, dtype=np.int64)
        e[j] = 1
        if covered.shape[0] and F.rank(np.vstack([covered, e])) == covered.shape[0]:
            continue
        line = F.row_space(F.matmul(e, endo))
        lines.append(line)
        covered = F.row_space(np.vstack([covered, line]))
        if covered.shape[0] == d:
            break
    first = lines[0]
    basis = np.vstack(lines)
    diag = np.zeros((d, d), dtype=np.int64)
    diag[np.arange(first.shape[0]), np.arange(first.shape[0])] = 1
    return F.matmul(F.matmul(F.inverse(basis), diag), basis)


def nilpotency_index(A, rad):
    """Least k with J^k = 0."""
    k, power = 1, rad
    while power.shape[0]:
        power = algebra_power_span(A, power, rad)
        k += 1
    return k


def _in_span(F, rows, v):
    if rows.shape[0] == 0:
        return not np.any(v)
    return F.rank(np.vstack([rows, v])) == rows.shape[0]


def lift_idempotent(A, x, rad, max_steps):
    """Iterate e <- 3e^2 - 2e^3 from x (idempotent modulo rad) until e^2 = e."""
    F = A.field
    three, two = 3 % F.p, 2 % F.p
    e = x
    for _ in range(max_steps + 1):
        e2 = A.mul(e, e)
        if np.array_equal(e2, e):
            return e
        e3 = A.mul(e2, e)
        e = F.sub(F.mul(e2, three), F.mul(e3, two))
    if np.array_equal(A.mul(e, e), e):
        return e
    raise WedderburnSplitFailure("idempotent lifting did not stabilise")


def pims(A, seed=0):
    """Simple modules and projective indecomposables of A.

    For each simple S_i an element acting on S_i as a rank-one projection over
    D_i = End(S_i), and as zero on the other simples, is found by solving a
    linear system; it is idempotent modulo the radical and is lifted to a
    primitive idempotent e_i, made orthogonal to the earlier ones.  Then
    P_i = e_i A.
    """
    key = ("pims", seed)
    if key in A._cache:
        return A._cache[key]
    F = A.field
    n = A.dim
    simples = simple_modules(A, seed)
    rad = annihilator(A, simples.simples)
    steps = math.ceil(math.log2(max(nilpotency_index(A, rad), 1))) + 1
    system = np.hstack([S.action.reshape(n, -1) for S in simples.simples])
    reg = regular_module(A)
    lifted = []
    for i, S in enumerate(simples.simples):
        endo = hom_space(S, S).basis
        targets = []
        for j, T in enumerate(simples.simples):
            if j == i:
                targets.append(_division_basis_projection(S, endo).reshape(-1))
            else:
                targets.append(np.zeros(T.dim * T.dim, dtype=np.int64))
        x = F.solve_left(system, np.concatenate(targets)[None, :])
        if x is None:
            raise WedderburnSplitFailure(f"no algebra element realises the projection on S{i}")
        x = x[0]
        if lifted:
            f = F.sub(A.unit, F.sum(np.array(lifted), axis=0))
            x = A.mul(A.mul(f, x), f)
        e = lift_idempotent(A, x, rad, steps)
        if not _in_span(F, rad, F.sub(e, x)):
            raise WedderburnSplitFailure("lifted idempotent left its residue class")
        lifted.append(e)
    idem = np.array(lifted, dtype=np.int64).reshape(-1, n)
    for a in range(len(lifted)):
        for b in range(len(lifted)):
            if a != b and A.mul(idem[a], idem[b]).any():
                raise WedderburnSplitFailure("lifted idempotents are not orthogonal")
    modules, bases = [], []
    for i, e in enumerate(idem):
        W = F.row_space(A.left_mult_matrix(e))
        P = submodule(reg, W)
        P.name = f"P{i}"
        top = quotient(P, radical_layer(P, rad))[0]
        if not _isomorphic_irreducibles(top, simples.simples[i]):
            raise WedderburnSplitFailure(f"top of e_{i} A is not S{i}")
        modules.append(P)
        bases.append(W)
    mult = [S.dim // k for S, k in zip(simples.simples, simples.endo_dims)]
    if sum(m * P.dim for m, P in zip(mult, modules)) != n:
        raise WedderburnSplitFailure("PIM dimensions do not add up to dim A")
    result = (simples, PimList(modules, idem, bases, mult))
    A._cache[key] = result
    return result
