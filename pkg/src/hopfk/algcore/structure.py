"""Radical, tops, projective covers, syzygies and global dimension."""

from dataclasses import dataclass

import numpy as np

from .. import chop
from ..errors import IterationBoundExceeded
from .algebra import (ModuleRep, annihilator, direct_sum, is_homomorphism, quotient, radical_layer, spin,
                      submodule, zero_module)


def radical(A, seed=0):
    """RREF basis of J(A): elements annihilating every simple module."""
    key = ("radical", seed)
    if key not in A._cache:
        simples = chop.simple_modules(A, seed)
        A._cache[key] = annihilator(A, simples.simples)
    return A._cache[key]


def top(M, seed=0):
    """M / MJ."""
    return quotient(M, radical_layer(M, radical(M.algebra, seed)))[0]


@dataclass
class ProjectiveCover:
    module: ModuleRep     # P, a direct sum of PIMs
    surjection: np.ndarray  # dim P x dim M, v |-> v @ surjection
    summands: list        # PIM index of each summand, in order


def projective_cover(M, seed=0):
    """Minimal projective cover P -> M.

    Elements v of M e_i are taken greedily while they enlarge the image of
    span(chosen) + MJ; each accepted v contributes one summand e_i A with
    e_i a |-> v a.  By Nakayama the chosen elements generate M.
    """
    A = M.algebra
    F = M.field
    simples, pl = chop.pims(A, seed)
    rad = radical(A, seed)
    mj = radical_layer(M, rad)
    if M.dim == 0:
        return ProjectiveCover(zero_module(A), np.zeros((0, 0), dtype=np.int64), [])
    image = np.zeros((0, M.dim), dtype=np.int64)
    chosen = []
    for i, e in enumerate(pl.idempotents):
        cands = F.row_space(M.act(e))
        for v in cands:
            span = F.row_space(np.vstack([image, mj])) if image.shape[0] + mj.shape[0] else image
            if span.shape[0] and F.rank(np.vstack([span, v])) == span.shape[0]:
                continue
            chosen.append((i, v))
            image = F.row_space(np.vstack([image, spin(M, v)]))
            if image.shape[0] + mj.shape[0] and F.row_space(np.vstack([image, mj])).shape[0] == M.dim:
                break
    if image.shape[0] != M.dim:
        raise AssertionError("projective cover construction did not generate M")
    blocks, summands = [], []
    for i, v in chosen:
        W = pl.bases[i]
        vr = F.matmul(v, M.action)               # (n, dim M): v a_t
        blocks.append(F.matmul(W, vr))
        summands.append(i)
    P = direct_sum(*[pl.pims[i] for i in summands])
    surj = np.vstack(blocks)
    if not is_homomorphism(P, M, surj) or F.rank(surj) != M.dim:
        raise AssertionError("projective cover map is not an A-linear surjection")
    return ProjectiveCover(P, surj, summands)


def is_projective(M, seed=0):
    return projective_cover(M, seed).module.dim == M.dim


def syzygy(M, seed=0, cover=None):
    """Kernel of the projective cover map, as a submodule of P."""
    cover = cover or projective_cover(M, seed)
    F = M.field
    K = F.row_space(F.left_kernel(cover.surjection), cols=cover.module.dim)
    if K.shape[0] == 0:
        return zero_module(M.algebra)
    return submodule(cover.module, K)


def proj_dim(M, bound=None, seed=0):
    """Projective dimension, or None when not detected within ``bound`` syzygies."""
    bound = 2 * M.algebra.dim if bound is None else bound
    if bound < 1:
        raise ValueError("bound must be at least 1")
    X = M
    for k in range(bound + 1):
        cover = projective_cover(X, seed)
        if cover.module.dim == X.dim:
            return k
        X = syzygy(X, seed, cover)
    return None


def gldim(A, bound=None, seed=0):
    """Global dimension (max over simples of proj_dim), or None if not detected."""
    simples = chop.simple_modules(A, seed)
    dims = [proj_dim(S, bound, seed) for S in simples.simples]
    if any(d is None for d in dims):
        return None
    return max(dims, default=0)


def proj_dim_strict(M, bound=None, seed=0):
    d = proj_dim(M, bound, seed)
    if d is None:
        raise IterationBoundExceeded("projective dimension not detected within the bound")
    return d
