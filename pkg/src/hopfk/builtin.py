"""Built-in algebras, groups and the objects behind the shipped fixtures."""

import itertools

import numpy as np

from .algcore.algebra import validate_algebra
from .exactla import GF
from .galois import CrossedProductSpec
from .hopfcore import group_algebra, sweedler_taft


def cyclic_table(n):
    return np.add.outer(np.arange(n), np.arange(n)) % n


def symmetric_table(k=3):
    """S_k on permutations in lexicographic order; (g h)(i) = g(h(i))."""
    perms = list(itertools.permutations(range(k)))
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(g[h[i]] for i in range(k))] for h in perms] for g in perms]
    names = ["".join(map(str, p)) for p in perms]
    return np.array(table, dtype=np.int64), names


def matrix_algebra(n, F, name=""):
    """M_n(F) on matrix units e_ij at index i * n + j."""
    d = n * n
    c = np.zeros((d, d, d), dtype=np.int64)
    for i, j, l in itertools.product(range(n), repeat=3):
        c[i * n + j, j * n + l, i * n + l] = 1
    unit = np.eye(n, dtype=np.int64).reshape(-1)
    return validate_algebra(F, c, unit, name=name or f"M{n}")


def ut2(F, name="UT2"):
    """Upper triangular 2 x 2 matrices, basis e11, e12, e22."""
    c = np.zeros((3, 3, 3), dtype=np.int64)
    c[0, 0, 0] = c[0, 1, 1] = c[1, 2, 1] = c[2, 2, 2] = 1
    return validate_algebra(F, c, [1, 0, 1], name=name)


def split_product(F, k=2, name=""):
    """F x ... x F (k copies), basis of orthogonal idempotents."""
    c = np.zeros((k, k, k), dtype=np.int64)
    c[np.arange(k), np.arange(k), np.arange(k)] = 1
    return validate_algebra(F, c, np.ones(k, dtype=np.int64), name=name or f"F^{k}")


# -- fixtures ----------------------------------------------------------------

def f2c2():
    return group_algebra(cyclic_table(2), GF(2), name="F2[C2]", names=["1", "g"])


def c3f3():
    return group_algebra(cyclic_table(3), GF(3), name="F3[C3]", names=["1", "g", "g^2"])


def f3s3():
    table, names = symmetric_table(3)
    return group_algebra(table, GF(3), name="F3[S3]", names=names)


def s3f2():
    table, names = symmetric_table(3)
    return group_algebra(table, GF(2), name="F2[S3]", names=names)


def sweedler():
    return sweedler_taft(2, GF(3), 2, name="H4")


def taft3_f4():
    F = GF(2, 2)
    return sweedler_taft(3, F, F.element((0, 1)), name="Taft3")


def b2xb2_swap_spec():
    """(F2 x F2) * C2 with the generator swapping the factors and trivial cocycle."""
    F = GF(2)
    B = split_product(F, 2, name="F2xF2")
    swap = np.array([[[1, 0], [0, 1]], [[0, 1], [1, 0]]], dtype=np.int64)
    tau = np.tile(B.unit, (2, 2, 1))
    return CrossedProductSpec(B, cyclic_table(2), swap, tau, names=["1", "g"])


def ut2_c2_spec():
    """UT2 * C2 over F2 with trivial action and cocycle, i.e. UT2 (x) F2[C2]."""
    F = GF(2)
    B = ut2(F)
    ident = np.stack([np.eye(3, dtype=np.int64)] * 2)
    tau = np.tile(B.unit, (2, 2, 1))
    return CrossedProductSpec(B, cyclic_table(2), ident, tau, names=["1", "g"])


def m2():
    return matrix_algebra(2, GF(2), name="M2")


GROUP_FIXTURES = {"c2f2": f2c2, "c3f3": c3f3, "s3f3": f3s3, "s3f2": s3f2}
