import numpy as np
import pytest

from hopfk import builtin
from hopfk.algcore import (direct_sum, hom_space, is_homomorphism, quotient, regular_module, spin,
                           submodule, validate_algebra)
from hopfk.algcore.algebra import ModuleRep
from hopfk.errors import NoUnit, NotAModule, NotAssociative
from hopfk.exactla import GF
from hopfk.oracles import random_module


def test_ut2_and_group_algebra_valid():
    A = builtin.ut2(GF(2))
    assert A.dim == 3 and A.unit.tolist() == [1, 0, 1]
    H = builtin.f2c2()
    assert H.algebra.unit.tolist() == [1, 0]


def test_no_unit():
    c = np.zeros((2, 2, 2), dtype=np.int64)
    c[0, 0, 1] = 1                      # a0 a0 = a1, every other product 0
    with pytest.raises(NoUnit):
        validate_algebra(GF(2), c)


def test_non_associative_rejected():
    c = np.zeros((2, 2, 2), dtype=np.int64)
    c[0, 0, 1] = 1                      # a0 a0 = a1, a1 a0 = a0
    c[1, 0, 0] = 1
    with pytest.raises(NotAssociative):
        validate_algebra(GF(2), c)


def test_unit_solved_for():
    A = builtin.matrix_algebra(2, GF(3))
    B = validate_algebra(GF(3), A.c)
    assert np.array_equal(B.unit, A.unit)


def test_left_mult_and_mul_agree():
    A = builtin.f3s3().algebra
    F = A.field
    rng = np.random.default_rng(0)
    for _ in range(10):
        x, y = F.random(rng, (2, A.dim))
        assert np.array_equal(F.matmul(y, A.left_mult_matrix(x)), A.mul(x, y))
        assert np.array_equal(F.matmul(x, regular_module(A).act(y)), A.mul(x, y))


def test_module_check_rejects_bad_action():
    A = builtin.ut2(GF(2))
    act = np.zeros((3, 1, 1), dtype=np.int64)
    with pytest.raises(NotAModule):
        ModuleRep(A, act)


def test_hom_contains_identity_and_composes():
    A = builtin.ut2_c2_spec().B
    rng = np.random.default_rng(1)
    for _ in range(10):
        M = random_module(A, rng)
        hom = hom_space(M, M)
        F = A.field
        ident = F.identity(M.dim).reshape(-1)
        assert F.solve_left(hom.basis.reshape(hom.dim, -1), ident[None, :]) is not None
        for X in hom.basis:
            assert is_homomorphism(M, M, X)


def test_hom_dimension_against_enumeration():
    A = builtin.f2c2().algebra
    rng = np.random.default_rng(2)
    for _ in range(6):
        M, N = random_module(A, rng, max_dim=2), random_module(A, rng, max_dim=2)
        count = 0
        for bits in range(2 ** (M.dim * N.dim)):
            X = np.array([(bits >> k) & 1 for k in range(M.dim * N.dim)]).reshape(M.dim, N.dim)
            count += is_homomorphism(M, N, X)
        assert 2 ** hom_space(M, N).dim == count


def test_sub_and_quotient_dimensions():
    A = builtin.f3s3().algebra
    F = A.field
    R = regular_module(A)
    W = spin(R, [F.identity(6)[0] + F.identity(6)[1]])
    S = submodule(R, W, check=True)
    Q, proj = quotient(R, W)
    assert S.dim + Q.dim == 6
    S.check()
    Q.check()
    assert is_homomorphism(R, Q, proj)


def test_direct_sum_action_blocks():
    A = builtin.ut2(GF(2))
    R = regular_module(A)
    D = direct_sum(R, R)
    D.check()
    assert D.dim == 6
    assert np.array_equal(D.action[:, :3, :3], R.action)
