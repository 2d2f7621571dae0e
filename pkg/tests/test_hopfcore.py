import numpy as np
import pytest

from hopfk import builtin, chop
from hopfk.algcore import direct_sum, regular_module
from hopfk.errors import (AntipodeAxiomFails, NotAGroup, NotComoduleAlgebra, NotPrimitiveRoot)
from hopfk.exactla import GF
from hopfk.hopfcore import (ComoduleAlgebra, antipode_inverse, check_group_table, sweedler_taft,
                            twist, validate_hopf)
from hopfk.oracles import random_module

CONSTRUCTORS = [builtin.f2c2, builtin.c3f3, builtin.f3s3, builtin.s3f2, builtin.sweedler,
                builtin.taft3_f4]


@pytest.mark.parametrize("make", CONSTRUCTORS)
def test_constructors_validate(make):
    H = make()
    validate_hopf(H.algebra, H.comul, H.counit, H.antipode, name=H.name)
    F = H.field
    Si = antipode_inverse(H)
    assert np.array_equal(F.matmul(Si, H.antipode), F.identity(H.dim))


def test_sweedler_antipode():
    H = builtin.sweedler()              # basis 1, g, x, gx
    F = H.field
    S = H.antipode
    assert not np.array_equal(F.matmul(S, S), F.identity(4))
    assert np.array_equal(F.matpow(S, 4), F.identity(4))
    # sigma(x) = -g^-1 x = -gx
    assert S[:, 2].tolist() == [0, 0, 0, 2]
    # sigma^-1(x) = gx
    assert H.antipode_inverse[:, 2].tolist() == [0, 0, 0, 1]


def test_sweedler_wrong_antipode_detected():
    H = builtin.sweedler()
    S = H.antipode.copy()
    S[:, 2] = [0, 0, 1, 0]              # sigma(x) = x
    with pytest.raises(AntipodeAxiomFails):
        validate_hopf(H.algebra, H.comul, H.counit, S)


def test_taft_needs_primitive_root():
    H = sweedler_taft(3, GF(2, 2), GF(2, 2).element((0, 1)))
    assert H.dim == 9
    with pytest.raises(NotPrimitiveRoot):
        sweedler_taft(3, GF(2), 1)
    with pytest.raises(NotPrimitiveRoot):
        sweedler_taft(2, GF(3), 1)


def test_group_table_checks():
    with pytest.raises(NotAGroup):
        check_group_table([[0, 1], [1, 1]])
    with pytest.raises(NotAGroup):
        check_group_table([[0, 1, 2], [1, 2, 0], [2, 1, 0]])
    t, e, inv = check_group_table(builtin.cyclic_table(4))
    assert e == 0 and inv == [0, 3, 2, 1]


def test_bad_coaction_rejected():
    H = builtin.f2c2()
    A = H.algebra
    rho = np.zeros((4, 2), dtype=np.int64)
    rho[0, 0] = rho[1, 1] = 1           # a0 -> a0 (x) 1, a1 -> a0 (x) g: not multiplicative
    with pytest.raises(NotComoduleAlgebra):
        ComoduleAlgebra(A, H, rho)


@pytest.mark.parametrize("make", [builtin.f2c2, builtin.f3s3, builtin.sweedler])
def test_twist_with_trivial_is_identity(make):
    H = make()
    CA = H.as_comodule_algebra
    rng = np.random.default_rng(11)
    for _ in range(8):
        M = random_module(H.algebra, rng)
        T = twist(CA, M, H.trivial)
        assert np.array_equal(T.action, M.action)


@pytest.mark.parametrize("make", [builtin.f2c2, builtin.f3s3, builtin.sweedler])
def test_iterated_twist_associative(make):
    H = make()
    CA = H.as_comodule_algebra
    rng = np.random.default_rng(12)
    for _ in range(6):
        M = random_module(H.algebra, rng, max_dim=3)
        V = random_module(H.algebra, rng, max_dim=3)
        W = random_module(H.algebra, rng, max_dim=3)
        lhs = twist(CA, twist(CA, M, V), W)
        rhs = twist(CA, M, H.tensor(V, W))
        # with the X-major Kronecker order both live on M (x) V (x) W in the same basis
        assert np.array_equal(lhs.action, rhs.action)


def test_twist_regular_is_free():
    for CA in (builtin.f2c2().as_comodule_algebra, builtin.sweedler().as_comodule_algebra):
        H = CA.hopf
        A = CA.algebra
        for V in [H.trivial, H.regular] + list(chop.simple_modules(H.algebra).simples):
            T = twist(CA, regular_module(A), V)
            free = direct_sum(*([regular_module(A)] * V.dim))
            assert chop.iso_test(T, free) is True


def test_trivial_twist_regular_is_regular():
    H = builtin.f2c2()
    T = twist(H.as_comodule_algebra, H.trivial, H.regular)
    assert chop.iso_test(T, regular_module(H.algebra)) is True
