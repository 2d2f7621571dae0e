import numpy as np
import pytest

from conftest import extension, load
from hopfk import builtin, chop
from hopfk.algcore import quotient, regular_module, spin, submodule
from hopfk.errors import (CartanNotInjective, NoSuchPQ, NotProjective, RegularityNotDetected)
from hopfk.exactla import GF, intmat
from hopfk.galois import CrossedProductSpec, crossed_product, galois_check
from hopfk.kzero import (GrothendieckClass, cartan_analysis, cartan_matrix, find_pq, g0_action,
                         g0_class, g0_ring_product, k0_class, minimal_m, pim_sum, resolve_in_C,
                         unit_class, verify_cartan_bound)
from hopfk.oracles import random_module

HOPFS = [builtin.f2c2, builtin.c3f3, builtin.f3s3, builtin.s3f2, builtin.sweedler,
         builtin.taft3_f4]


def test_cartan_examples():
    assert cartan_matrix(builtin.f2c2().algebra).C == [[2]]
    assert cartan_matrix(builtin.f3s3().algebra).C == [[2, 1], [1, 2]]
    assert cartan_matrix(builtin.sweedler().algebra).C == [[1, 1], [1, 1]]
    an = cartan_analysis(builtin.f2c2().algebra)
    assert (an.kernel_rank, an.coker_torsion) == (0, [2])
    an = cartan_analysis(builtin.f3s3().algebra)
    assert (an.kernel_rank, an.coker_torsion, an.invariant_factors) == (0, [3], [1, 3])
    an = cartan_analysis(builtin.sweedler().algebra)
    assert an.kernel_rank == 1 and not an.injective


def test_class_examples():
    H = builtin.f3s3()
    triv = chop.simple_modules(H.algebra).index(H.trivial)
    g = g0_class(regular_module(H.algebra)).coeffs
    assert g[triv] == 3 and g[1 - triv] == 3
    assert g0_class(regular_module(builtin.f2c2().algebra)).coeffs == (2,)
    U = builtin.ut2(GF(2))
    assert k0_class(regular_module(U)).coeffs == (1, 1)
    simples = chop.simple_modules(U).simples
    S1 = next(S for S in simples if not chop.iso_test(S, chop.pims(U)[1].pims[1]))
    with pytest.raises(NotProjective):
        k0_class(S1)


def test_grothendieck_arithmetic():
    a = GrothendieckClass("G0", [1, 2])
    b = GrothendieckClass.basis("G0", 2, 1)
    assert (a - b).coeffs == (1, 1) and (3 * a).coeffs == (3, 6) and (-a).coeffs == (-1, -2)
    with pytest.raises(ValueError):
        a + GrothendieckClass("K0", [0, 0])


@pytest.mark.parametrize("make", [builtin.f2c2, builtin.f3s3, builtin.sweedler, builtin.s3f2])
def test_g0_additive_on_short_exact_sequences(make):
    A = make().algebra
    rng = np.random.default_rng(60)
    tested = 0
    for _ in range(60):
        Y = random_module(A, rng)
        W = spin(Y, A.field.random(rng, (1, Y.dim)))
        if 0 < W.shape[0] < Y.dim:
            X, Z = submodule(Y, W), quotient(Y, W)[0]
            assert g0_class(Y) == g0_class(X) + g0_class(Z)
            tested += 1
    assert tested > 5


@pytest.mark.parametrize("make", HOPFS)
def test_g0_ring_associative_and_unital(make):
    H = make()
    k = len(chop.simple_modules(H.algebra))
    basis = [GrothendieckClass.basis("G0", k, i) for i in range(k)]
    one = unit_class(H)
    for u in basis:
        assert g0_ring_product(H, one, u) == u == g0_ring_product(H, u, one)
        for v in basis:
            for w in basis:
                assert g0_ring_product(H, g0_ring_product(H, u, v), w) == \
                    g0_ring_product(H, u, g0_ring_product(H, v, w))


def test_sign_squared_is_trivial():
    H = builtin.f3s3()
    simples = chop.simple_modules(H.algebra)
    triv = simples.index(H.trivial)
    sign = GrothendieckClass.basis("G0", 2, 1 - triv)
    assert g0_ring_product(H, sign, sign) == unit_class(H)


@pytest.mark.parametrize("name", ["f2c2.hopf", "f3s3.hopf", "ut2_c2.cross", "b2xb2_swap.cross"])
def test_g0_action_is_unital_module_action(name):
    ext = galois_check(extension(name))
    H = ext.H
    kH = len(chop.simple_modules(H.algebra))
    kA = len(chop.simple_modules(ext.A))
    one = unit_class(H)
    for kind in ("G0", "K0"):
        for i in range(kA):
            x = GrothendieckClass.basis(kind, kA, i)
            assert g0_action(ext, x, one) == x
            for a in range(kH):
                for b in range(kH):
                    u = GrothendieckClass.basis("G0", kH, a)
                    v = GrothendieckClass.basis("G0", kH, b)
                    assert g0_action(ext, x, g0_ring_product(H, u, v)) == \
                        g0_action(ext, g0_action(ext, x, u), v)


@pytest.mark.parametrize("make", HOPFS)
def test_cartan_naturality(make):
    A = make().algebra
    data = cartan_matrix(A)
    rng = np.random.default_rng(70)
    for _ in range(5):
        coeffs = [int(c) for c in rng.integers(0, 3, size=data.rank)]
        if not any(coeffs):
            continue
        P = pim_sum(A, coeffs)
        x = k0_class(P)
        assert list(x.coeffs) == coeffs
        assert data.cartan_map(x) == g0_class(P)


def test_brauer_determinant_nonzero():
    for name in ("c2f2.group", "c3f3.group", "s3f3.group", "s3f2.group"):
        assert intmat.det(cartan_matrix(load(name).algebra).C) != 0


def test_minimal_m_and_pq():
    assert minimal_m(builtin.f2c2()) == 2
    assert minimal_m(builtin.f3s3()) == 3
    assert minimal_m(builtin.sweedler()) is None
    pq = find_pq(builtin.f2c2())
    assert (pq.P, pq.Q, pq.m) == ([0], [], 2)
    H = builtin.f3s3()
    triv = chop.simple_modules(H.algebra).index(H.trivial)
    pq = find_pq(H)
    assert (sorted(pq.P), pq.Q, pq.m) == ([triv, triv], [1 - triv], 3)
    with pytest.raises(NoSuchPQ):
        find_pq(builtin.sweedler())


def test_resolution_of_s1():
    ext = galois_check(extension("ut2_c2.cross"))
    for S in chop.simple_modules(ext.A).simples:
        res = resolve_in_C(ext, S)
        assert res.check_exact()
        if res.length:
            assert res.length == 1
            assert [T.dim for T in res.terms] == [3, 4, 1]


def test_verify_bound_examples():
    r = verify_cartan_bound(extension("f2c2.hopf"))
    assert (r.verdict, r.m, r.cartan_A.coker_torsion, r.gldim_B) == ("PASS", 2, [2], 0)
    r = verify_cartan_bound(extension("ut2_c2.cross"))
    assert r.cartan_A.C == [[2, 2], [0, 2]]
    assert r.cartan_A.invariant_factors == [2, 2] and r.m == 2 and r.gldim_B == 1
    r = verify_cartan_bound(extension("b2xb2_swap.cross"))
    assert r.cartan_A.coker_torsion == [] and r.cartan_A.kernel_rank == 0
    with pytest.raises(CartanNotInjective):
        verify_cartan_bound(extension("sweedler.hopf"))


def test_regularity_not_detected():
    # F2[C2] * C2 with trivial action: coinvariants F2[C2] have infinite global dimension
    B = builtin.f2c2().algebra
    ident = np.stack([np.eye(2, dtype=np.int64)] * 2)
    tau = np.tile(B.unit, (2, 2, 1))
    CA = crossed_product(CrossedProductSpec(B, builtin.cyclic_table(2), ident, tau))
    with pytest.raises(RegularityNotDetected):
        verify_cartan_bound(CA, bound=4)
