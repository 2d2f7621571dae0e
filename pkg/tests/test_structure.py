import numpy as np
import pytest

from hopfk import builtin, chop
from hopfk.algcore import (gldim, is_projective, proj_dim, projective_cover, radical,
                           regular_module, syzygy, top)
from hopfk.algcore.algebra import is_homomorphism
from hopfk.exactla import GF
from hopfk.oracles import is_projective_by_splitting, random_module


def _ut2():
    return builtin.ut2(GF(2))


def test_radical_examples():
    assert radical(_ut2()).tolist() == [[0, 1, 0]]
    assert radical(builtin.m2()).shape[0] == 0
    assert radical(builtin.f2c2().algebra).tolist() == [[1, 1]]


def test_radical_nilpotent_and_quotient_semisimple():
    for A in (_ut2(), builtin.f3s3().algebra, builtin.sweedler().algebra):
        J = radical(A)
        F = A.field
        # J^k = 0 for k = dim J + 1
        power = J
        for _ in range(J.shape[0] + 1):
            if power.shape[0] == 0:
                break
            prods = np.array([A.mul(x, y) for x in power for y in J]).reshape(-1, A.dim)
            power = F.row_space(prods)
        assert power.shape[0] == 0
        # dim A / J = sum of (dim S)^2 / dim End(S) for the simples
        simples = chop.simple_modules(A)
        assert A.dim - J.shape[0] == sum(S.dim ** 2 // e for S, e in
                                         zip(simples.simples, simples.endo_dims))


def test_ut2_projectivity_examples():
    A = _ut2()
    simples, pl = chop.pims(A)
    S1 = next(S for S in simples.simples if projective_cover(S).module.dim == 2)
    assert not is_projective(S1)
    P2 = next(P for P in pl.pims if P.dim == 1)
    assert is_projective(P2)
    assert syzygy(S1).dim == 1
    assert top(regular_module(A)).dim == 2


def test_cover_of_pim_is_itself():
    for A in (_ut2(), builtin.f3s3().algebra, builtin.sweedler().algebra):
        for P in chop.pims(A)[1].pims:
            cover = projective_cover(P)
            assert cover.module.dim == P.dim
            assert is_homomorphism(cover.module, P, cover.surjection)


def test_regular_module_projective():
    for A in (_ut2(), builtin.m2(), builtin.taft3_f4().algebra):
        assert is_projective(regular_module(A))


@pytest.mark.parametrize("make", [_ut2, lambda: builtin.f2c2().algebra, lambda: builtin.f3s3().algebra,
                                  lambda: builtin.sweedler().algebra])
def test_is_projective_against_splitting_oracle(make):
    A = make()
    rng = np.random.default_rng(20)
    seen = set()
    for _ in range(20):
        M = random_module(A, rng)
        verdict = is_projective(M)
        assert verdict == is_projective_by_splitting(M)
        seen.add(verdict)
    assert seen == {True, False}


def test_cover_and_syzygy_dimensions():
    A = builtin.ut2_c2_spec().B
    rng = np.random.default_rng(4)
    for _ in range(15):
        M = random_module(A, rng)
        cover = projective_cover(M)
        assert is_homomorphism(cover.module, M, cover.surjection)
        assert A.field.rank(cover.surjection) == M.dim
        assert syzygy(M).dim == cover.module.dim - M.dim


def test_gldim_examples():
    assert gldim(_ut2()) == 1
    assert gldim(builtin.m2()) == 0
    assert gldim(builtin.f2c2().algebra) is None     # self-injective, not semisimple
    assert proj_dim(regular_module(_ut2())) == 0
    with pytest.raises(ValueError):
        proj_dim(regular_module(_ut2()), bound=0)
