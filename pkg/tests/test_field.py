import itertools

import numpy as np
import pytest

from hopfk.errors import InputError
from hopfk.exactla import GF, Echelon
from hopfk.exactla.field import first_irreducible, is_irreducible_mod_p


FIELDS = [(2, 1), (3, 1), (5, 1), (2, 2), (3, 2), (2, 3)]


@pytest.mark.parametrize("p,e", FIELDS)
def test_field_axioms_exhaustive(p, e):
    F = GF(p, e)
    x = np.array(F.elements())
    a, b = np.meshgrid(x, x, indexing="ij")
    add, mul = F.add(a, b), F.mul(a, b)
    assert np.array_equal(add, add.T) and np.array_equal(mul, mul.T)
    for c in x:
        assert np.array_equal(F.add(add, c), F.add(a, F.add(b, c)))
        assert np.array_equal(F.mul(mul, c), F.mul(a, F.mul(b, c)))
        assert np.array_equal(F.mul(add, c), F.add(F.mul(a, c), F.mul(b, c)))
    nz = x[1:]
    assert np.all(F.mul(nz, F.inv(nz)) == 1)
    assert np.all(F.add(x, F.neg(x)) == 0)
    # the multiplicative group is cyclic of order q - 1: some element has full order
    orders = [min(k for k in range(1, F.q) if F.power(int(g), k) == 1) for g in nz]
    assert max(orders) == F.q - 1


@pytest.mark.parametrize("p,e", FIELDS)
def test_frobenius_is_additive(p, e):
    F = GF(p, e)
    x = np.array(F.elements())
    for a in x:
        for b in x:
            assert F.power(int(F.add(a, b)), p) == F.add(F.power(int(a), p), F.power(int(b), p))


def test_interned_and_modulus():
    assert GF(2, 2) is GF(2, 2)
    assert is_irreducible_mod_p(first_irreducible(3, 2), 3)
    with pytest.raises(InputError):
        GF(4)


def test_element_parsing():
    F = GF(2, 2)
    assert F.element((0, 1)) == 2
    assert F.element(1) == 1
    with pytest.raises(InputError):
        F.element(2)
    with pytest.raises(InputError):
        F.element((0, 2))
    assert GF(5).element(7) == 2
    assert F.to_plain(F.element((1, 1))) == [1, 1]


def test_kernel_examples():
    F = GF(2)
    assert F.kernel(np.eye(3, dtype=np.int64)).shape[0] == 0
    assert F.kernel(np.zeros((2, 2), dtype=np.int64)).shape[0] == 2
    k = F.left_kernel(np.array([[1, 1], [1, 1]]))
    assert k.tolist() == [[1, 1]]


@pytest.mark.parametrize("p,e", [(2, 1), (3, 1), (2, 2)])
def test_kernel_against_enumeration(p, e):
    F = GF(p, e)
    rng = np.random.default_rng(p * 10 + e)
    for _ in range(20):
        r, c = rng.integers(1, 4, size=2)
        a = F.random(rng, (r, c))
        k = F.kernel(a)
        count = sum(1 for v in itertools.product(range(F.q), repeat=c)
                    if not F.matmul(a, np.array(v)).any())
        assert F.q ** k.shape[0] == count
        if k.shape[0]:
            assert not F.matmul(a, k.T).any()
        assert F.rank(a) + k.shape[0] == c


def test_solve_by_substitution():
    F = GF(3, 2)
    rng = np.random.default_rng(3)
    for _ in range(30):
        a = F.random(rng, (3, 4))
        b = F.random(rng, 3)
        x = F.solve(a, b)
        if x is None:
            assert F.rank(np.hstack([a, b[:, None]])) > F.rank(a)
        else:
            assert np.array_equal(F.matmul(a, x), b)
        y = F.solve_left(a.T, b[None, :])
        assert (y is None) == (x is None)


def test_inverse_and_matpow():
    F = GF(5)
    rng = np.random.default_rng(0)
    for _ in range(10):
        a = F.random(rng, (4, 4))
        if F.is_invertible(a):
            assert np.array_equal(F.matmul(a, F.inverse(a)), F.identity(4))
        assert np.array_equal(F.matpow(a, 3), F.matmul(a, F.matmul(a, a)))


def test_kron_examples_and_mixed_product():
    F = GF(3)
    assert np.array_equal(F.kron(F.identity(2), F.identity(3)), F.identity(6))
    e = np.array([[1, 0], [0, 0]])
    k = F.kron(e, e)
    assert k.sum() == 1 and k[0, 0] == 1
    rng = np.random.default_rng(1)
    A, B, C, D = (F.random(rng, (2, 2)) for _ in range(4))
    assert np.array_equal(F.matmul(F.kron(A, B), F.kron(C, D)), F.kron(F.matmul(A, C), F.matmul(B, D)))


def test_echelon_coords():
    F = GF(2, 2)
    rng = np.random.default_rng(9)
    for _ in range(10):
        ech = Echelon(F, 5, track=True)
        accepted = [v for v in F.random(rng, (4, 5)) if ech.add(v)]
        w = F.lincomb(F.random(rng, len(accepted)), np.array(accepted))
        assert ech.contains(w)
        assert np.array_equal(F.lincomb(ech.coords(w), np.array(accepted)), w)
