import itertools

import numpy as np
import pytest

from hopfk.exactla import GF
from hopfk.exactla import poly


def _product(F, fs):
    out = [1]
    for f in fs:
        out = poly.mul(F, out, f)
    return out


def _monic_irreducible_by_enumeration(F, f):
    """f is irreducible iff no monic polynomial of degree 1..deg f // 2 divides it."""
    d = poly.deg(f)
    for k in range(1, d // 2 + 1):
        for tail in itertools.product(range(F.q), repeat=k):
            g = list(tail) + [1]
            if not poly.mod(F, f, g):
                return False
    return True


@pytest.mark.parametrize("p,e", [(2, 1), (3, 1), (2, 2)])
def test_factors_are_irreducible_and_cover_the_roots(p, e):
    F = GF(p, e)
    rng = np.random.default_rng(p + 7 * e)
    for _ in range(25):
        d = int(rng.integers(1, 7))
        f = poly.monic(F, poly.trim(list(F.random(rng, d)) + [1]))
        facs = poly.irreducible_factors(F, f)
        for g in facs:
            assert g[-1] == 1 and _monic_irreducible_by_enumeration(F, g)
            assert not poly.mod(F, f, g)
        # f divides a power of the product of its distinct factors
        rad = _product(F, facs)
        assert not poly.mod(F, _product(F, [rad] * poly.deg(f)), f)


def test_divmod_identity():
    F = GF(3)
    rng = np.random.default_rng(0)
    for _ in range(30):
        f = poly.trim(F.random(rng, 6))
        g = poly.trim(list(F.random(rng, 3)) + [1])
        q, r = poly.divmod_(F, f, g)
        assert poly.deg(r) < poly.deg(g)
        assert poly.add(F, poly.mul(F, q, g), r) == f


def test_cayley_hamilton():
    F = GF(2, 2)
    rng = np.random.default_rng(5)
    for n in range(1, 6):
        a = F.random(rng, (n, n))
        chi = poly.charpoly(F, a)
        assert poly.deg(chi) == n and chi[-1] == 1
        assert not poly.eval_matrix(F, chi, a).any()


def test_gcd_and_derivative():
    F = GF(5)
    f = poly.mul(F, [1, 1], [2, 1])            # (x+1)(x+2)
    g = poly.mul(F, [1, 1], [3, 1])
    assert poly.gcd(F, f, g) == [1, 1]
    assert poly.derivative(F, [0, 0, 1]) == [0, 2]
