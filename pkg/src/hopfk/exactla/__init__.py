"""Exact linear algebra: finite fields, polynomials over them, integer normal forms."""

from .field import GF, Echelon, FiniteField
from .intmat import hnf, invariant_factors, lattice_min_multiple, snf

__all__ = ["GF", "Echelon", "FiniteField", "hnf", "invariant_factors", "lattice_min_multiple", "snf"]
