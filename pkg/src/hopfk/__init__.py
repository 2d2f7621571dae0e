"""hopfk: exact Cartan maps, Grothendieck groups and Hopf-Galois checks over finite fields.

Layers, bottom up: ``exactla`` (finite fields, polynomials, integer normal
forms), ``algcore`` (algebras and modules by structure constants), ``chop``
(MeatAxe-style composition series, simples and PIMs), ``hopfcore`` (Hopf and
comodule algebras, twisting), ``galois`` (coinvariants, Galois certification,
induction and restriction, crossed products), ``kzero`` (K_0/G_0 classes,
Cartan analysis and the degree-0 bound), ``formats`` and ``cli``.
"""

__version__ = "0.1.0"
