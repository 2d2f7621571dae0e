"""Algebras by structure constants, their right modules, and homological basics."""

from .algebra import (Algebra, HomBasis, ModuleRep, annihilator, direct_sum, hom_space,
                      is_homomorphism, quotient, radical_layer, regular_module, spin, submodule,
                      validate_algebra, zero_module)
from .structure import (ProjectiveCover, gldim, is_projective, proj_dim, projective_cover,
                        radical, syzygy, top)

__all__ = ["Algebra", "HomBasis", "ModuleRep", "ProjectiveCover", "annihilator", "direct_sum",
           "gldim", "hom_space", "is_homomorphism", "is_projective", "proj_dim", "projective_cover",
           "quotient", "radical", "radical_layer", "regular_module", "spin", "submodule", "syzygy",
           "top", "validate_algebra", "zero_module"]
