"""Graded equivariant free modules, their complexes, and Hom computations."""
from .complexes import (ChainMap, EquivariantComplex, HomologyPiece, cone, graded_homology,
                        hom_complexes, identity_map, koszul_complex, shift, single_term,
                        slice_dimension, zero_complex)
from .hom import (HomResult, equivariant_maps, hom_generators, hom_generators_bruteforce,
                  is_equivariant_map)
from .modules import (BlockModule, RawEquivariantModule, act_on_matrix, block_module_as_raw,
                      check_degrees, check_normal_form, normalize_module, zero_module)
