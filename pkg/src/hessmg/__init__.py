"""Torus-fixed points, moment graphs and equivariant ideals of Hessenberg varieties."""

from .combinatorics import (HessenbergFunction, Permutation, Transposition,
                            apply_transposition, enumerate_hessenberg_functions,
                            enumerate_permutations, inverse, validate_hessenberg)
from .flags import (FlagMatrix, LinearOperator, membership_adjoint,
                    membership_minors_all, membership_minors_full, membership_rank,
                    one_parameter_flag, permutation_flag)
from .linalg import RMatrix, determinant, in_span, rank
from .torus import (MomentGraph, moment_graph, nilpotent_edge_closure_in_hess,
                    nilpotent_fixed_point, semisimple_edge_in_hess)

__version__ = "0.1.0"
