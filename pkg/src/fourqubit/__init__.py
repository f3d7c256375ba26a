"""Exact SLOCC classification of pure 4-qubit states.

Everything is computed over the Gaussian rationals Q(i): invariants,
Jordan structure of the 8x8 matrix R~, family membership, equivalence
decisions, tensor ranks, O_m x O_n canonical forms and the F4 Weyl layer.
"""

from .classify import (EquivalenceVerdict, FamilyLabel, LowRankType, family_of,
                       is_factorizable, low_rank_type, orbit_label_equivalent,
                       slocc_equivalent)
from .errors import InconsistencyError
from .families import (BlockSpec, FamilyParams, canonical_matrix, family_rmatrix,
                       normal_form_state, symmetrized_jordan_block)
from .gaussian import GaussianRational, format_scalar, parse_scalar
from .invariants import (InvariantVector, WeylPoint, charpoly_from_invariants,
                         invariant_vector, weyl_group_action, weyl_invariants,
                         weyl_relations)
from .matrix import ExactMatrix, char_poly, determinant, matrix_rank
from .poly import UniPoly
from .rank import RankResult, in_closure_S2, in_closure_S3, rank3, rank4
from .spectral import (JordanProfile, OrbitLabel, is_nilpotent, is_semisimple,
                       jordan_profile, orthogonal_orbit_label, r_matrix, r_tilde,
                       rational_orthogonal)
from .states import (PureState3, PureState4, QubitPermutation, apply_local, flattening,
                     parse_ket, parse_state, permute_qubits)

__version__ = "0.1.0"

__all__ = [
    "BlockSpec", "EquivalenceVerdict", "ExactMatrix", "FamilyLabel", "FamilyParams",
    "GaussianRational", "InconsistencyError", "InvariantVector", "JordanProfile",
    "LowRankType", "OrbitLabel", "PureState3", "PureState4", "QubitPermutation",
    "RankResult", "UniPoly", "WeylPoint",
    "apply_local", "canonical_matrix", "char_poly", "charpoly_from_invariants",
    "determinant", "family_of", "family_rmatrix", "flattening", "format_scalar",
    "in_closure_S2", "in_closure_S3", "invariant_vector", "is_factorizable",
    "is_nilpotent", "is_semisimple", "jordan_profile", "low_rank_type", "matrix_rank",
    "normal_form_state", "orbit_label_equivalent", "orthogonal_orbit_label",
    "parse_ket", "parse_scalar", "parse_state", "permute_qubits", "r_matrix",
    "r_tilde", "rank3", "rank4", "rational_orthogonal", "slocc_equivalent",
    "symmetrized_jordan_block", "weyl_group_action", "weyl_invariants",
    "weyl_relations",
]
