"""Graver bases of integer lattices, with symmetry-exploiting engines.

The Graver basis of a sublattice of Z^n is the set of its conformally
minimal nonzero vectors: minimal within their closed orthant under
componentwise absolute-value comparison.  This package computes Graver
bases by completion, exploits coordinate-permutation symmetries of the
lattice, certifies results with an independent brute-force oracle, and
ships generators for multiway-table benchmark lattices.
"""

from .engine_fast import fast_graver, fast_normal_form
from .engine_pottier import GraverSet, PairQueue, extract_minimal, normal_form, pottier_graver
from .engine_sym import sym_pottier
from .engine_sym_fast import sym_fast_graver
from .errors import (
    DimensionError,
    FixedWidthOverflowError,
    GraverError,
    MembershipError,
    ParseError,
    ResourceLimitError,
    ValidationError,
    VerificationError,
)
from .formats import canonical_sign, read_matrix, read_symmetry, up_to_sign, write_matrix, write_symmetry
from .lattice import (
    InputSetFbar,
    LatticeBasis,
    hermite_rows,
    kernel_lattice,
    lift,
    member,
    minimal_projected_generators,
    preprocess,
    project,
    to_original_coords,
    to_working_coords,
)
from .models import table_group, table_matrix
from .oracle import brute_force_graver, is_graver_element
from .symmetry import (
    OrbitRecord,
    Permutation,
    PermutationGroup,
    apply,
    canonical_rep,
    conjugate,
    orbit,
    verify_invariance,
)
from .vectors import IntVector, conforms, pos_neg_split, prefix_norm, same_orthant_prefix

__version__ = "0.1.0"

__all__ = [
    "IntVector",
    "conforms",
    "pos_neg_split",
    "prefix_norm",
    "same_orthant_prefix",
    "LatticeBasis",
    "InputSetFbar",
    "hermite_rows",
    "kernel_lattice",
    "preprocess",
    "project",
    "lift",
    "member",
    "minimal_projected_generators",
    "to_original_coords",
    "to_working_coords",
    "Permutation",
    "PermutationGroup",
    "OrbitRecord",
    "apply",
    "canonical_rep",
    "conjugate",
    "orbit",
    "verify_invariance",
    "GraverSet",
    "PairQueue",
    "normal_form",
    "pottier_graver",
    "extract_minimal",
    "fast_normal_form",
    "fast_graver",
    "sym_pottier",
    "sym_fast_graver",
    "is_graver_element",
    "brute_force_graver",
    "table_matrix",
    "table_group",
    "canonical_sign",
    "up_to_sign",
    "read_matrix",
    "write_matrix",
    "read_symmetry",
    "write_symmetry",
    "GraverError",
    "DimensionError",
    "MembershipError",
    "ResourceLimitError",
    "FixedWidthOverflowError",
    "ParseError",
    "ValidationError",
    "VerificationError",
]
