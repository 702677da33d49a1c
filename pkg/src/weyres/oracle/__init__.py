"""Explicit commutative algebra used to cross-check the combinatorial complexes."""
from .checks import (
    annihilator_check,
    annihilator_report,
    fiber_check_j1,
    fiber_checks,
    multiplier_witness,
    random_corank_one,
    random_form,
)
from .hilbert import hilbert_function
from .linalg import ALT_PRIME, DEFAULT_PRIME, sparse_rank
from .presentation import (
    GradedPresentation,
    presentation_coker,
    presentation_ext,
    presentation_K,
    presentation_sym,
    presentation_tensor,
    presentation_W,
    tautological_matrix,
)
