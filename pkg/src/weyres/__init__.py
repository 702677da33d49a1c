"""Equivariant resolutions of the sheaves W_j on maximal-minor loci, with an oracle to check them."""
from .bbw import ACYCLIC, CohomologyResult, GrassmannianBundleWeight, bbw_cohomology
from .partitions import enumerate_index_set, is_in_index_set, lambda_tilde, partitions, transpose
from .resolution import (
    EquivariantComplex,
    GradedBettiTable,
    build_complex_via_bbw,
    build_universal_complex,
    closed_form_first_terms,
    j1_closed_form,
    relativize_split,
)
from .schur import dim_schur, kostka, pieri_exterior, pieri_terms, weight_multiplicity
from .verification import (
    acm_certificate,
    hilbert_prediction,
    k_polynomial,
    multiplicity,
    ulrich_certificate,
)
