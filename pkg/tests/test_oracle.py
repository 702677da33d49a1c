import random
from math import comb

import pytest

from weyres.oracle.checks import (
    annihilator_dim,
    annihilator_report,
    fiber_check_j1,
    fiber_checks,
    minor_ideal_dim,
    multiplier_witness,
    random_corank_one,
    random_form,
)
from weyres.oracle.hilbert import hilbert_function
from weyres.oracle.linalg import ALT_PRIME, dense_rank
from weyres.oracle.presentation import (
    GradedPresentation,
    free_hilbert,
    free_presentation,
    maximal_minors,
    point_of,
    poly_degree,
    presentation_coker,
    presentation_ext,
    presentation_K,
    presentation_sym,
    presentation_tensor,
    presentation_W,
    tautological_matrix,
)
from weyres.resolution import build_universal_complex
from weyres.verification import hilbert_prediction, k_polynomial, shift_k


def test_tautological_matrix():
    t = tautological_matrix(2, 2)
    entries = [next(iter(p)) for row in t for p in row]
    assert len(set(entries)) == 4
    t = tautological_matrix(3, 2)
    assert all(poly_degree(p) == 1 for row in t for p in row)
    # restricting to a point gives back the numeric matrix
    f = [[1, 2], [3, 4], [5, 6]]
    P = presentation_coker(3, 2)
    cols = P.evaluate(point_of(f))
    assert [[cols[i].get(k, 0) for i in range(2)] for k in range(3)] == f


def test_inhomogeneous_entry_rejected():
    with pytest.raises(ValueError):
        GradedPresentation(2, (0,), (1,), [{0: {(2, 0): 1}}])


def test_free_module_hilbert():
    P = free_presentation(3, (0, 1, 1))
    assert hilbert_function(P, 4) == [free_hilbert(3, (0, 1, 1), d) for d in range(5)]
    assert free_hilbert(3, (2,), 4) == comb(4, 2)


def test_powers_of_one_are_identity():
    P = presentation_coker(3, 2)
    assert presentation_sym(P, 1) is P
    assert presentation_ext(P, 1) is P


def test_tensor_with_ring_is_identity():
    P = presentation_K(3, 2)
    R = free_presentation(6)
    assert hilbert_function(presentation_tensor(P, R), 3) == hilbert_function(P, 3)


def test_powers_of_a_free_module():
    # no relations: Sym^k and wedge^k of R^3 are free of the expected rank
    F = free_presentation(2, (0, 0, 0))
    assert hilbert_function(presentation_sym(F, 2), 0) == [6]
    assert hilbert_function(presentation_ext(F, 2), 0) == [3]


def test_coker_hilbert_2x2():
    # coKer of the generic 2x2 matrix is resolved by 0 -> R(-1)^2 -> R^2
    assert hilbert_function(presentation_coker(2, 2), 4) == [2 * comb(d + 3, 3) - 2 * comb(d + 2, 3) for d in range(5)]


@pytest.mark.parametrize("m, n, j, d_max", [(2, 2, 0, 4), (2, 2, 1, 4), (3, 2, 0, 3), (3, 2, 1, 3), (3, 2, 2, 3)])
def test_hilbert_matches_prediction(m, n, j, d_max):
    shift = (n - 1) * (m - n + 1 - j)
    predicted = hilbert_prediction(shift_k(k_polynomial(build_universal_complex(m, n, j)), shift), m * n, d_max)
    P = presentation_W(m, n, j)
    assert hilbert_function(P, d_max) == predicted
    assert hilbert_function(P, d_max, ALT_PRIME) == predicted
    assert hilbert_function(P, min(d_max, 2), None) == predicted[: min(d_max, 2) + 1]


def test_parallel_hilbert_agrees():
    P = presentation_W(3, 2, 1)
    assert hilbert_function(P, 3, workers=2) == hilbert_function(P, 3)


def test_random_corank_one():
    rng = random.Random(0)
    for m, n in [(2, 2), (3, 2), (4, 3), (5, 3)]:
        f = random_corank_one(m, n, rng)
        assert len(f) == m and len(f[0]) == n
        assert dense_rank(f) == n - 1


@pytest.mark.parametrize("m, n", [(2, 2), (3, 2), (4, 2), (4, 3)])
def test_fiber_check_j1(m, n):
    rng = random.Random(m * 10 + n)
    for _ in range(10):
        coker, hom = fiber_check_j1(m, n, random_corank_one(m, n, rng))
        assert coker == hom == m - n + 1


def test_fiber_check_j1_rejects_full_rank():
    with pytest.raises(ValueError):
        fiber_check_j1(3, 2, [[1, 0], [0, 1], [0, 0]])


@pytest.mark.parametrize("m, n, j", [(2, 2, 0), (2, 2, 1), (3, 2, 0), (3, 2, 1), (3, 2, 2), (4, 2, 1), (4, 3, 1)])
def test_generic_fiber_rank(m, n, j):
    checks = fiber_checks(m, n, j, trials=10, seed=1)
    assert len(checks) == 10
    assert all(chk.fiber_dim == comb(m - n + 1, j) for chk in checks)
    assert all(chk.ok for chk in checks)


def test_minor_ideal_dims():
    # the maximal minors are linearly independent forms of degree n
    for m, n in [(2, 2), (3, 2), (4, 2)]:
        assert minor_ideal_dim(m, n, n - 1) == 0
        assert minor_ideal_dim(m, n, n) == comb(m, n)
    # degree-3 part of (det) in 4 variables is det times linear forms
    assert minor_ideal_dim(2, 2, 3) == 4


@pytest.mark.parametrize("m, n, j", [(2, 2, 1), (3, 2, 1)])
def test_annihilator(m, n, j):
    report = annihilator_report(m, n, j, 2)
    assert report.ok, report.failures
    assert report.minors_checked == comb(m, n)
    for row in report.degree_dims:
        assert row["annihilator"] == row["ideal"]


def test_annihilator_dim_of_free_module_is_zero():
    assert annihilator_dim(free_presentation(4, (0, 0)), 2) == 0


def test_non_minor_form_does_not_annihilate():
    rng = random.Random(5)
    for m, n in [(2, 2), (3, 2)]:
        P = presentation_W(m, n, 1)
        g = random_form(m * n, n, rng)
        # a random quadric is not a combination of the minors
        assert minor_ideal_dim(m, n, n) < comb(m * n + n - 1, n)
        assert multiplier_witness(P, g, n, 2) == 0
        for _, minor in maximal_minors(m, n):
            assert multiplier_witness(P, minor, n, 2) is None
