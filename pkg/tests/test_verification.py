from math import comb

import pytest
import sympy

from weyres.resolution import GradedBettiTable, all_cases, build_universal_complex, relativize_split
from weyres.verification import (
    KPolynomial,
    acm_certificate,
    hilbert_prediction,
    k_polynomial,
    multiplicity,
    shift_k,
    ulrich_certificate,
)

CASES = list(all_cases(6))


def test_k_polynomial_examples():
    assert k_polynomial(build_universal_complex(2, 2, 1)) == {0: 2, 1: -2}
    assert k_polynomial(build_universal_complex(3, 2, 1)) == {1: 6, 2: -12, 3: 6}


@pytest.mark.parametrize("m, n, j", CASES)
def test_k_vanishes_at_one_to_codim_order(m, n, j):
    kp = k_polynomial(build_universal_complex(m, n, j))
    assert kp(1) == 0
    assert kp.order_at_one() == m - n + 1
    # same thing by sympy
    t = sympy.Symbol("t")
    poly = sum(c * t**e for e, c in kp.items())
    assert sympy.roots(sympy.Poly(poly, t)).get(1, 0) == m - n + 1


def test_hilbert_prediction_against_series():
    t = sympy.Symbol("t")
    for m, n, j in [(2, 2, 1), (3, 2, 2), (3, 2, 0), (4, 3, 1)]:
        kp = k_polynomial(build_universal_complex(m, n, j))
        N = m * n
        series = sympy.series(sum(c * t**e for e, c in kp.items()) / (1 - t) ** N, t, 0, 8).removeO()
        want = [int(series.coeff(t, d)) for d in range(8)]
        assert hilbert_prediction(kp, N, 7) == want


def test_hilbert_prediction_examples():
    assert hilbert_prediction(build_universal_complex(2, 2, 1), 4, 3) == [2, 6, 12, 20]
    assert hilbert_prediction(build_universal_complex(3, 2, 2), 6, 2) == [3, 12, 30]
    with pytest.raises(ValueError):
        hilbert_prediction(KPolynomial({-1: 1}), 2, 2)


def test_shift_k():
    kp = k_polynomial(build_universal_complex(3, 2, 1))
    assert shift_k(kp, 1) == {0: 6, 1: -12, 2: 6}


@pytest.mark.parametrize("m, n, j", CASES)
def test_multiplicity_is_rank_times_degree(m, n, j):
    kp = k_polynomial(build_universal_complex(m, n, j))
    c = m - n + 1
    assert multiplicity(kp, c) == comb(c, j) * comb(m, n - 1)


def test_acm_examples():
    lin = relativize_split(3, 2, 1, (-1, -1), (0, 0, 0), 4)
    assert acm_certificate(lin, 2)
    assert acm_certificate(relativize_split(4, 3, 0, (-1,) * 3, (0,) * 4, 4), 2)
    bad = GradedBettiTable()
    bad.add(0, 0, 2)
    bad.add(1, -1, 2)
    cert = acm_certificate(bad, 2)
    assert not cert and cert.reason == "length mismatch"
    degenerate = relativize_split(3, 2, 1, (0, 0), (0, 0, 0), 4)
    assert not acm_certificate(degenerate, 2)


@pytest.mark.parametrize(
    "m, n, j, l, twist, ranks, rank_sheaf, deg, h0",
    [
        (3, 2, 1, 4, 1, [6, 12, 6], 2, 3, 6),
        (3, 2, 0, 4, 2, [3, 6, 3], 1, 3, 3),
        (2, 2, 1, 3, 0, [2, 2], 1, 2, 2),
    ],
)
def test_ulrich_examples(m, n, j, l, twist, ranks, rank_sheaf, deg, h0):
    cert = ulrich_certificate(m, n, j, l)
    assert cert.initializing_twist == twist
    assert cert.ranks == ranks
    assert (cert.rank_sheaf, cert.degree_locus, cert.h0) == (rank_sheaf, deg, h0)
    assert cert.is_linear and cert.is_ulrich


def test_ulrich_needs_expected_codimension():
    with pytest.raises(ValueError, match="not expected codimension"):
        ulrich_certificate(3, 2, 1, 1)


@pytest.mark.parametrize("m, n, j", CASES)
def test_ulrich_everywhere(m, n, j):
    c = m - n + 1
    cert = ulrich_certificate(m, n, j, c + 1)
    assert cert.is_ulrich
    assert cert.degree_locus == comb(m, n - 1)
    assert cert.initializing_twist == (n - 1) * (c - j)
    assert cert.twists_agree == (j == 1)
    assert cert.h0 == comb(c - j + n - 1, n - 1) * comb(m, j)
