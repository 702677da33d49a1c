from itertools import product

import pytest
from hypothesis import given, strategies as st

from oracles import conjugate
from weyres.partitions import (
    enumerate_index_set,
    is_in_index_set,
    lambda_tilde,
    norm,
    pad,
    bracket_index,
    partitions,
    strip,
    transpose,
)

partition_st = st.lists(st.integers(0, 6), max_size=6).map(lambda xs: tuple(sorted(xs, reverse=True)))


@pytest.mark.parametrize("mu, expected", [((2, 1), (2, 1)), ((3,), (1, 1, 1)), ((2, 2, 1), (3, 2)), ((), ())])
def test_transpose_examples(mu, expected):
    assert transpose(mu) == expected


def test_transpose_rejects_negative():
    with pytest.raises(ValueError):
        transpose((1, -1))


@given(partition_st)
def test_transpose_involution_and_norm(mu):
    t = transpose(mu)
    assert t == conjugate(strip(mu))
    assert transpose(t) == strip(mu)
    assert norm(t) == norm(mu)


@pytest.mark.parametrize("w, expected", [((), 0), ((1, -1), 0), ((2, 2, 1), 5)])
def test_norm(w, expected):
    assert norm(w) == expected


def test_pad_strip_and_bracket_index():
    assert pad((2, 1), 4) == (2, 1, 0, 0)
    assert strip((2, 1, 0, 0)) == (2, 1)
    # stored largest-first: bracket subscript k is position 0
    assert bracket_index((5, 3, 1), 3) == 5
    assert bracket_index((5, 3, 1), 1) == 1


def test_partitions_brute_force():
    for total in range(7):
        got = set(partitions(total, 3, 4))
        want = {strip(p) for p in product(range(5), repeat=3)
                if list(p) == sorted(p, reverse=True) and sum(p) == total}
        assert got == want


@pytest.mark.parametrize(
    "lam, n, m, j, expected",
    [((1, -1), 2, 3, 1, True), ((2, 0), 2, 3, 0, False), ((-1, -1), 2, 3, 2, True)],
)
def test_is_in_index_set_examples(lam, n, m, j, expected):
    assert is_in_index_set(lam, n, m, n - 1, j) is expected


def test_is_in_index_set_length_error():
    with pytest.raises(ValueError):
        is_in_index_set((1, 0, 0), 2, 3, 1, 1)


@pytest.mark.parametrize(
    "lam, j, expected", [((1, -1), 1, (0, 0, -1)), ((1, 1), 0, (0, 0, 0)), ((-1, -1), 2, (0, -1, -1))]
)
def test_lambda_tilde_examples(lam, j, expected):
    assert lambda_tilde(lam, 1, j) == expected


@pytest.mark.parametrize(
    "n, m, j, t, expected",
    [(2, 3, 1, 1, [(1, 0), (2, -1)]), (2, 2, 1, -1, [(-1,)]), (2, 3, 0, 4, [(2, 2)])],
)
def test_enumerate_index_set_examples(n, m, j, t, expected):
    assert enumerate_index_set(n, m, n - 1, j, t) == expected


def test_enumerate_index_set_matches_box_scan():
    for m in range(2, 7):
        for n in range(2, m + 1):
            r = n - 1
            c = m - r
            for j in range(c + 1):
                box = [lam for lam in product(range(-1, n + 1), repeat=c)
                       if list(lam) == sorted(lam, reverse=True) and is_in_index_set(lam, n, m, r, j)]
                for t in range(-c, c * n + 1):
                    want = sorted(lam for lam in box if sum(lam) == t)
                    assert enumerate_index_set(n, m, r, j, t) == want
                    for lam in want:
                        tilde = lambda_tilde(lam, r, j)
                        assert list(tilde) == sorted(tilde, reverse=True)
