"""Integer weights, partitions and the index sets feeding the universal complex.

A weight is a plain tuple of ints stored largest-first.  The bracket notation
``[l_{k}, ..., l_1]`` used for GL(k) weights lists subscripts in descending
order, so stored position ``p`` carries subscript ``k - p``.  Use
:func:`bracket_index` to translate when comparing against hand computations.

Partitions (shapes) have trailing zeros stripped; fixed-length GL(k) weights
keep them.  The two are the same data in different roles.
"""
from __future__ import annotations

from itertools import product
from typing import Iterator, Sequence

Weight = tuple[int, ...]


def as_weight(entries: Sequence[int]) -> Weight:
    w = tuple(int(e) for e in entries)
    check_weight(w)
    return w


def check_weight(w: Sequence[int]) -> None:
    for i in range(len(w) - 1):
        if w[i] < w[i + 1]:
            raise ValueError(f"weight {tuple(w)} is not weakly decreasing")


def is_weight(w: Sequence[int]) -> bool:
    return all(w[i] >= w[i + 1] for i in range(len(w) - 1))


def strip(w: Sequence[int]) -> Weight:
    """Drop trailing zeros (partition form)."""
    w = list(w)
    while w and w[-1] == 0:
        w.pop()
    return tuple(w)


def pad(w: Sequence[int], k: int) -> Weight:
    """Pad a partition with zeros to a length-k GL(k) weight."""
    if len(w) > k:
        if any(w[k:]):
            raise ValueError(f"{tuple(w)} has more than {k} nonzero parts")
        return tuple(w[:k])
    return tuple(w) + (0,) * (k - len(w))


def bracket_index(w: Sequence[int], subscript: int) -> int:
    """Entry carrying bracket subscript ``subscript`` (1 = smallest entry)."""
    k = len(w)
    if not 1 <= subscript <= k:
        raise IndexError(subscript)
    return w[k - subscript]


def norm(w: Sequence[int]) -> int:
    return sum(w)


def transpose(mu: Sequence[int]) -> Weight:
    """Conjugate partition: column lengths of the Young diagram."""
    if any(e < 0 for e in mu):
        raise ValueError(f"transpose undefined for negative entries: {tuple(mu)}")
    check_weight(mu)
    if not mu or mu[0] == 0:
        return ()
    return tuple(sum(1 for e in mu if e > c) for c in range(mu[0]))


def partitions(total: int, max_parts: int | None = None, max_part: int | None = None) -> Iterator[Weight]:
    """Partitions of ``total`` in reverse lexicographic order, optionally boxed."""
    if total < 0:
        return
    if max_parts is None:
        max_parts = total
    if max_part is None:
        max_part = total

    def rec(remaining: int, cap: int, slots: int) -> Iterator[Weight]:
        if remaining == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(cap, remaining), 0, -1):
            if first * slots < remaining:
                break
            for rest in rec(remaining - first, first, slots - 1):
                yield (first,) + rest

    yield from rec(total, max_part, max_parts)


def _check_params(n: int, m: int, r: int, j: int) -> None:
    if r != n - 1:
        raise ValueError(f"only r = n - 1 is supported (got n={n}, r={r})")
    if not 0 <= j <= m - r:
        raise ValueError(f"need 0 <= j <= m - r, got j={j}, m-r={m - r}")


def is_in_index_set(lam: Sequence[int], n: int, m: int, r: int, j: int) -> bool:
    """Membership in I_j: the first m-r-j entries lie in [r, n], the last j in [-1, 0]."""
    _check_params(n, m, r, j)
    if len(lam) != m - r:
        raise ValueError(f"expected a weight of length {m - r}, got {tuple(lam)}")
    if not is_weight(lam):
        return False
    big = m - r - j
    return all(r <= e <= n for e in lam[:big]) and all(-1 <= e <= 0 for e in lam[big:])


def lambda_tilde(lam: Sequence[int], r: int, j: int) -> Weight:
    """Shift the top block down by r and splice r zeros between the blocks."""
    big = len(lam) - j
    if big < 0:
        raise ValueError(f"j={j} exceeds the length of {tuple(lam)}")
    out = tuple(e - r for e in lam[:big]) + (0,) * r + tuple(lam[big:])
    if not is_weight(lam) or not is_weight(out):
        raise ValueError(f"{tuple(lam)} is not in I_{j} for r={r}")
    return out


def enumerate_index_set(n: int, m: int, r: int, j: int, target_norm: int) -> list[Weight]:
    """All members of I_j with the given norm, lexicographically sorted."""
    _check_params(n, m, r, j)
    big = m - r - j
    out: list[Weight] = []

    def rec(prefix: list[int], remaining: int) -> None:
        pos = len(prefix)
        if pos == m - r:
            if remaining == 0:
                out.append(tuple(prefix))
            return
        lo, hi = (r, n) if pos < big else (-1, 0)
        if prefix:
            hi = min(hi, prefix[-1])
        later = range(pos + 1, m - r)
        for e in range(lo, hi + 1):
            # later slots are bounded by their block and by e (monotonicity)
            rest_lo = sum(r if q < big else -1 for q in later)
            rest_hi = sum(min(e, n if q < big else 0) for q in later)
            if not rest_lo <= remaining - e <= rest_hi:
                continue
            prefix.append(e)
            rec(prefix, remaining - e)
            prefix.pop()

    rec([], target_norm)
    out.sort()
    return out


def box_weights(length: int, lo: int, hi: int) -> Iterator[Weight]:
    """Every weakly decreasing sequence with entries in [lo, hi]."""
    for w in product(range(hi, lo - 1, -1), repeat=length):
        if is_weight(w):
            yield w
