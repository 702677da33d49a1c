"""Schur functor dimensions, weight multiplicities and the exterior Pieri rule."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .partitions import Weight, check_weight, is_weight, partitions, strip, transpose


@dataclass(frozen=True, order=True)
class SchurTerm:
    weight: Weight
    multiplicity: int
    dimension: int


def dim_schur(lam: Sequence[int], k: int) -> int:
    """Weyl dimension of the GL(k) irreducible with highest weight ``lam``.

    A short partition (all entries >= 0) is padded with zeros.
    """
    if len(lam) < k and all(x >= 0 for x in lam):
        lam = tuple(lam) + (0,) * (k - len(lam))
    if len(lam) != k:
        raise ValueError(f"weight {tuple(lam)} does not have length {k}")
    check_weight(lam)
    num = den = 1
    for i in range(k):
        for j in range(i + 1, k):
            num *= lam[i] - lam[j] + j - i
            den *= j - i
    q, rem = divmod(num, den)
    assert rem == 0
    return q


def dim_partition(mu: Sequence[int], k: int) -> int:
    """dim S^mu C^k for a partition; zero when mu has more than k parts."""
    mu = strip(mu)
    if len(mu) > k:
        return 0
    return dim_schur(tuple(mu) + (0,) * (k - len(mu)), k)


@lru_cache(maxsize=None)
def _kostka(shape: Weight, content: Weight) -> int:
    # peel off the boxes labelled with the last letter: a horizontal strip
    if not content:
        return 1 if not shape else 0
    if sum(shape) != sum(content):
        return 0
    last = content[-1]
    rest = content[:-1]
    if len(shape) > len(content):
        return 0
    total = 0
    k = len(shape)

    def rec(i: int, left: int, inner: list[int]) -> None:
        nonlocal total
        if i == k:
            if left == 0:
                total += _kostka(strip(inner), rest)
            return
        lo = shape[i + 1] if i + 1 < k else 0
        for v in range(shape[i], lo - 1, -1):
            taken = shape[i] - v
            if taken > left:
                break
            inner.append(v)
            rec(i + 1, left - taken, inner)
            inner.pop()

    rec(0, last, [])
    return total


def kostka(shape: Sequence[int], content: Sequence[int]) -> int:
    """Number of SSYT of the given shape and content."""
    if any(c < 0 for c in content):
        return 0
    return _kostka(strip(shape), tuple(content))


def weight_multiplicity(lam: Sequence[int], alpha: Sequence[int]) -> int:
    """Multiplicity of the weight ``alpha`` in the GL(k) irreducible ``lam``."""
    if len(lam) != len(alpha):
        raise ValueError("weight and content must have the same length")
    check_weight(lam)
    if sum(lam) != sum(alpha):
        raise ValueError(f"norm mismatch: |{tuple(lam)}| != |{tuple(alpha)}|")
    if not lam:
        return 1
    shift = lam[-1]
    return kostka(tuple(e - shift for e in lam), tuple(a - shift for a in alpha))


def exterior_power_tensor(p: int, dim_a: int, dim_b: int) -> list[tuple[Weight, Weight, int]]:
    """Index set of wedge^p(A (x) B) = sum S^mu A (x) S^{mu^t} B."""
    if p < 0 or p > dim_a * dim_b:
        return []
    return [(mu, transpose(mu), 1) for mu in partitions(p, dim_a, dim_b)]


def pieri_exterior(lam: Sequence[int], j: int) -> list[Weight]:
    """Weights mu with S^mu inside S^lam (x) wedge^j: add one box to j distinct entries."""
    lam = tuple(lam)
    check_weight(lam)
    k = len(lam)
    if not 0 <= j <= k:
        return []
    out = []
    for idx in combinations(range(k), j):
        mu = list(lam)
        for i in idx:
            mu[i] += 1
        if is_weight(mu):
            out.append(tuple(mu))
    return sorted(out, reverse=True)


def c_tilde(lam: Sequence[int], j: int, mu: Sequence[int]) -> int:
    mu = tuple(mu)
    if mu and mu[-1] < 0:
        return 0
    return 1 if mu in pieri_exterior(lam, j) else 0


def pieri_terms(lam: Sequence[int], j: int) -> list[SchurTerm]:
    k = len(lam)
    return [SchurTerm(mu, 1, dim_schur(mu, k)) for mu in pieri_exterior(lam, j)]
