"""Rank of sparse matrices over F_p or Q.

Matrices are given as a list of sparse columns ``{row: value}`` with integer
values.  Elimination is right-looking with a Markowitz-style pivot choice:
take the shortest live column, and inside it the row touching the fewest
other columns.  This keeps fill-in low on the degree blocks of a
presentation, where each column holds only a handful of variables' worth of
entries.
"""
from __future__ import annotations

import heapq
from fractions import Fraction
from typing import Iterable, Mapping

DEFAULT_PRIME = 2147483647  # 2^31 - 1
ALT_PRIME = 1073741827  # smallest prime above 2^30


def _normalize(columns: Iterable[Mapping[int, int]], prime: int | None) -> dict[int, dict]:
    cols = {}
    for ci, col in enumerate(columns):
        if prime:
            c = {r: v % prime for r, v in col.items() if v % prime}
        else:
            c = {r: Fraction(v) for r, v in col.items() if v}
        if c:
            cols[ci] = c
    return cols


def sparse_rank(columns: Iterable[Mapping[int, int]], prime: int | None = DEFAULT_PRIME) -> int:
    """Rank of the matrix whose columns are given; ``prime=None`` works over Q."""
    cols = _normalize(columns, prime)
    where: dict[int, set[int]] = {}
    for ci, col in cols.items():
        for r in col:
            where.setdefault(r, set()).add(ci)
    heap = [(len(col), ci) for ci, col in cols.items()]
    heapq.heapify(heap)
    rank = 0
    while heap:
        size, ci = heapq.heappop(heap)
        col = cols.get(ci)
        if col is None:
            continue
        if len(col) != size:
            heapq.heappush(heap, (len(col), ci))
            continue
        del cols[ci]
        if not col:
            continue
        pr = min(col, key=lambda r: (len(where[r]), r))
        pv = col[pr]
        for r in col:
            where[r].discard(ci)
        if prime:
            inv = pow(pv, -1, prime)
        for oj in sorted(where.pop(pr)):
            oc = cols[oj]
            if prime:
                f = oc.pop(pr) * inv % prime
            else:
                f = oc.pop(pr) / pv
            for r, v in col.items():
                if r == pr:
                    continue
                x = oc.get(r)
                if x is None:
                    nv = (-f * v) % prime if prime else -f * v
                else:
                    nv = (x - f * v) % prime if prime else x - f * v
                if nv:
                    if x is None:
                        where[r].add(oj)
                    oc[r] = nv
                elif x is not None:
                    del oc[r]
                    where[r].discard(oj)
            heapq.heappush(heap, (len(oc), oj))
        rank += 1
    return rank


def dense_rank(matrix: list[list[int]], prime: int | None = None) -> int:
    """Rank of a small dense integer matrix (rows as lists)."""
    if not matrix:
        return 0
    ncols = len(matrix[0])
    cols = [{i: row[c] for i, row in enumerate(matrix) if row[c]} for c in range(ncols)]
    return sparse_rank(cols, prime)
