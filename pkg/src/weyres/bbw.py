"""Bott-Borel-Weil on the Grassmannian Gr(r, m).

A homogeneous bundle is written ``[u_part; q_part]`` with ``u_part`` of length
r and ``q_part`` of length m - r, each block weakly decreasing.  The block
``[mu; nu]`` stands for S^mu U^dual (x) S^nu Q^dual, so U itself is
``[0,...,0,-1; 0,...,0]`` and O(-1) is ``[a,...,a; a+1,...,a+1]``.

Cohomology comes out as a representation S^w of the *dual* space (C^m)^dual;
callers that need C^m-weights dualize themselves.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .partitions import Weight, check_weight
from .schur import dim_schur


@dataclass(frozen=True)
class GrassmannianBundleWeight:
    u_part: Weight
    q_part: Weight
    r: int
    m: int

    def __post_init__(self):
        if len(self.u_part) != self.r or len(self.q_part) != self.m - self.r:
            raise ValueError(
                f"block lengths ({len(self.u_part)}, {len(self.q_part)}) "
                f"do not match r={self.r}, m-r={self.m - self.r}"
            )
        check_weight(self.u_part)
        check_weight(self.q_part)

    @classmethod
    def of(cls, u_part: Sequence[int], q_part: Sequence[int]) -> "GrassmannianBundleWeight":
        u, q = tuple(u_part), tuple(q_part)
        return cls(u, q, len(u), len(u) + len(q))

    def concat(self) -> Weight:
        return self.u_part + self.q_part


@dataclass(frozen=True)
class CohomologyResult:
    """Nonzero cohomology H^degree = S^weight (C^m)^dual, or acyclic."""

    degree: int | None
    weight: Weight | None
    dimension: int

    @property
    def acyclic(self) -> bool:
        return self.degree is None

    def to_json(self) -> dict:
        if self.acyclic:
            return {"acyclic": True}
        return {"acyclic": False, "degree": self.degree, "weight": list(self.weight), "dim": self.dimension}


ACYCLIC = CohomologyResult(None, None, 0)


def rho(m: int) -> Weight:
    return tuple(range(m, 0, -1))


def bbw_cohomology(w: GrassmannianBundleWeight) -> CohomologyResult:
    m = w.m
    shifted = [x + d for x, d in zip(w.concat(), rho(m))]
    if len(set(shifted)) < m:
        return ACYCLIC
    inversions = sum(1 for i in range(m) for j in range(i + 1, m) if shifted[i] < shifted[j])
    weight = tuple(x - d for x, d in zip(sorted(shifted, reverse=True), rho(m)))
    return CohomologyResult(inversions, weight, dim_schur(weight, m))
