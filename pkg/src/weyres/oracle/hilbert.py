"""Hilbert functions of presented modules by degree-wise linear algebra."""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .linalg import DEFAULT_PRIME, sparse_rank
from .presentation import GradedPresentation, Poly, monomial_index, monomials, mono_mul


@dataclass
class DegreeBlock:
    """Degree-D piece of the target free module and the image of the relations."""

    degree: int
    offsets: list[int]
    nrows: int
    columns: list[dict[int, int]]

    def row(self, P: GradedPresentation, i: int, mono: tuple[int, ...]) -> int:
        return self.offsets[i] + monomial_index(P.num_vars, self.degree - P.target_degrees[i])[mono]


def _offsets(P: GradedPresentation, D: int) -> tuple[list[int], int]:
    offsets, total = [], 0
    for t in P.target_degrees:
        offsets.append(total)
        total += len(monomials(P.num_vars, D - t))
    return offsets, total


def degree_block(P: GradedPresentation, D: int) -> DegreeBlock:
    nv = P.num_vars
    offsets, nrows = _offsets(P, D)
    cols = []
    for jcol, col in enumerate(P.columns):
        for mono in monomials(nv, D - P.source_degrees[jcol]):
            vec: dict[int, int] = {}
            for i, p in col.items():
                idx = monomial_index(nv, D - P.target_degrees[i])
                for e, c in p.items():
                    r = offsets[i] + idx[mono_mul(e, mono)]
                    v = vec.get(r, 0) + c
                    if v:
                        vec[r] = v
                    else:
                        vec.pop(r, None)
            if vec:
                cols.append(vec)
    return DegreeBlock(D, offsets, nrows, cols)


def multiply_targets(P: GradedPresentation, g: Poly, g_deg: int, d: int) -> list[dict[int, int]]:
    """g * (monomial * e_i) for every basis element of the degree-d target piece."""
    nv = P.num_vars
    D = d + g_deg
    offsets, _ = _offsets(P, D)
    out = []
    for i, t in enumerate(P.target_degrees):
        idx = monomial_index(nv, D - t)
        for mono in monomials(nv, d - t):
            vec = {}
            for e, c in g.items():
                r = offsets[i] + idx[mono_mul(e, mono)]
                vec[r] = vec.get(r, 0) + c
            out.append({r: v for r, v in vec.items() if v})
    return out


def hilbert_value(P: GradedPresentation, d: int, prime: int | None = DEFAULT_PRIME) -> int:
    block = degree_block(P, d)
    return block.nrows - sparse_rank(block.columns, prime)


def _value(args):
    P, d, prime = args
    return hilbert_value(P, d, prime)


def hilbert_function(P: GradedPresentation, d_max: int, prime: int | None = DEFAULT_PRIME, workers: int = 1) -> list[int]:
    """h(0..d_max) of coker P; ``prime=None`` computes ranks over Q."""
    if d_max < 0:
        raise ValueError("d_max must be nonnegative")
    jobs = [(P, d, prime) for d in range(d_max + 1)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            return list(ex.map(_value, jobs))
    return [_value(job) for job in jobs]
