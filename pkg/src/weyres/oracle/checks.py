"""Pointwise and ideal-theoretic checks on the presented modules."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import comb
from typing import Sequence

from .hilbert import degree_block, multiply_targets
from .linalg import DEFAULT_PRIME, dense_rank, sparse_rank
from .presentation import (
    GradedPresentation,
    Poly,
    free_presentation,
    maximal_minors,
    monomials,
    point_of,
    presentation_W,
)


def random_corank_one(m: int, n: int, rng: random.Random, bound: int = 3) -> list[list[int]]:
    """An integer m x n matrix of rank exactly n - 1, built as A @ B."""
    r = n - 1
    while True:
        A = [[rng.randint(-bound, bound) for _ in range(r)] for _ in range(m)]
        B = [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(r)]
        f = [[sum(A[k][t] * B[t][i] for t in range(r)) for i in range(n)] for k in range(m)]
        if dense_rank(f, None) == r:
            return f


def fiber_dimension(P: GradedPresentation, point: Sequence[int], prime: int | None = None) -> int:
    """dim of (coker P) (x) k(point): target rank minus rank of the evaluated matrix."""
    return P.target_rank - sparse_rank(P.evaluate(point), prime)


@dataclass
class FiberCheck:
    matrix: list[list[int]]
    fiber_dim: int
    expected: int
    d1_cokernel_dim: int | None = None
    hom_dim: int | None = None

    @property
    def ok(self) -> bool:
        return self.fiber_dim == self.expected and self.d1_cokernel_dim == self.hom_dim

    def to_json(self) -> dict:
        out = {"matrix": self.matrix, "fiber_dim": self.fiber_dim, "expected": self.expected, "ok": self.ok}
        if self.hom_dim is not None:
            out["d1_cokernel_dim"] = self.d1_cokernel_dim
            out["hom_dim"] = self.hom_dim
        return out


def _sl_basis(m: int) -> list[list[tuple[int, int, int]]]:
    # each element as a list of (row, col, coefficient) entries
    basis = [[(a, b, 1)] for a in range(m) for b in range(m) if a != b]
    basis += [[(a, a, 1), (a + 1, a + 1, -1)] for a in range(m - 1)]
    return basis


def fiber_check_j1(m: int, n: int, f: Sequence[Sequence[int]], prime: int | None = None) -> tuple[int, int]:
    """Cokernel of (a, b) -> f o a + b (.) f at f, and dim Hom(Sym^{m-n} ker f, coker f)."""
    rank_f = dense_rank([list(row) for row in f], prime)
    if rank_f != n - 1:
        raise ValueError(f"f has rank {rank_f}, expected {n - 1}")
    d = m - n
    dom_monos = monomials(n, d)
    cod = {(mono, k): i for i, (mono, k) in enumerate((mono, k) for mono in dom_monos for k in range(m))}
    cols: list[dict[int, int]] = []
    # a in Hom(Sym^d C^n, C^n): basis y^mono (x) e_i  ->  y^mono (x) f(e_i)
    for mono in dom_monos:
        for i in range(n):
            cols.append({cod[(mono, k)]: f[k][i] for k in range(m) if f[k][i]})
    # b in Hom(Sym^{d-1} C^n, sl_m): p (x) g  ->  sum_i p*y_i (x) g(f(e_i))
    for mono in monomials(n, d - 1):
        for g in _sl_basis(m):
            vec: dict[int, int] = {}
            for i in range(n):
                target = tuple(e + (1 if t == i else 0) for t, e in enumerate(mono))
                for a, b, c in g:
                    if f[b][i]:
                        row = cod[(target, a)]
                        vec[row] = vec.get(row, 0) + c * f[b][i]
            cols.append({r: v for r, v in vec.items() if v})
    coker_dim = len(cod) - sparse_rank(cols, prime)
    ker_dim = n - rank_f
    hom_dim = comb(ker_dim + d - 1, d) * (m - rank_f)
    return coker_dim, hom_dim


def fiber_checks(m: int, n: int, j: int, trials: int = 10, seed: int = 0, prime: int | None = None) -> list[FiberCheck]:
    """Fiber rank of the presented W_j at random corank-one points (plus the j = 1 check)."""
    rng = random.Random(seed)
    P = presentation_W(m, n, j)
    expected = comb(m - n + 1, j)
    out = []
    for _ in range(trials):
        f = random_corank_one(m, n, rng)
        chk = FiberCheck(f, fiber_dimension(P, point_of(f), prime), expected)
        if j == 1:
            chk.d1_cokernel_dim, chk.hom_dim = fiber_check_j1(m, n, f, prime)
        out.append(chk)
    return out


def multiplier_witness(P: GradedPresentation, g: Poly, g_deg: int, d_max: int, prime: int | None = DEFAULT_PRIME) -> int | None:
    """First degree d <= d_max where g * (coker P)_d is not in the image, else None."""
    for d in range(d_max + 1):
        block = degree_block(P, d + g_deg)
        base = sparse_rank(block.columns, prime)
        extra = multiply_targets(P, g, g_deg, d)
        if sparse_rank(block.columns + extra, prime) != base:
            return d
    return None


def annihilator_dim(P: GradedPresentation, e: int, prime: int | None = DEFAULT_PRIME) -> int:
    """dim of the degree-e forms g with g * e_i in the image for every generator e_i.

    Only valid for presentations generated in degree 0.
    """
    if any(P.target_degrees):
        raise ValueError("annihilator_dim expects generators in degree 0")
    block = degree_block(P, e)
    T = P.target_rank
    N = block.nrows
    # T stacked copies of the image, one per generator, then one column per monomial g
    stacked = [{t * N + r: v for r, v in col.items()} for t in range(T) for col in block.columns]
    gens = []
    for mono in monomials(P.num_vars, e):
        vec = {}
        for i in range(T):
            vec[i * N + block.row(P, i, mono)] = 1
        gens.append(vec)
    base = sparse_rank(stacked, prime)
    return len(gens) - (sparse_rank(stacked + gens, prime) - base)


def minor_ideal_dim(m: int, n: int, e: int, prime: int | None = DEFAULT_PRIME) -> int:
    """dim of the degree-e part of the ideal of maximal minors."""
    nv = m * n
    if e < n:
        return 0
    R = free_presentation(nv)
    cols = []
    for _, g in maximal_minors(m, n):
        cols.extend(multiply_targets(R, g, n, e - n))
    return sparse_rank(cols, prime)


@dataclass
class AnnihilatorReport:
    ok: bool
    minors_checked: int
    failures: list = field(default_factory=list)
    degree_dims: list = field(default_factory=list)

    def __bool__(self):
        return self.ok

    def to_json(self) -> dict:
        return {"ok": self.ok, "minors_checked": self.minors_checked, "failures": self.failures, "degree_dims": self.degree_dims}


def annihilator_report(m: int, n: int, j: int, d_max: int, e_max: int | None = None,
                       prime: int | None = DEFAULT_PRIME) -> AnnihilatorReport:
    """Bounded check that the annihilator of the presented W_j is the maximal-minor ideal.

    Containment of the ideal: every minor maps each degree-d piece (d <= d_max)
    into the image.  Reverse containment: for e <= e_max, the degree-e forms
    killing every generator span exactly the degree-e part of the ideal.
    """
    P = presentation_W(m, n, j)
    failures = []
    minors = maximal_minors(m, n)
    for rows, g in minors:
        w = multiplier_witness(P, g, n, d_max, prime)
        if w is not None:
            failures.append({"rows": list(rows), "degree": w})
    dims = []
    for e in range((n if e_max is None else e_max) + 1):
        ann, ideal = annihilator_dim(P, e, prime), minor_ideal_dim(m, n, e, prime)
        dims.append({"degree": e, "annihilator": ann, "ideal": ideal})
        if ann != ideal:
            failures.append({"reverse": e, "annihilator": ann, "ideal": ideal})
    return AnnihilatorReport(not failures, len(minors), failures, dims)


def annihilator_check(m: int, n: int, j: int, d_max: int, prime: int | None = DEFAULT_PRIME) -> bool:
    return annihilator_report(m, n, j, d_max, prime=prime).ok


def random_form(num_vars: int, degree: int, rng: random.Random, bound: int = 5) -> Poly:
    out = {}
    for mono in monomials(num_vars, degree):
        c = rng.randint(-bound, bound)
        if c:
            out[mono] = c
    return out
