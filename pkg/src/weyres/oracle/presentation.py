"""Graded presentations over the coordinate ring of the m x n matrices.

Polynomials are dicts ``{exponent tuple: int}``.  A presentation lists the
degrees of the target generators and of the relations, plus one sparse
column per relation ``{target index: polynomial}``; the presented module is
the cokernel.  Entry (i, j) must be homogeneous of degree
``source_degrees[j] - target_degrees[i]``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, permutations
from math import comb
from typing import Sequence

Poly = dict  # exponent tuple -> int


@lru_cache(maxsize=None)
def monomials(num_vars: int, d: int) -> tuple[tuple[int, ...], ...]:
    """Degree-d monomials as exponent vectors, lexicographically ordered."""
    if d < 0:
        return ()
    out = []
    for combo in combinations_with_replacement(range(num_vars), d):
        e = [0] * num_vars
        for v in combo:
            e[v] += 1
        out.append(tuple(e))
    return tuple(sorted(out, reverse=True))


@lru_cache(maxsize=None)
def monomial_index(num_vars: int, d: int) -> dict:
    return {mono: i for i, mono in enumerate(monomials(num_vars, d))}


def var(num_vars: int, i: int) -> tuple[int, ...]:
    e = [0] * num_vars
    e[i] = 1
    return tuple(e)


def mono_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x + y for x, y in zip(a, b))


def poly_add(acc: Poly, p: Poly, scale: int = 1) -> None:
    for mono, c in p.items():
        v = acc.get(mono, 0) + scale * c
        if v:
            acc[mono] = v
        else:
            acc.pop(mono, None)


def poly_mul(p: Poly, q: Poly) -> Poly:
    out: Poly = {}
    for a, x in p.items():
        for b, y in q.items():
            poly_add(out, {mono_mul(a, b): x * y})
    return out


def poly_degree(p: Poly) -> int | None:
    degs = {sum(mono) for mono in p}
    if len(degs) > 1:
        raise ValueError("polynomial is not homogeneous")
    return degs.pop() if degs else None


def poly_eval(p: Poly, point: Sequence[int]) -> int:
    total = 0
    for mono, c in p.items():
        t = c
        for x, e in zip(point, mono):
            if e:
                t *= x**e
        total += t
    return total


@dataclass
class GradedPresentation:
    num_vars: int
    target_degrees: tuple[int, ...]
    source_degrees: tuple[int, ...]
    columns: list[dict[int, Poly]]
    labels: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        self.target_degrees = tuple(self.target_degrees)
        self.source_degrees = tuple(self.source_degrees)
        if len(self.columns) != len(self.source_degrees):
            raise ValueError("one column per relation expected")
        for jcol, col in enumerate(self.columns):
            for i, p in col.items():
                d = poly_degree(p)
                if d is not None and d != self.source_degrees[jcol] - self.target_degrees[i]:
                    raise ValueError(f"entry ({i}, {jcol}) has degree {d}, expected "
                                     f"{self.source_degrees[jcol] - self.target_degrees[i]}")

    @property
    def target_rank(self) -> int:
        return len(self.target_degrees)

    @property
    def source_rank(self) -> int:
        return len(self.source_degrees)

    def entry(self, i: int, j: int) -> Poly:
        return self.columns[j].get(i, {})

    def evaluate(self, point: Sequence[int]) -> list[dict[int, int]]:
        """Numeric columns of the matrix at a point of affine space."""
        out = []
        for col in self.columns:
            c = {}
            for i, p in col.items():
                v = poly_eval(p, point)
                if v:
                    c[i] = v
            out.append(c)
        return out


def _col(entries: dict[int, Poly]) -> dict[int, Poly]:
    return {i: p for i, p in entries.items() if p}


def free_presentation(num_vars: int, degrees: Sequence[int] = (0,)) -> GradedPresentation:
    return GradedPresentation(num_vars, tuple(degrees), (), [])


def tautological_matrix(m: int, n: int) -> list[list[Poly]]:
    """Generic m x n matrix: entry (k, i) is the variable x_{k,i} (index k*n + i)."""
    nv = m * n
    return [[{var(nv, k * n + i): 1} for i in range(n)] for k in range(m)]


def point_of(f: Sequence[Sequence[int]]) -> list[int]:
    """Coordinates of a numeric matrix in the variable order of tautological_matrix."""
    return [x for row in f for x in row]


def presentation_coker(m: int, n: int) -> GradedPresentation:
    """coKer: C^n (x) R(-1) -> C^m (x) R via the generic matrix."""
    t = tautological_matrix(m, n)
    cols = [_col({k: t[k][i] for k in range(m)}) for i in range(n)]
    return GradedPresentation(m * n, (0,) * m, (1,) * n, cols, {"name": f"coKer({m},{n})"})


def presentation_K(m: int, n: int) -> GradedPresentation:
    """K: the transpose map (C^m)^dual (x) R(-1) -> (C^n)^dual (x) R."""
    t = tautological_matrix(m, n)
    cols = [_col({i: t[k][i] for i in range(n)}) for k in range(m)]
    return GradedPresentation(m * n, (0,) * n, (1,) * m, cols, {"name": f"K({m},{n})"})


def presentation_sym(P: GradedPresentation, k: int) -> GradedPresentation:
    """Sym^k(coker P): target Sym^k N, relations Sym^{k-1} N . M."""
    if k < 1:
        raise ValueError("k >= 1 required")
    if k == 1:
        return P
    T = P.target_rank
    tgt = list(combinations_with_replacement(range(T), k))
    tindex = {s: i for i, s in enumerate(tgt)}
    tdeg = [sum(P.target_degrees[a] for a in s) for s in tgt]
    sdeg, cols = [], []
    for s in combinations_with_replacement(range(T), k - 1):
        base = sum(P.target_degrees[a] for a in s)
        for jcol, col in enumerate(P.columns):
            entries: dict[int, Poly] = {}
            for i, p in col.items():
                row = tindex[tuple(sorted(s + (i,)))]
                poly_add(entries.setdefault(row, {}), p)
            cols.append(_col(entries))
            sdeg.append(base + P.source_degrees[jcol])
    return GradedPresentation(P.num_vars, tdeg, sdeg, cols, {"name": f"Sym^{k}"})


def _wedge_sign(s: tuple[int, ...], i: int) -> int:
    return -1 if sum(1 for t in s if t > i) % 2 else 1


def presentation_ext(P: GradedPresentation, k: int) -> GradedPresentation:
    """wedge^k(coker P): target wedge^k N, relations wedge^{k-1} N ^ M."""
    if k < 1:
        raise ValueError("k >= 1 required")
    if k == 1:
        return P
    T = P.target_rank
    tgt = list(combinations(range(T), k))
    tindex = {s: i for i, s in enumerate(tgt)}
    tdeg = [sum(P.target_degrees[a] for a in s) for s in tgt]
    sdeg, cols = [], []
    for s in combinations(range(T), k - 1):
        base = sum(P.target_degrees[a] for a in s)
        for jcol, col in enumerate(P.columns):
            entries: dict[int, Poly] = {}
            for i, p in col.items():
                if i in s:
                    continue
                row = tindex[tuple(sorted(s + (i,)))]
                poly_add(entries.setdefault(row, {}), p, _wedge_sign(s, i))
            cols.append(_col(entries))
            sdeg.append(base + P.source_degrees[jcol])
    return GradedPresentation(P.num_vars, tdeg, sdeg, cols, {"name": f"Ext^{k}"})


def presentation_tensor(P: GradedPresentation, Q: GradedPresentation) -> GradedPresentation:
    """coker P (x) coker Q: relations (M_P (x) N_Q) + (N_P (x) M_Q)."""
    if P.num_vars != Q.num_vars:
        raise ValueError("presentations live over different rings")
    TQ = Q.target_rank
    tdeg = [a + b for a in P.target_degrees for b in Q.target_degrees]
    sdeg, cols = [], []
    for jcol, col in enumerate(P.columns):
        for b in range(TQ):
            cols.append({a * TQ + b: p for a, p in col.items()})
            sdeg.append(P.source_degrees[jcol] + Q.target_degrees[b])
    for a in range(P.target_rank):
        for jcol, col in enumerate(Q.columns):
            cols.append({a * TQ + b: p for b, p in col.items()})
            sdeg.append(P.target_degrees[a] + Q.source_degrees[jcol])
    return GradedPresentation(P.num_vars, tdeg, sdeg, cols, {"name": "tensor"})


def presentation_power(P: GradedPresentation, k: int, kind: str) -> GradedPresentation:
    if k == 0:
        return free_presentation(P.num_vars)
    return presentation_sym(P, k) if kind == "sym" else presentation_ext(P, k)


def presentation_W(m: int, n: int, j: int) -> GradedPresentation:
    """Sym^{c-j} K (x) wedge^j coKer with c = m - n + 1, generated in degree 0."""
    c = m - n + 1
    if not 0 <= j <= c:
        raise ValueError(f"need 0 <= j <= {c}")
    left = presentation_power(presentation_K(m, n), c - j, "sym")
    right = presentation_power(presentation_coker(m, n), j, "ext")
    out = presentation_tensor(left, right)
    out.labels = {"name": f"Sym^{c - j}K (x) Ext^{j}coKer", "m": m, "n": n, "j": j}
    return out


def determinant(matrix: list[list[Poly]]) -> Poly:
    """Leibniz expansion; fine for the small minors needed here."""
    k = len(matrix)
    out: Poly = {}
    for perm in permutations(range(k)):
        inv = sum(1 for a in range(k) for b in range(a + 1, k) if perm[a] > perm[b])
        term: Poly = {tuple([0] * len(next(iter(matrix[0][0])))): 1}
        for row in range(k):
            term = poly_mul(term, matrix[row][perm[row]])
        poly_add(out, term, -1 if inv % 2 else 1)
    return out


def maximal_minors(m: int, n: int) -> list[tuple[tuple[int, ...], Poly]]:
    """(row subset, det) for every n x n minor of the generic m x n matrix."""
    t = tautological_matrix(m, n)
    return [(rows, determinant([t[k] for k in rows])) for rows in combinations(range(m), n)]


def free_hilbert(num_vars: int, degrees: Sequence[int], d: int) -> int:
    return sum(comb(d - a + num_vars - 1, num_vars - 1) for a in degrees if d >= a)
