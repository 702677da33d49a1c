"""Equivariant resolutions of W_j = Sym^{m-r-j} K (x) wedge^j coKer, r = n - 1.

Two independent constructions are provided.  ``build_universal_complex``
writes the terms down from the index set I_j and the exterior Pieri rule.
``build_complex_via_bbw`` pushes the Koszul complex forward from Gr(r, m),
running Bott-Borel-Weil on every summand of wedge^p(C^n (x) Q^dual) (x) W_j.
Both must agree term for term.

Conventions for a ComplexTerm: ``gl_n`` is a partition giving S^{gl_n} C^n,
``gl_m`` is a length-m weight giving S^{gl_m} (C^m)^dual, and ``twist`` is the
exponent of O(.) on the matrix space.  The det(C^n)^{m-r-j} factor that
identifies the resolved module is already part of ``gl_n``; the complex
records the exponent once as ``det_power``.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, Sequence

from .bbw import GrassmannianBundleWeight, bbw_cohomology
from .partitions import (
    Weight,
    enumerate_index_set,
    is_weight,
    lambda_tilde,
    pad,
    strip,
    transpose,
)
from .schur import c_tilde, dim_partition, dim_schur, exterior_power_tensor, pieri_exterior, weight_multiplicity


@dataclass(frozen=True, order=True)
class ComplexTerm:
    gl_n: Weight
    gl_m: Weight
    twist: int
    dim: int


@dataclass
class EquivariantComplex:
    m: int
    n: int
    j: int
    terms: dict[int, Counter] = field(default_factory=dict)

    @property
    def r(self) -> int:
        return self.n - 1

    @property
    def codim(self) -> int:
        return self.m - self.r

    @property
    def det_power(self) -> int:
        return self.m - self.r - self.j

    def add(self, u: int, term: ComplexTerm, mult: int = 1) -> None:
        if term.dim <= 0:
            return
        self.terms.setdefault(u, Counter())[term] += mult

    def degrees(self) -> list[int]:
        return sorted(u for u, ts in self.terms.items() if ts)

    def rank(self, u: int) -> int:
        return sum(t.dim * k for t, k in self.terms.get(u, {}).items())

    def ranks(self) -> list[int]:
        top = max(self.degrees(), default=-1)
        return [self.rank(u) for u in range(top + 1)]

    def twists(self, u: int) -> set[int]:
        return {t.twist for t in self.terms.get(u, {})}

    def records(self) -> list[dict]:
        rows = []
        for u in self.degrees():
            for t, k in sorted(self.terms[u].items()):
                rows.append({"u": u, "twist": t.twist, "gl_n": list(t.gl_n), "gl_m": list(t.gl_m), "dim": t.dim, "mult": k})
        return rows

    def betti(self) -> "GradedBettiTable":
        table = GradedBettiTable()
        for u in self.degrees():
            for t, k in self.terms[u].items():
                table.add(u, t.twist, t.dim * k)
        return table

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "j": self.j,
            "det_power": self.det_power,
            "terms": self.records(),
            "betti": self.betti().records(),
        }

    def __eq__(self, other):
        if not isinstance(other, EquivariantComplex):
            return NotImplemented
        return (self.m, self.n, self.j) == (other.m, other.n, other.j) and self.records() == other.records()


@dataclass
class GradedBettiTable:
    """(homological degree u, twist) -> rank; the summand is O(twist)^rank."""

    entries: dict[tuple[int, int], int] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    def add(self, u: int, deg: int, rank: int) -> None:
        if rank:
            self.entries[(u, deg)] = self.entries.get((u, deg), 0) + rank

    def length(self) -> int:
        return max((u for u, _ in self.entries), default=-1)

    def ranks(self) -> list[int]:
        out = [0] * (self.length() + 1)
        for (u, _), k in self.entries.items():
            out[u] += k
        return out

    def degrees_at(self, u: int) -> list[int]:
        return sorted(d for (v, d) in self.entries if v == u)

    def shifted(self, t: int) -> "GradedBettiTable":
        return GradedBettiTable({(u, d + t): k for (u, d), k in self.entries.items()}, list(self.notes))

    def records(self) -> list[dict]:
        return [{"u": u, "deg": d, "rank": k} for (u, d), k in sorted(self.entries.items())]

    def to_json(self) -> dict:
        return {"betti": self.records(), "notes": list(self.notes)}


def check_params(m: int, n: int, j: int) -> None:
    if not 2 <= n <= m:
        raise ValueError(f"need 2 <= n <= m, got m={m}, n={n}")
    if not 0 <= j <= m - n + 1:
        raise ValueError(f"need 0 <= j <= m - n + 1, got j={j}")


def build_universal_complex(m: int, n: int, j: int) -> EquivariantComplex:
    check_params(m, n, j)
    r = n - 1
    c = m - r
    cx = EquivariantComplex(m, n, j)
    for u in range(c + 1):
        twist = -u - r * (c - j)
        for lam in enumerate_index_set(n, m, r, j, u + r * (c - j) - j):
            lt = lambda_tilde(lam, r, j)
            dim_m = dim_schur(lt, m)
            for mu in pieri_exterior(lam, j):
                if not c_tilde(lam, j, mu):
                    continue
                mu_t = transpose(mu)
                cx.add(u, ComplexTerm(mu_t, lt, twist, dim_partition(mu_t, n) * dim_m))
    return cx


def _dual_strip(mu: Sequence[int], j: int) -> list[Weight]:
    # S^mu Q^dual (x) wedge^j Q: remove one box from j distinct entries
    neg = tuple(-e for e in reversed(mu))
    return [tuple(-e for e in reversed(nu)) for nu in pieri_exterior(neg, j)]


def bbw_contributions(m: int, n: int, j: int) -> Iterator[tuple[int, Weight, Weight, object]]:
    """(p, mu, lam, H) for every summand of wedge^p xi^dual (x) W_j on Gr(r, m)."""
    check_params(m, n, j)
    r = n - 1
    c = m - r
    for p in range(n * c + 1):
        for nu, mu, _ in exterior_power_tensor(p, n, c):
            # nu is the C^n side, mu the Q^dual side (at most c parts, entries <= n)
            for lam in _dual_strip(pad(mu, c), j):
                w = GrassmannianBundleWeight((-(c - j),) * r, lam, r, m)
                yield p, nu, lam, bbw_cohomology(w)


def build_complex_via_bbw(m: int, n: int, j: int) -> EquivariantComplex:
    cx = EquivariantComplex(m, n, j)
    for p, nu, _lam, h in bbw_contributions(m, n, j):
        if h.acyclic:
            continue
        u = p - h.degree  # F_{l - p} sits in homological degree p - l
        cx.add(u, ComplexTerm(strip(nu), h.weight, -p, dim_partition(nu, n) * h.dimension))
    return cx


# -- closed forms for the first terms ---------------------------------------

def _dual(w: Sequence[int]) -> Weight:
    return tuple(-e for e in reversed(w))


def sym_weight(d: int, k: int) -> Weight | None:
    if d < 0:
        return None
    return (d,) + (0,) * (k - 1)


def ext_weight(i: int, k: int) -> Weight | None:
    if not 0 <= i <= k:
        return None
    return (1,) * i + (0,) * (k - i)


def hom_term(src_n: Weight | None, tgt_m: Weight | None, det_power: int, twist: int, n: int, m: int) -> ComplexTerm | None:
    """det(C^n)^k (x) Hom(S^src C^n, S^tgt C^m) as a ComplexTerm, None if zero."""
    if src_n is None or tgt_m is None:
        return None
    if not (is_weight(src_n) and is_weight(tgt_m)):
        return None
    gl_n = tuple(e + det_power for e in _dual(src_n))
    gl_m = _dual(tgt_m)
    if gl_n and gl_n[-1] < 0:
        raise ValueError(f"gl_n weight {gl_n} is not polynomial")
    dim = dim_schur(gl_n, n) * dim_schur(gl_m, m)
    if dim == 0:
        return None
    return ComplexTerm(strip(gl_n), gl_m, twist, dim)


def closed_form_first_terms(m: int, n: int, j: int) -> tuple[Counter, Counter]:
    """Expected F_0 and F_{-1} from the Hom descriptions of the first two terms."""
    check_params(m, n, j)
    r = n - 1
    k = m - r - j
    t0 = -r * k
    f0, f1 = Counter(), Counter()
    term = hom_term(sym_weight(k, n), ext_weight(j, m), k, t0, n, m)
    if term:
        f0[term] += 1
    hook_n = (k,) + (0,) * (n - 2) + (-1,)
    hook_m = (1,) * j + (0,) * (m - j - 1) + (-1,) if j <= m - 1 else None
    for src, tgt in (
        (sym_weight(k - 1, n), ext_weight(j - 1, m)),
        (hook_n, ext_weight(j - 1, m)),
        (sym_weight(k - 1, n), hook_m),
    ):
        term = hom_term(src, tgt, k, t0 - 1, n, m)
        if term:
            f1[term] += 1
    return f0, f1


def j1_closed_form(m: int, n: int) -> EquivariantComplex:
    """The j = 1 complex from its three explicit families."""
    check_params(m, n, 1)
    r = n - 1
    c = m - r
    cx = EquivariantComplex(m, n, 1)
    for u in range(c + 1):
        twist = -r * c + r - u
        head = (c - 1,) * (n - 1)
        fams = [
            (head + (u,), (1,) * u + (0,) * (m - u - 1) + (-1,)),
            (head + (u,), (1,) * (u - 1) + (0,) * (m - u + 1) if u >= 1 else None),
            ((c,) + (c - 1,) * (n - 2) + (u - 1,), (1,) * (u - 1) + (0,) * (m - u + 1) if u >= 1 else None),
        ]
        for gl_n, gl_m in fams:
            if gl_m is None or len(gl_m) != m or not is_weight(gl_n) or not is_weight(gl_m):
                continue
            if gl_n[-1] < 0:
                continue
            dim = dim_schur(gl_n, n) * dim_schur(gl_m, m)
            cx.add(u, ComplexTerm(strip(gl_n), gl_m, twist, dim))
    return cx


# -- relativization to split bundles on projective space --------------------

@lru_cache(maxsize=None)
def weights_of(lam: Weight) -> tuple[tuple[Weight, int], ...]:
    """All (alpha, multiplicity) in the GL(len(lam)) irreducible of highest weight lam."""
    k = len(lam)
    if k == 0:
        return (((), 1),)
    lo, hi, total = lam[-1], lam[0], sum(lam)
    out = []
    for alpha in product(range(lo, hi + 1), repeat=k):
        if sum(alpha) != total:
            continue
        mult = weight_multiplicity(lam, alpha)
        if mult:
            out.append((alpha, mult))
    return tuple(out)


def split_expansion(gl_n: Weight, gl_m: Weight, a: Sequence[int], b: Sequence[int]) -> Counter:
    """S^{gl_n} E_1 (x) S^{gl_m} E_2^dual as twist -> rank for split E_1, E_2."""
    n, m = len(a), len(b)
    out: Counter = Counter()
    first = Counter()
    for alpha, k in weights_of(pad(gl_n, n)):
        first[sum(x * y for x, y in zip(alpha, a))] += k
    for beta, k in weights_of(tuple(gl_m)):
        s = -sum(x * y for x, y in zip(beta, b))
        for d1, k1 in first.items():
            out[d1 + s] += k1 * k
    return out


def entry_degrees(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Degrees of the matrix entries of a section of Hom(E_1, E_2)."""
    return [bk - ai for bk in b for ai in a]


def relativize_split(m: int, n: int, j: int, a: Sequence[int], b: Sequence[int], l: int) -> GradedBettiTable:
    """Betti table of the resolution of W_j for E_1 = sum O(a_i), E_2 = sum O(b_k) on P^l."""
    check_params(m, n, j)
    if len(a) != n or len(b) != m:
        raise ValueError(f"need len(a) = n = {n} and len(b) = m = {m}")
    cx = build_universal_complex(m, n, j)
    table = GradedBettiTable()
    for u in cx.degrees():
        for term, mult in cx.terms[u].items():
            for deg, rank in split_expansion(term.gl_n, term.gl_m, a, b).items():
                table.add(u, deg, rank * mult)
        assert sum(k for (v, _), k in table.entries.items() if v == u) == cx.rank(u)
    if l < m - n + 1:
        table.notes.append("not expected codimension: l < m - r")
    if all(d <= 0 for d in entry_degrees(a, b)):
        table.notes.append("not expected codimension: matrix entries are constants")
    return table


def is_eagon_northcott_shaped(cx: EquivariantComplex) -> bool:
    """At j = m - r every GL(n)-weight is a single row and the complex is linear."""
    if cx.j != cx.m - cx.r:
        return False
    for u in cx.degrees():
        if len(cx.twists(u)) != 1 or any(len(t.gl_n) > 1 for t in cx.terms[u]):
            return False
    degs = cx.degrees()
    tw = [next(iter(cx.twists(u))) for u in degs]
    return all(tw[i] - tw[i + 1] == 1 for i in range(len(tw) - 1))


def diff_complexes(a: EquivariantComplex, b: EquivariantComplex) -> list[dict]:
    """Records present in one complex but not the other."""
    ra = Counter(tuple(sorted((k, tuple(v) if isinstance(v, list) else v) for k, v in rec.items())) for rec in a.records())
    rb = Counter(tuple(sorted((k, tuple(v) if isinstance(v, list) else v) for k, v in rec.items())) for rec in b.records())
    out = []
    for side, x, y in (("left_only", ra, rb), ("right_only", rb, ra)):
        for key in sorted((x - y).elements()):
            rec = {k: list(v) if isinstance(v, tuple) else v for k, v in key}
            rec["side"] = side
            out.append(rec)
    return out


def all_cases(max_m: int) -> Iterable[tuple[int, int, int]]:
    for m in range(2, max_m + 1):
        for n in range(2, m + 1):
            for j in range(m - n + 2):
                yield m, n, j

