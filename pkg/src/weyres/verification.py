"""Certificates read off a resolution: K-polynomials, Hilbert functions, aCM and Ulrich."""
from __future__ import annotations

from dataclasses import asdict, dataclass
from math import comb

from .resolution import EquivariantComplex, GradedBettiTable, check_params, relativize_split


class KPolynomial(dict):
    """Laurent polynomial in t stored as {exponent: coefficient}, zeros dropped."""

    def __call__(self, t):
        return sum(c * t**e for e, c in self.items())

    def clean(self) -> "KPolynomial":
        return KPolynomial({e: c for e, c in sorted(self.items()) if c})

    def divide_one_minus_t(self) -> "KPolynomial | None":
        """Quotient by (1 - t), or None if t = 1 is not a root."""
        if not self:
            return KPolynomial()
        if self(1) != 0:
            return None
        lo, hi = min(self), max(self)
        q, acc = {}, 0
        # K = (1 - t) Q  =>  Q_e = sum_{f <= e} K_f
        for e in range(lo, hi):
            acc += self.get(e, 0)
            q[e] = acc
        return KPolynomial(q).clean()

    def order_at_one(self) -> int:
        k, p = 0, self.clean()
        while p:
            nxt = p.divide_one_minus_t()
            if nxt is None:
                break
            p, k = nxt, k + 1
        return k

    def to_json(self) -> dict:
        return {str(e): c for e, c in sorted(self.items())}


def k_polynomial(cx: EquivariantComplex | GradedBettiTable) -> KPolynomial:
    """sum_u (-1)^u rank * t^{-twist}: generator degree is minus the twist."""
    table = cx.betti() if isinstance(cx, EquivariantComplex) else cx
    out = KPolynomial()
    for (u, twist), rank in table.entries.items():
        out[-twist] = out.get(-twist, 0) + (-1) ** u * rank
    return out.clean()


def hilbert_prediction(cx: EquivariantComplex | GradedBettiTable | KPolynomial, num_vars: int, d_max: int) -> list[int]:
    """Coefficients h(0..d_max) of K(t) / (1 - t)^num_vars."""
    kp = cx if isinstance(cx, KPolynomial) else k_polynomial(cx)
    if kp and min(kp) < 0:
        raise ValueError("K-polynomial has negative exponents; shift before expanding")
    return [
        sum(c * comb(d - e + num_vars - 1, num_vars - 1) for e, c in kp.items() if e <= d)
        for d in range(d_max + 1)
    ]


def shift_k(kp: KPolynomial, s: int) -> KPolynomial:
    """Multiply by t^{-s} (move generators from degree s to degree 0)."""
    return KPolynomial({e - s: c for e, c in kp.items()})


def multiplicity(kp: KPolynomial, codim: int) -> int:
    """Q(1) where K = (1-t)^codim Q; the degree of the module's support cycle."""
    q = kp.clean()
    for _ in range(codim):
        q = q.divide_one_minus_t()
        if q is None:
            raise ValueError(f"K-polynomial does not vanish to order {codim} at t = 1")
    return q(1)


@dataclass
class AcmCertificate:
    ok: bool
    reason: str
    length: int
    codim: int

    def __bool__(self):
        return self.ok


def acm_certificate(table: GradedBettiTable, codim: int) -> AcmCertificate:
    """Line-bundle resolution of length codim => the sheaf is aCM."""
    # every summand of a split relativization is some O(d); the table holds nothing else
    assert all(isinstance(d, int) and k > 0 for (_, d), k in table.entries.items())
    length = table.length()
    if table.notes:
        return AcmCertificate(False, "; ".join(table.notes), length, codim)
    if length != codim:
        return AcmCertificate(False, "length mismatch", length, codim)
    return AcmCertificate(True, "ok", length, codim)


@dataclass
class UlrichCertificate:
    m: int
    n: int
    j: int
    l: int
    initializing_twist: int
    stated_twist: int
    twists_agree: bool
    ranks: list[int]
    rank_sheaf: int
    degree_locus: int
    h0: int
    length: int
    is_linear: bool
    is_ulrich: bool

    def to_json(self) -> dict:
        return asdict(self)


def ulrich_certificate(m: int, n: int, j: int, l: int) -> UlrichCertificate:
    """Certificate for the linear determinantal locus of O(-1)^n -> O^m on P^l."""
    check_params(m, n, j)
    r = n - 1
    c = m - r
    if l < c:
        raise ValueError(f"not expected codimension: l={l} < m - r = {c}")
    table = relativize_split(m, n, j, (-1,) * n, (0,) * m, l)
    top = table.degrees_at(0)
    if len(top) != 1:
        raise ValueError("resolution is not generated in a single degree")
    init = -top[0]
    twisted = table.shifted(init)
    is_linear = all(twisted.degrees_at(u) == [-u] for u in range(twisted.length() + 1))
    ranks = twisted.ranks()
    rank_sheaf = comb(c, j)
    e = multiplicity(k_polynomial(twisted), c)
    degree_locus, rem = divmod(e, rank_sheaf)
    if rem:
        raise ValueError(f"multiplicity {e} is not divisible by the rank {rank_sheaf}")
    h0 = ranks[0]
    stated = (n - 1) * (m - n)
    return UlrichCertificate(
        m=m,
        n=n,
        j=j,
        l=l,
        initializing_twist=init,
        stated_twist=stated,
        twists_agree=init == stated,
        ranks=ranks,
        rank_sheaf=rank_sheaf,
        degree_locus=degree_locus,
        h0=h0,
        length=twisted.length(),
        is_linear=is_linear,
        is_ulrich=is_linear and twisted.length() == c and h0 == degree_locus * rank_sheaf,
    )
