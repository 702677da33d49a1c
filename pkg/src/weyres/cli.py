"""Command line front end.

Every subcommand prints one document on stdout (json, tsv or pretty) and
diagnostics on stderr.  Exit status: 0 success, 1 a certificate or check came
out false, 2 usage error.  Defaults for --prime, --seed, --dmax, --trials and
--format can be overridden with WEYRES_PRIME, WEYRES_SEED, ... .
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .bbw import GrassmannianBundleWeight, bbw_cohomology
from .oracle.checks import annihilator_report, fiber_checks
from .oracle.hilbert import hilbert_function
from .oracle.linalg import DEFAULT_PRIME
from .oracle.presentation import presentation_W
from .partitions import check_weight
from .resolution import (
    all_cases,
    build_complex_via_bbw,
    build_universal_complex,
    check_params,
    diff_complexes,
    relativize_split,
)
from .schur import c_tilde, dim_schur, pieri_terms, weight_multiplicity
from .verification import acm_certificate, hilbert_prediction, k_polynomial, shift_k, ulrich_certificate

DEFAULT_SEED = 20240601


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    subcommand: str
    m: int | None = None
    n: int | None = None
    j: int | None = None
    l: int | None = None
    a: tuple[int, ...] | None = None
    b: tuple[int, ...] | None = None
    d_max: int = 3
    prime: int = DEFAULT_PRIME
    seed: int = DEFAULT_SEED
    trials: int = 10
    exact: bool = False
    fmt: str = "json"
    weight: tuple[int, ...] | None = None
    r: int | None = None
    content: tuple[int, ...] | None = None
    ann_dmax: int = 1
    max_m: int | None = None

    def validate(self) -> None:
        needs_mnj = self.subcommand in ("resolve", "ulrich", "verify") or (
            self.subcommand == "crosscheck" and self.max_m is None
        )
        if needs_mnj:
            if None in (self.m, self.n, self.j):
                raise UsageError(f"{self.subcommand} needs --m, --n and --j")
            try:
                check_params(self.m, self.n, self.j)
            except ValueError as exc:
                raise UsageError(str(exc)) from None
        if self.d_max < 0:
            raise UsageError("--dmax must be >= 0")
        if self.fmt not in ("json", "tsv", "pretty"):
            raise UsageError(f"unknown format {self.fmt!r}")


def _ints(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    return tuple(int(x) for x in text.replace(" ", "").replace(";", ",").split(","))


def _env(name: str, default, cast=int):
    raw = os.environ.get("WEYRES_" + name)
    return cast(raw) if raw not in (None, "") else default


# -- subcommands -------------------------------------------------------------

def _resolve(cfg: RunConfig) -> tuple[int, dict]:
    cx = build_universal_complex(cfg.m, cfg.n, cfg.j)
    doc = cx.to_json()
    code = 0
    if cfg.a is not None or cfg.b is not None:
        if cfg.a is None or cfg.b is None or cfg.l is None:
            raise UsageError("--a, --b and --l go together")
        table = relativize_split(cfg.m, cfg.n, cfg.j, cfg.a, cfg.b, cfg.l)
        acm = acm_certificate(table, cfg.m - cfg.n + 1)
        doc["split"] = {
            "a": list(cfg.a),
            "b": list(cfg.b),
            "l": cfg.l,
            "betti": table.records(),
            "notes": table.notes,
            "acm": {"ok": acm.ok, "reason": acm.reason, "length": acm.length, "codim": acm.codim},
        }
        code = 0 if acm.ok else 1
    return code, doc


def _bbw(cfg: RunConfig) -> tuple[int, dict]:
    if cfg.weight is None or cfg.r is None or cfg.m is None:
        raise UsageError("bbw needs --r, --m and --weight")
    w = cfg.weight
    try:
        bw = GrassmannianBundleWeight(tuple(w[: cfg.r]), tuple(w[cfg.r:]), cfg.r, cfg.m)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    doc = {"r": cfg.r, "m": cfg.m, "u_part": list(bw.u_part), "q_part": list(bw.q_part)}
    doc.update(bbw_cohomology(bw).to_json())
    return 0, doc


def _pieri(cfg: RunConfig) -> tuple[int, dict]:
    if cfg.weight is None or cfg.j is None:
        raise UsageError("pieri needs --weight and --j")
    try:
        check_weight(cfg.weight)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    k = len(cfg.weight)
    terms = pieri_terms(cfg.weight, cfg.j)
    return 0, {
        "weight": list(cfg.weight),
        "j": cfg.j,
        "dim": dim_schur(cfg.weight, k),
        "strips": [{"weight": list(t.weight), "dim": t.dimension, "c_tilde": c_tilde(cfg.weight, cfg.j, t.weight)}
                   for t in terms],
    }


def _kostka(cfg: RunConfig) -> tuple[int, dict]:
    if cfg.weight is None or cfg.content is None:
        raise UsageError("kostka needs --weight and --content")
    try:
        mult = weight_multiplicity(cfg.weight, cfg.content)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return 0, {"weight": list(cfg.weight), "content": list(cfg.content), "multiplicity": mult}


def _ulrich(cfg: RunConfig) -> tuple[int, dict]:
    if cfg.l is None:
        raise UsageError("ulrich needs --l")
    try:
        cert = ulrich_certificate(cfg.m, cfg.n, cfg.j, cfg.l)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return (0 if cert.is_ulrich else 1), cert.to_json()


def _verify(cfg: RunConfig) -> tuple[int, dict]:
    m, n, j = cfg.m, cfg.n, cfg.j
    prime = None if cfg.exact else cfg.prime
    shift = (n - 1) * (m - n + 1 - j)
    kp = shift_k(k_polynomial(build_universal_complex(m, n, j)), shift)
    predicted = hilbert_prediction(kp, m * n, cfg.d_max)
    computed = hilbert_function(presentation_W(m, n, j), cfg.d_max, prime)
    fibers = fiber_checks(m, n, j, cfg.trials, cfg.seed, prime)
    ann = annihilator_report(m, n, j, cfg.ann_dmax, prime=prime)
    match = predicted == computed
    doc = {
        "m": m,
        "n": n,
        "j": j,
        "dmax": cfg.d_max,
        "prime": prime,
        "seed": cfg.seed,
        "degree_shift": shift,
        "predicted": predicted,
        "computed": computed,
        "match": match,
        "fiber_checks": [f.to_json() for f in fibers],
        "annihilator": ann.ok,
        "annihilator_detail": ann.to_json(),
    }
    ok = match and all(f.ok for f in fibers) and ann.ok
    return (0 if ok else 1), doc


def _crosscheck(cfg: RunConfig) -> tuple[int, dict]:
    cases = list(all_cases(cfg.max_m)) if cfg.max_m is not None else [(cfg.m, cfg.n, cfg.j)]
    diffs = []
    for m, n, j in cases:
        for rec in diff_complexes(build_complex_via_bbw(m, n, j), build_universal_complex(m, n, j)):
            rec.update({"m": m, "n": n, "j": j})
            diffs.append(rec)
    return (0 if not diffs else 1), {"cases": len(cases), "diff": diffs}


HANDLERS = {
    "resolve": _resolve,
    "bbw": _bbw,
    "pieri": _pieri,
    "kostka": _kostka,
    "ulrich": _ulrich,
    "verify": _verify,
    "crosscheck": _crosscheck,
}


def run(cfg: RunConfig) -> tuple[int, dict]:
    cfg.validate()
    return HANDLERS[cfg.subcommand](cfg)


# -- rendering ----------------------------------------------------------------

def render(doc: dict, fmt: str, subcommand: str) -> str:
    if fmt == "json":
        return json.dumps(doc, sort_keys=True, indent=2)
    if fmt == "tsv":
        if subcommand == "resolve":
            lines = ["u\ttwist\tgl_n\tgl_m\tdim\tmult"]
            for t in doc["terms"]:
                lines.append("\t".join([str(t["u"]), str(t["twist"]), _fmt_w(t["gl_n"]), _fmt_w(t["gl_m"]),
                                        str(t["dim"]), str(t["mult"])]))
            return "\n".join(lines)
        return "\n".join(f"{k}\t{json.dumps(v, sort_keys=True)}" for k, v in sorted(doc.items()))
    if subcommand == "resolve":
        lines = [f"W_{doc['j']} on M_{doc['m']},{doc['n']}  (det power {doc['det_power']})"]
        for t in doc["terms"]:
            lines.append(f"  F_-{t['u']}: S^({_fmt_w(t['gl_n'])}) C^n x S^({_fmt_w(t['gl_m'])}) (C^m)* "
                         f"x O({t['twist']})   dim {t['dim']}" + (f" x{t['mult']}" if t["mult"] > 1 else ""))
        return "\n".join(lines)
    return "\n".join(f"{k}: {v}" for k, v in sorted(doc.items()))


def _fmt_w(w) -> str:
    return ",".join(str(x) for x in w)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="weyres", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="subcommand", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="fmt", default=_env("FORMAT", "json", str), choices=("json", "tsv", "pretty"))
    mnj = argparse.ArgumentParser(add_help=False)
    mnj.add_argument("--m", type=int)
    mnj.add_argument("--n", type=int)
    mnj.add_argument("--j", type=int)

    p = sub.add_parser("resolve", parents=[common, mnj], help="equivariant resolution of W_j")
    p.add_argument("--a", type=_ints, help="degrees of E_1 = sum O(a_i), comma separated")
    p.add_argument("--b", type=_ints, help="degrees of E_2 = sum O(b_k), comma separated")
    p.add_argument("--l", type=int, help="dimension of the projective space")

    p = sub.add_parser("bbw", parents=[common], help="Bott-Borel-Weil on Gr(r, m)")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--weight", type=_ints, required=True,
                   help="u_part;q_part, e.g. --weight='-2;0'")

    p = sub.add_parser("pieri", parents=[common], help="strips of S^lambda x wedge^j")
    p.add_argument("--weight", type=_ints, required=True)
    p.add_argument("--j", type=int, required=True)

    p = sub.add_parser("kostka", parents=[common], help="weight multiplicity")
    p.add_argument("--weight", type=_ints, required=True)
    p.add_argument("--content", type=_ints, required=True)

    p = sub.add_parser("ulrich", parents=[common, mnj], help="Ulrich certificate for the linear locus")
    p.add_argument("--l", type=int)

    p = sub.add_parser("verify", parents=[common, mnj], help="commutative-algebra oracle")
    p.add_argument("--dmax", dest="d_max", type=int, default=_env("DMAX", 3))
    p.add_argument("--prime", type=int, default=_env("PRIME", DEFAULT_PRIME))
    p.add_argument("--trials", type=int, default=_env("TRIALS", 10))
    p.add_argument("--seed", type=int, default=_env("SEED", DEFAULT_SEED))
    p.add_argument("--exact", action="store_true", help="rank computations over Q")
    p.add_argument("--ann-dmax", type=int, default=1)

    p = sub.add_parser("crosscheck", parents=[common, mnj], help="BBW path vs closed form")
    p.add_argument("--max-m", type=int, help="check every case with m <= MAX_M")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    cfg = RunConfig(**{k: v for k, v in vars(ns).items() if k in RunConfig.__dataclass_fields__})
    if cfg.subcommand == "verify":
        print(f"seed {cfg.seed}", file=sys.stderr)
    try:
        code, doc = run(cfg)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    print(render(doc, cfg.fmt, cfg.subcommand))
    return code


if __name__ == "__main__":
    sys.exit(main())
