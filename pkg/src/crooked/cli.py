"""Command-line front-end: construct family instances, verify their
properties, emit invariant comparison reports, and search parameters.

Exit codes (stable for scripting):
  0 success / all requested checks passed
  1 a requested check failed
  2 invalid parameters
  3 malformed input file
  4 computation infeasible at this degree
  5 field/degree mismatch
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from typing import List, Optional

from . import families, funcfile, invariants, spectral, vbf
from .errors import (
    CrookedError,
    DegreeMismatch,
    InfeasibleSize,
    InvalidModulus,
    MalformedFile,
    NotGold,
    UnsupportedDegree,
)
from .field import FieldCtx

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INVALID_PARAMS = 2
EXIT_MALFORMED = 3
EXIT_INFEASIBLE = 4
EXIT_MISMATCH = 5


def _counter_to_list(c: Counter) -> list:
    return [[int(v), int(m)] for v, m in sorted(c.items())]


def _emit(doc: dict, as_json: bool, out=sys.stdout):
    if as_json:
        out.write(json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n")
    else:
        for k in sorted(doc):
            out.write(f"{k}: {doc[k]}\n")


def _resolve_elem(ctx: FieldCtx, text: str, seed: int) -> int:
    if text == "primitive":
        prims = [v for v in range(2, ctx.order) if ctx.is_primitive(v)]
        return prims[seed % len(prims)]
    return int(text, 16)


def _parse_int_list(text: Optional[str]) -> tuple:
    if not text:
        return ()
    return tuple(int(v) for v in text.split(","))


def _load(path: str) -> funcfile.FunctionFile:
    with open(path, "r", encoding="utf-8") as fh:
        return funcfile.parse(fh.read())


def cmd_construct(args) -> int:
    try:
        ctx = FieldCtx(args.n, int(args.modulus, 16) if args.modulus else None)
    except (InvalidModulus, UnsupportedDegree) as e:
        print(str(e), file=sys.stderr)
        return EXIT_INVALID_PARAMS
    seed = args.seed or 0
    prov = {"family": args.family, "seed": seed}
    try:
        if args.family == "gold":
            m = families.build_gold(ctx, args.s)
            prov["s"] = args.s
        elif args.family == "ref7":
            c = _resolve_elem(ctx, args.c or "primitive", seed)
            d = _resolve_elem(ctx, args.d or "primitive", seed)
            m = families.build_ref7(ctx, args.n // 2, args.s, c, d)
            prov.update({"m": args.n // 2, "s": args.s, "c": format(c, "x"), "d": format(d, "x")})
        else:
            params = _family_params(ctx, args, seed)
            if isinstance(params, list):  # violation messages
                for line in params:
                    print(line)
                return EXIT_INVALID_PARAMS
            builder = families.build_thm1 if args.family == "thm1" else families.build_thm2
            m = builder(ctx, params)
            prov.update(
                {
                    "m": params.m,
                    "s": params.s,
                    "t": params.t,
                    "K": list(params.K),
                    "c": format(params.c, "x"),
                    "d": format(params.d, "x"),
                    "r": [format(v, "x") for v in params.r],
                }
            )
    except NotGold as e:
        print(str(e))
        return EXIT_INVALID_PARAMS
    except DegreeMismatch as e:
        print(str(e), file=sys.stderr)
        return EXIT_MISMATCH
    text = funcfile.serialize(funcfile.from_multinomial_repr(m, prov))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _family_params(ctx, args, seed):
    """Family params from flags, the validator's violation list, or a
    seeded-search hit under --auto."""
    if args.auto:
        hits = families.search_params(ctx, args.family, budget=1, seed=seed)
        if not hits:
            return ["no valid parameters found by search"]
        return hits[0]
    if args.n % 2:
        return ["n must be even"]
    m = args.n // 2
    K = _parse_int_list(args.K) or (0,)
    c = _resolve_elem(ctx, args.c or "primitive", seed)
    d = _resolve_elem(ctx, args.d or "primitive", seed)
    r = tuple(int(v, 16) for v in args.r.split(",")) if args.r else (0,) * (m - 1)
    cls = families.Thm1Params if args.family == "thm1" else families.Thm2Params
    params = cls(m=m, s=args.s, t=args.t, K=K, c=c, d=d, r=r)
    validator = families.validate_thm1 if args.family == "thm1" else families.validate_thm2
    bad = validator(ctx, params)
    return sorted(bad) if bad else params


def _params_from_provenance(ff: funcfile.FunctionFile):
    prov = ff.provenance
    fam = prov.get("family")
    if fam not in ("thm1", "thm2"):
        return None
    cls = families.Thm1Params if fam == "thm1" else families.Thm2Params
    return cls(
        m=int(prov["m"]),
        s=int(prov["s"]),
        t=int(prov["t"]),
        K=tuple(prov["K"]),
        c=int(prov["c"], 16),
        d=int(prov["d"], 16),
        r=tuple(int(v, 16) for v in prov.get("r", [])),
    )


def cmd_verify(args) -> int:
    try:
        ff = _load(args.infile)
        f = ff.to_truthtable()
    except (OSError, MalformedFile, CrookedError) as e:
        print(str(e), file=sys.stderr)
        return EXIT_MALFORMED
    checks = args.checks.split(",")
    report: dict = {"n": ff.n, "checks": sorted(checks)}
    ok = True
    try:
        for check in checks:
            if check == "apn":
                delta, spec = vbf.differential_spectrum(f)
                report["delta"] = delta
                report["diff_spectrum"] = _counter_to_list(spec)
                ok &= delta == 2
            elif check == "crooked":
                res = vbf.is_crooked(f)
                report["crooked"] = res.is_crooked
                if res.is_crooked and not args.summary:
                    report["hyperplane_witnesses"] = {
                        format(a, "x"): [format(w.b, "x"), w.eps]
                        for a, w in sorted(res.witnesses.items())
                    }
                if not res.is_crooked:
                    report["crooked_failed_at"] = (
                        "apn" if res.failed_apn else format(res.failed_at, "x")
                    )
                ok &= res.is_crooked
            elif check == "walsh":
                summary = spectral.walsh_spectrum(f)
                report["nl"] = summary.nl
                report["walsh_spectrum"] = _counter_to_list(summary.gamma)
                report["extended_walsh"] = _counter_to_list(summary.extended)
            elif check == "identity":
                params = _params_from_provenance(ff)
                if params is None:
                    print("identity check needs thm1/thm2 provenance", file=sys.stderr)
                    return EXIT_MALFORMED
                good = families.proof_identity_check(
                    ff.ctx(), params, trials=args.trials, seed=args.seed or 0
                )
                report["identity"] = good
                ok &= good
            else:
                print(f"unknown check {check!r}", file=sys.stderr)
                return EXIT_INVALID_PARAMS
    except InfeasibleSize as e:
        print(str(e), file=sys.stderr)
        return EXIT_INFEASIBLE
    report["pass"] = ok
    _emit(report, args.json)
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def _invariants_doc(rep: invariants.InvariantReport, label: str) -> dict:
    def side(inv):
        doc = {
            "delta": inv.delta,
            "diff_spectrum": _counter_to_list(inv.diff_spectrum),
            "extended_walsh": _counter_to_list(inv.extended_walsh),
            "nl": inv.nl,
        }
        if inv.gamma_rank is not None:
            doc["gamma_rank"] = inv.gamma_rank
            doc["delta_rank"] = inv.delta_rank
        return doc

    return {
        "against": label,
        "depth": rep.depth,
        "left": side(rep.left),
        "right": side(rep.right),
        "verdict": rep.verdict,
    }


def cmd_invariants(args) -> int:
    try:
        f = _load(args.infile).to_truthtable()
    except (OSError, MalformedFile, CrookedError) as e:
        print(str(e), file=sys.stderr)
        return EXIT_MALFORMED
    depth = "spectra+ranks" if args.depth == "ranks" else "spectra"
    targets = []
    if args.against == "gold-all":
        for s in families.gold_representatives(f.ctx.n):
            targets.append(
                (f"gold-s{s}", vbf.from_multinomial(families.build_gold(f.ctx, s)))
            )
    else:
        try:
            g = _load(args.against).to_truthtable()
        except (OSError, MalformedFile, CrookedError) as e:
            print(str(e), file=sys.stderr)
            return EXIT_MALFORMED
        targets.append((args.against, g))
    docs = []
    try:
        for label, g in targets:
            docs.append(_invariants_doc(invariants.compare(f, g, depth), label))
    except DegreeMismatch as e:
        print(str(e), file=sys.stderr)
        return EXIT_MISMATCH
    except InfeasibleSize as e:
        print(str(e), file=sys.stderr)
        return EXIT_INFEASIBLE
    for doc in docs:
        _emit(doc, args.json)
    return EXIT_OK


def cmd_search(args) -> int:
    if args.n % 2:
        print("n must be even", file=sys.stderr)
        return EXIT_INVALID_PARAMS
    try:
        ctx = FieldCtx(args.n, int(args.modulus, 16) if args.modulus else None)
    except (InvalidModulus, UnsupportedDegree) as e:
        print(str(e), file=sys.stderr)
        return EXIT_INVALID_PARAMS
    hits = families.search_params(ctx, args.family, budget=args.budget, seed=args.seed or 0)
    for p in hits:
        rec = {
            "family": args.family,
            "m": p.m,
            "s": p.s,
            "t": p.t,
            "K": list(p.K),
            "c": format(p.c, "x"),
            "d": format(p.d, "x"),
            "r": [format(v, "x") for v in p.r],
        }
        print(json.dumps(rec, sort_keys=True, separators=(",", ":")))
    print(f"# {len(hits)} valid tuple(s)", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="crooked", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a family instance")
    c.add_argument("--family", required=True, choices=["thm1", "thm2", "gold", "ref7"])
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--modulus", help="hex bitmask of the field modulus")
    c.add_argument("--s", type=int, default=1)
    c.add_argument("--t", type=int, default=0)
    c.add_argument("--K", help="comma-separated indices, e.g. 0,3")
    c.add_argument("--c", help="hex element or 'primitive'")
    c.add_argument("--d", help="hex element or 'primitive'")
    c.add_argument("--r", help="comma-separated hex elements")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--auto", action="store_true", help="take the first searched tuple")
    c.add_argument("--out")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="run property checks on a function file")
    v.add_argument("--in", dest="infile", required=True)
    v.add_argument("--checks", default="apn,crooked")
    v.add_argument("--json", action="store_true")
    v.add_argument("--summary", action="store_true", help="omit per-direction witnesses")
    v.add_argument("--trials", type=int, default=10_000)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--threads", type=int, default=1, help="worker bound; results are thread-count independent")
    v.set_defaults(func=cmd_verify)

    i = sub.add_parser("invariants", help="compare CCZ invariants")
    i.add_argument("--in", dest="infile", required=True)
    i.add_argument("--against", required=True, help="function file or 'gold-all'")
    i.add_argument("--depth", choices=["spectra", "ranks"], default="spectra")
    i.add_argument("--json", action="store_true")
    i.set_defaults(func=cmd_invariants)

    s = sub.add_parser("search", help="enumerate valid family parameters")
    s.add_argument("--family", required=True, choices=["thm1", "thm2"])
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--modulus")
    s.add_argument("--budget", type=int, default=5)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_search)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
