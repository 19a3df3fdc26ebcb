"""Command line front end: `spctl`.

Subcommands map one-to-one onto the library surface; every command can
emit a canonical JSON report (sorted keys, no timestamps) so batch runs
diff cleanly.  Exit status is 0 on success; `verify` returns nonzero iff
any exact check failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import decompose as dec
from . import harness, ratios
from .collinear import t_count_brute, t_o_count, triple_count_report
from .core import DEFAULT_BUDGET
from .energy import energy, rep_histogram
from .errors import AddcombError
from .incidence import line_moment_sums, read_arrangement, st_bound_check
from .sets import (
    GeneratorConfig,
    format_rational,
    generate,
    parse_rational,
    read_corpus_file,
    read_set_file,
    write_set_file,
)

SCHEMA = "addcomb-report/1"


def _emit(payload: dict, command: str, path) -> None:
    doc = {"schema": SCHEMA, "command": command, "payload": payload}
    text = json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _load_sets(paths, want: int, what: str):
    if not paths or len(paths) > want:
        raise AddcombError(f"{what} takes between 1 and {want} --set arguments")
    sets = [read_set_file(p) for p in paths]
    while len(sets) < want:
        sets.append(sets[-1])  # repeat the last set, e.g. A -> (A, A, A)
    return sets


def _cmd_gen(args) -> int:
    kw = {}
    for key in ("start", "step", "ratio"):
        v = getattr(args, key)
        if v is not None:
            kw[key] = parse_rational(v)
    for key in ("n", "s", "p", "size", "range", "seed"):
        v = getattr(args, key)
        if v is not None:
            kw[key] = v
    if args.values is not None:
        kw["values"] = tuple(parse_rational(v) for v in args.values.split(","))
    cfg = GeneratorConfig(kind=args.kind, **kw)
    a = generate(cfg)
    if args.out:
        write_set_file(args.out, a, header=cfg.label())
    else:
        for v in a:
            print(format_rational(v))
    if args.json:
        _emit({"config": cfg.to_json(), "size": len(a),
               "elements": [format_rational(v) for v in a]}, "gen", args.json)
    print(f"{cfg.label()}: {len(a)} elements", file=sys.stderr)
    return 0


def _cmd_energy(args) -> int:
    A, B = _load_sets(args.set, 2, "energy")
    val = energy(A, B, args.k, args.flavor)
    hist = rep_histogram(A, B, "diff" if args.flavor == "additive" else "ratio")
    print(val)
    if args.json:
        _emit({"k": args.k, "flavor": args.flavor, "value": val,
               "support": hist.support_size, "max_count": hist.max_count},
              "energy", args.json)
    return 0


def _cmd_triples(args) -> int:
    A1, A2, A3 = _load_sets(args.set, 3, "triples")
    rep = triple_count_report(A1, A2, A3, args.budget)
    print(f"T={rep.T} T_o={rep.T_o} degenerate={rep.degenerate_terms}")
    if args.json:
        _emit(rep.to_json(), "triples", args.json)
    return 0


def _cmd_ratios(args) -> int:
    A1, A2 = _load_sets(args.set, 2, "ratios")
    Z = ratios.popular_ratios(A1, A2, args.count)
    prof = ratios.ratio_profile(Z, A1, A2)
    print(f"|Z|={len(Z)} R={prof.R} sum_r={prof.sum_r}")
    if args.json:
        _emit(prof.to_json(), "ratios", args.json)
    return 0


def _cmd_incidence(args) -> int:
    if args.arrangement:
        rep = st_bound_check(read_arrangement(args.arrangement))
        print(f"incidences={rep.count} bound=[{rep.bound_lo},{rep.bound_hi}] "
              f"ok={rep.ok}")
        if args.json:
            _emit(rep.to_json(), "incidence", args.json)
        return 0
    A1, A2, A3 = sorted(_load_sets(args.set, 3, "incidence"), key=len)
    rep = line_moment_sums(A1, A2, A3, args.p, args.family, args.budget)
    print(f"p={rep.p} family={rep.family} sums={list(rep.sums)}")
    if args.json:
        _emit({"p": rep.p, "family": rep.family, "sums": list(rep.sums),
               "ratios": [str(r) for r in rep.ratios]}, "incidence", args.json)
    return 0


def _cmd_decompose(args) -> int:
    (A,) = _load_sets(args.set, 1, "decompose")
    if args.mode == "bw":
        M = "auto" if args.M == "auto" else Fraction(args.M)
        res = dec.bw_decompose(A, M)
    else:
        res = dec.xy_decompose(A)
    sizes = {k: len(v) for k, v in res.parts.items()}
    print(f"{res.kind}: parts={sizes} energies={res.energies} "
          f"ratio=[{res.target_ratio[0]},{res.target_ratio[1]}]")
    if args.json:
        _emit(res.to_json(), "decompose", args.json)
    return 0


def _cmd_regularize(args) -> int:
    (A,) = _load_sets(args.set, 1, "regularize")
    tr = dec.regularize(A, args.k)
    print(f"k={tr.k} eps={tr.epsilon} steps={len(tr.steps)} "
          f"|B|={len(tr.B)} |B'|={len(tr.B_prime)} |B''|={len(tr.B_dprime)}")
    if args.json:
        _emit(tr.to_json(), "regularize", args.json)
    return 0


def _cmd_verify(args) -> int:
    corpus = read_corpus_file(args.corpus) if args.corpus else None
    names = list(harness.SUITE_NAMES) if args.suite == "all" else [args.suite]
    results = []
    all_ok = True
    for name in names:
        res = harness.run_suite(name, corpus, budget=args.budget, seed=args.seed)
        results.append(res)
        n_exact = sum(1 for c in res.checks if c.kind == "EXACT")
        n_fail = sum(1 for c in res.checks
                     if c.kind == "EXACT" and c.status == "fail")
        print(f"suite {name}: {n_exact - n_fail}/{n_exact} exact checks passed, "
              f"{len(res.checks) - n_exact} report-only")
        for c in res.checks:
            if c.status == "fail":
                print(f"  FAIL {c.name}: {c.details}")
        all_ok = all_ok and res.ok
    if args.json:
        _emit({"suites": [r.to_json() for r in results], "ok": all_ok},
              "verify", args.json)
    print("VERIFY " + ("PASS" if all_ok else "FAIL"))
    return 0 if all_ok else 2


def _cmd_report(args) -> int:
    if args.set:
        (A,) = _load_sets(args.set, 1, "report")
        rep = harness.shift_product_report(
            A, parse_rational(args.alpha), parse_rational(args.beta), args.budget)
        print(f"K_mul={rep['K_mul']} |(A+a)(A+b)|={rep['shifted_product_size']} "
              f"identity={rep['identity']}")
        if args.json:
            _emit(rep, "report", args.json)
        return 0
    corpus = read_corpus_file(args.corpus) if args.corpus else None
    res = harness.run_suite("reports", corpus, budget=args.budget, seed=args.seed)
    print(f"reports: {len(res.ratio_tables)} ratio rows, "
          f"{sum(1 for c in res.checks if c.name.startswith('fit:'))} fits")
    if args.json:
        _emit(res.to_json(), "report", args.json)
    return 0


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="spctl",
        description="Exact sum-product experiments: energies, collinear "
                    "counts, incidence bounds, decompositions, verification.")
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, sets=0):
        if sets:
            p.add_argument("--set", action="append", metavar="FILE",
                           help="set file (one rational per line); repeatable")
        p.add_argument("--json", metavar="OUT",
                       help="write canonical JSON report to OUT ('-' = stdout)")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    p = sub.add_parser("gen", help="generate a set and write a set file")
    p.add_argument("--kind", required=True,
                   choices=["AP", "GP", "GridExample", "Random", "Literal"])
    p.add_argument("--start")
    p.add_argument("--step")
    p.add_argument("--ratio")
    p.add_argument("--n", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--size", type=int)
    p.add_argument("--range", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--values", help="comma-separated rationals (Literal)")
    p.add_argument("--out", metavar="FILE", help="set file to write")
    p.add_argument("--json", metavar="OUT")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("energy", help="E_k of one or two sets")
    common(p, sets=True)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--flavor", choices=["additive", "multiplicative"],
                   default="additive")
    p.set_defaults(func=_cmd_energy)

    p = sub.add_parser("triples", help="collinear 6-tuple and ordered counts")
    common(p, sets=True)
    p.set_defaults(func=_cmd_triples)

    p = sub.add_parser("ratios", help="popular ratio profile r(z), R(Z)")
    common(p, sets=True)
    p.add_argument("--count", type=int, default=None,
                   help="how many popular ratios (default |A1|^2)")
    p.set_defaults(func=_cmd_ratios)

    p = sub.add_parser("incidence",
                       help="incidence bound check or line moment sums")
    common(p, sets=True)
    p.add_argument("--arrangement", metavar="FILE",
                   help="arrangement JSON (points + lines)")
    p.add_argument("--p", type=int, default=2, help="moment exponent (1..3)")
    p.add_argument("--family", choices=["triple", "pairs"], default="triple")
    p.set_defaults(func=_cmd_incidence)

    p = sub.add_parser("decompose", help="additive/multiplicative split of a set")
    common(p, sets=True)
    p.add_argument("--mode", choices=["bw", "xy"], default="bw")
    p.add_argument("--M", default="auto",
                   help="energy guard threshold (rational or 'auto')")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("regularize", help="iterative popular-difference pruning")
    common(p, sets=True)
    p.add_argument("--k", type=int, default=3)
    p.set_defaults(func=_cmd_regularize)

    p = sub.add_parser("verify", help="run verification suites")
    common(p)
    p.add_argument("--suite", default="all",
                   choices=["all", *harness.SUITE_NAMES])
    p.add_argument("--corpus", metavar="FILE",
                   help="JSON list of generator configs (default built-in)")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("report", help="ratio tables and fits, or shift-product report")
    common(p, sets=True)
    p.add_argument("--corpus", metavar="FILE")
    p.add_argument("--alpha", default="1")
    p.add_argument("--beta", default="1")
    p.set_defaults(func=_cmd_report)

    return top


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except AddcombError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
