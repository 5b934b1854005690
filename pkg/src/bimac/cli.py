"""Command-line surface: compute E and P polynomials, evaluate, expand
Pieri products, and run verification suites.

Exit codes: 0 success, 1 verification or consistency failure, 2 usage
errors.  Output is deterministic for identical arguments.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import cache as cachemod
from .errors import ConsistencyError
from .evalsym import eval_formula, evaluate
from .macdonald import bisym_P, nonsym_E
from .pieri import expansions_equal, pieri_bruteforce, pieri_expand
from .qt import format_scalar
from .render import format_xpoly, xpoly_to_json, diagram_latex
from .sparts import lambda_naught, format_spart, parse_spart
from .verify import run_suite


def _parse_eta(text):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise SystemExit(2) from exc


def _load_cache(args):
    path = cachemod.cache_path(getattr(args, "cache", None))
    if path:
        cachemod.load(path)
    return path


def _save_cache(path):
    if path:
        cachemod.dump_all(path)


def cmd_E(args):
    eta = _parse_eta(args.eta)
    if args.N is not None and args.N != len(eta):
        print("error: --N disagrees with the composition length",
              file=sys.stderr)
        return 2
    path = _load_cache(args)
    elem = nonsym_E(eta)
    if args.format == "json":
        print(json.dumps(xpoly_to_json(elem.poly), sort_keys=True))
    elif args.format == "latex":
        print(format_xpoly(elem.poly, latex=True))
    else:
        print(format_xpoly(elem.poly))
    _save_cache(path)
    return 0


def cmd_P(args):
    try:
        lam = parse_spart(args.spart, args.N)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    path = _load_cache(args)
    elem = bisym_P(lam)
    if args.format == "json":
        print(json.dumps({"spart": format_spart(lam),
                          "c": elem.c_lam.to_json(),
                          "poly": xpoly_to_json(elem.poly)}, sort_keys=True))
    elif args.format == "latex":
        print(format_xpoly(elem.poly, latex=True))
    elif args.format == "diagram":
        print(diagram_latex(lam))
    else:
        print(format_xpoly(elem.poly))
    _save_cache(path)
    return 0


def cmd_eval(args):
    try:
        lam = parse_spart(args.spart, args.N)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    path = _load_cache(args)
    formula = eval_formula(lam, args.sign)
    if args.route == "formula":
        print(format_scalar(formula))
        return 0
    subst = evaluate(lambda_naught(lam.m, lam.N), args.sign, bisym_P(lam).poly)
    _save_cache(path)
    if args.route == "substitution":
        print(format_scalar(subst))
        return 0
    print(f"formula:      {format_scalar(formula)}")
    print(f"substitution: {format_scalar(subst)}")
    if formula != subst:
        print("MISMATCH between evaluation routes", file=sys.stderr)
        return 1
    return 0


def cmd_pieri(args):
    try:
        lam = parse_spart(args.spart, args.N)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    path = _load_cache(args)
    terms = pieri_expand(lam, args.r, args.variant)
    if args.format == "json":
        print(json.dumps([{"spart": format_spart(t.omega),
                           "coeff": t.coeff.to_json()} for t in terms],
                         sort_keys=True))
    else:
        latex = args.format == "latex"
        for t in terms:
            c = format_scalar(t.coeff, latex=latex)
            if latex:
                print(f"{c} \\, \\mathcal P_{{({format_spart(t.omega)})}}")
            else:
                print(f"P_({format_spart(t.omega)})  *  {c}")
    code = 0
    if args.check:
        oracle = pieri_bruteforce(lam, args.r, args.variant)
        if not expansions_equal(terms, oracle):
            print("MISMATCH against the brute-force expansion:",
                  file=sys.stderr)
            want = {format_spart(t.omega): t.coeff for t in oracle}
            got = {format_spart(t.omega): t.coeff for t in terms}
            for key in sorted(set(want) | set(got)):
                if got.get(key) != want.get(key):
                    print(f"  P_({key}): formula {got.get(key)} "
                          f"!= oracle {want.get(key)}", file=sys.stderr)
            code = 1
        else:
            print(f"# brute-force check passed ({len(terms)} terms)")
    _save_cache(path)
    return code


def cmd_verify(args):
    if args.suite == "all" and args.jobs > 1:
        from concurrent.futures import ProcessPoolExecutor
        names = ("hecke", "eigen", "symmetry", "evaluation", "pieri")
        ok = True
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            futures = {name: pool.submit(_run_suite_worker, name,
                                         args.N, args.deg)
                       for name in names}
            for name in names:
                sub_ok, lines = futures[name].result()
                ok = ok and sub_ok
                for line in lines:
                    print(f"{name}: {line}" if not line.startswith("[")
                          else line.replace("] ", f"] {name}: ", 1))
        return 0 if ok else 1
    rep = run_suite(args.suite, N=args.N, deg=args.deg)
    for line in rep.lines():
        print(line)
    return 0 if rep.ok else 1


def _run_suite_worker(name, N, deg):
    rep = run_suite(name, N=N, deg=deg)
    return rep.ok, rep.lines()


def build_parser():
    parser = argparse.ArgumentParser(
        prog="bimac",
        description="Exact bisymmetric Macdonald polynomials, evaluations "
                    "and Pieri expansions")
    parser.add_argument("--cache", help="JSONL cache file (or env BIMAC_CACHE)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("E", help="non-symmetric Macdonald polynomial")
    p.add_argument("--eta", required=True, help="composition, e.g. 0,1,2")
    p.add_argument("--N", type=int, help="variable count (optional check)")
    p.add_argument("--format", choices=("text", "latex", "json"),
                   default="text")
    p.set_defaults(func=cmd_E)

    p = sub.add_parser("P", help="bisymmetric Macdonald polynomial")
    p.add_argument("--spart", required=True, help='superpartition "a,b;c,d"')
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--format", choices=("text", "latex", "json", "diagram"),
                   default="text")
    p.set_defaults(func=cmd_P)

    p = sub.add_parser("eval", help="staircase evaluation of P")
    p.add_argument("--spart", required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--sign", choices=("plus", "minus"), default="minus")
    p.add_argument("--route", choices=("formula", "substitution", "both"),
                   default="formula")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("pieri", help="Pieri expansion of e_r times P")
    p.add_argument("--spart", required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--variant", choices=("upper", "lower"), default="upper")
    p.add_argument("--check", action="store_true",
                   help="also run the brute-force oracle")
    p.add_argument("--format", choices=("text", "latex", "json"),
                   default="text")
    p.set_defaults(func=cmd_pieri)

    p = sub.add_parser("verify", help="run identity verification suites")
    p.add_argument("--suite", default="all",
                   choices=("hecke", "eigen", "symmetry", "evaluation",
                            "pieri", "normalization", "all"))
    p.add_argument("--N", type=int, default=4)
    p.add_argument("--deg", type=int, default=3)
    p.add_argument("--jobs", type=int, default=1,
                   help="worker processes for --suite all")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConsistencyError as exc:
        print(f"consistency failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
