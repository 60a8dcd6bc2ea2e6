"""Command-line front end.

Verbs: det (closed-form or oracle determinant of a band spec), perm
(permanent of the materialized spec), table (the three census tables),
census (full weak-excedance census for one order), check (differential
suites), bench (closed form vs elimination timings).

Exit codes: 0 success, 1 check failure, 2 usage error, 3 size guard.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import band, checks, permcount
from .errors import MixedRingError, SizeLimitError
from .oracle import det_bareiss, det_laplace, permanent_expansion, permanent_ryser
from .rings import element_to_json

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_GUARD = 3


def _cmd_det(args) -> int:
    spec = band.BandSpec(args.n, args.k, args.l, args.a, args.b)
    res = band.residue(spec)
    factored = None
    if args.method == "closed":
        factored = band.det_factored(spec)
        value = factored.expand()
    elif args.method == "recurrence":
        if spec.l != 1:
            raise ValueError("--method recurrence applies only to l = 1 specs")
        value = band.det_recurrence(spec.n, spec.k, spec.a, spec.b)
    elif args.method == "laplace":
        value = det_laplace(band.materialize(spec))
    else:
        value = det_bareiss(band.materialize(spec))
    if args.format == "json":
        out = band.spec_to_json(spec)
        out.update(
            case=res.case,
            p=res.p,
            quotient=res.quotient,
            method=args.method,
            det=element_to_json(value),
        )
        if factored is not None:
            out["factored"] = str(factored)
        print(json.dumps(out))
    else:
        print(f"spec: n={spec.n} k={spec.k} l={spec.l} a={spec.a} b={spec.b}")
        print(f"case: {res.case} (l{'=' if res.case == 1 else '>'}1), p={res.p}, quotient={res.quotient}")
        print(f"method: {args.method}")
        if factored is not None:
            print(f"factored: {factored}")
        print(f"det: {value}")
    return EXIT_OK


def _cmd_perm(args) -> int:
    spec = band.BandSpec(args.n, args.k, args.l, args.a, args.b)
    m = band.materialize(spec)
    if args.method == "ryser":
        value = permanent_ryser(m)
    else:
        value = permanent_expansion(m)
    if args.format == "json":
        out = band.spec_to_json(spec)
        out.update(method=args.method, per=element_to_json(value))
        print(json.dumps(out))
    else:
        print(f"spec: n={spec.n} k={spec.k} l={spec.l} a={spec.a} b={spec.b}")
        print(f"method: {args.method}")
        print(f"per: {value}")
    return EXIT_OK


_TABLE_KEYS = {
    "menage-a": ("n", "per", "det", "even", "odd"),
    "menage-b": ("n", "per", "det", "even", "odd"),
    "excedance-k2": ("n", "T", "c", "even", "odd"),
}


def _emit_rows(keys, rows, fmt: str) -> None:
    if fmt == "json":
        for row in rows:
            obj = {keys[0]: row[0]}
            for key, value in zip(keys[1:], row[1:]):
                obj[key] = str(value)
            print(json.dumps(obj))
    else:
        print(",".join(keys))
        for row in rows:
            print(",".join(str(v) for v in row))


def _cmd_table(args) -> int:
    rows = permcount.family_table(args.family, args.n_max)
    for n, per, det, even, odd in rows:
        # boundary re-assertion before anything is printed
        if even + odd != per or even - odd != det or even < 0 or odd < 0:
            raise AssertionError(f"inconsistent row for n={n}")
    _emit_rows(_TABLE_KEYS[args.family], rows, args.format)
    return EXIT_OK


def _cmd_census(args) -> int:
    census = permcount.excedance_census(args.n)
    rows = [
        (k, census.per_coeffs[k - 1], census.det_coeffs[k - 1],
         census.even[k - 1], census.odd[k - 1])
        for k in range(1, census.n + 1)
    ]
    if args.format == "json":
        for row in rows:
            obj = {"n": census.n, "k": row[0]}
            for key, value in zip(("T", "c", "even", "odd"), row[1:]):
                obj[key] = str(value)
            print(json.dumps(obj))
    else:
        print("k,T,c,even,odd")
        for row in rows:
            print(",".join(str(v) for v in row))
    return EXIT_OK


def _cmd_check(args) -> int:
    report = checks.run_checks(args.level)
    for suite in report.suites:
        print(f"{suite.name}: {suite.cases} cases, {len(suite.failures)} failures")
    print(f"total: {report.cases} cases at level {report.level}")
    if not report.ok:
        print(f"FAIL {report.failures[0]}")
        return EXIT_CHECK_FAILED
    return EXIT_OK


def _cmd_bench(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",") if s]
    if not sizes or any(n < 1 for n in sizes):
        raise ValueError("sizes must be positive integers, comma-separated")
    print("n,closed_seconds,method,method_seconds,agree")
    for n in sizes:
        # the window saturates at the matrix edge, so clamping keeps the matrix
        spec = band.BandSpec(n, min(args.k, n), min(args.l, n), args.a, args.b)
        t0 = time.perf_counter()
        closed = band.det_closed(spec)
        t_closed = time.perf_counter() - t0
        m = band.materialize(spec)
        t0 = time.perf_counter()
        if args.method == "laplace":
            other = det_laplace(m)
        else:
            other = det_bareiss(m)
        t_other = time.perf_counter() - t0
        agree = closed == other
        print(f"{n},{t_closed:.6f},{args.method},{t_other:.6f},{str(agree).lower()}")
        if not agree:
            raise AssertionError(f"methods disagree at n={n}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="banddet",
        description="Closed-form determinants of binary band Toeplitz matrices "
        "and even/odd restricted-permutation censuses, in exact arithmetic.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("det", help="determinant of a band spec")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--a", type=int, required=True, help="off-band value")
    p.add_argument("--b", type=int, required=True, help="in-band value")
    p.add_argument(
        "--method",
        choices=("closed", "recurrence", "laplace", "bareiss"),
        default="closed",
    )
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(handler=_cmd_det)

    p = sub.add_parser("perm", help="permanent of a band spec")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--method", choices=("ryser", "expansion"), default="ryser")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(handler=_cmd_perm)

    p = sub.add_parser("table", help="census table of a named family")
    p.add_argument("family", choices=("menage-a", "menage-b", "excedance-k2"))
    p.add_argument("n_max", type=int)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(handler=_cmd_table)

    p = sub.add_parser("census", help="full weak-excedance census for one order")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(handler=_cmd_census)

    p = sub.add_parser("check", help="run the differential suites")
    p.add_argument("--level", choices=("quick", "full"), default="quick")
    p.set_defaults(handler=_cmd_check)

    p = sub.add_parser("bench", help="time the closed form against elimination")
    p.add_argument("sizes", help="comma-separated orders, e.g. 64,256,1024")
    p.add_argument("--method", choices=("bareiss", "laplace"), default="bareiss")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--l", type=int, default=1)
    p.add_argument("--a", type=int, default=1)
    p.add_argument("--b", type=int, default=2)
    p.set_defaults(handler=_cmd_bench)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except SizeLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (ValueError, MixedRingError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
