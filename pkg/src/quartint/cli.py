"""Command-line front end.

    quartint coeffs   --m 2 --format csv
    quartint verify   --property unimodal --max-m 200
    quartint verify   --all
    quartint scan     ilogconcave --max-m 40 --depth 5
    quartint scan     hypineq --max-m 40 --x-grid 0.5:5:0.25
    quartint tvalues  --max-m 10 --format json
    quartint integral --m 1 --a 1 --tol 1e-12

Exit codes: 0 pass, 1 mathematical counterexample, 2 usage/config error,
3 internal or convergence error.  Machine output keeps every rational as a
"p/q" string; floats appear only in explicitly approximate fields.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .coefficients import coefficient_row
from .conjectures import ScanConfig, scan_hyp_inequality, scan_infinite_logconcavity
from .exact import rational_str
from .quadrature import QuadratureConvergenceError, evaluate_quartic_integral
from .reports import RunReport, utc_now_iso
from .suites import SUITES, run_suite
from .tfunction import t_bundle

EXIT_PASS = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {text}")
    return value


def _nonnegative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be a nonnegative integer, got {text}")
    return value


def _parse_grid(text: str) -> tuple[Fraction, ...]:
    """lo:hi:step with exact decimal/rational bounds, e.g. 0.5:5:0.25."""
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError(f"grid must look like lo:hi:step, got {text!r}")
    lo, hi, step = (Fraction(p) for p in parts)
    if step <= 0 or hi < lo:
        raise ValueError(f"bad grid bounds in {text!r}")
    grid = []
    x = lo
    while x <= hi:
        grid.append(x)
        x += step
    return tuple(grid)


def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("QUARTINT_JOBS", "1")))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quartint", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_coeffs = sub.add_parser("coeffs", help="print one coefficient row d_0(m)..d_m(m)")
    p_coeffs.add_argument("--m", type=_nonnegative_int, required=True)
    p_coeffs.add_argument("--format", choices=("table", "csv", "json"), default="csv")

    p_verify = sub.add_parser("verify", help="run a named verification suite")
    group = p_verify.add_mutually_exclusive_group(required=True)
    group.add_argument("--property", choices=sorted(SUITES))
    group.add_argument("--all", action="store_true")
    p_verify.add_argument("--max-m", type=_positive_int, default=None)
    p_verify.add_argument("--max-n", type=_positive_int, default=None)
    p_verify.add_argument("--depth", type=_positive_int, default=3)
    p_verify.add_argument("--jobs", type=_positive_int, default=_default_jobs())
    p_verify.add_argument("--format", choices=("table", "json"), default="table")

    p_scan = sub.add_parser("scan", help="counterexample scans for the open conjectures")
    p_scan.add_argument("kind", choices=("ilogconcave", "hypineq"))
    p_scan.add_argument("--max-m", type=_positive_int, default=40)
    p_scan.add_argument("--depth", type=_positive_int, default=5)
    p_scan.add_argument("--x-grid", default="0.5:5:0.25")
    p_scan.add_argument("--stop-on-failure", action="store_true")
    p_scan.add_argument("--format", choices=("table", "json"), default="json")

    p_tvalues = sub.add_parser("tvalues", help="T(m) through every exact route")
    p_tvalues.add_argument("--max-m", type=_positive_int, required=True)
    p_tvalues.add_argument("--format", choices=("table", "csv", "json"), default="table")

    p_integral = sub.add_parser("integral", help="numeric quartic integral vs closed form")
    p_integral.add_argument("--m", type=_nonnegative_int, required=True)
    p_integral.add_argument("--a", type=float, required=True)
    p_integral.add_argument("--tol", type=float, default=1e-10)
    p_integral.add_argument("--format", choices=("table", "csv", "json"), default="table")

    return parser


def _cmd_coeffs(args) -> int:
    row = coefficient_row(args.m)
    strings = row.as_strings()
    if args.format == "csv":
        print(",".join(strings))
    elif args.format == "json":
        print(json.dumps(strings))
    else:
        for ell, s in enumerate(strings):
            print(f"{ell:4d}  {s}")
    return EXIT_PASS


def _cmd_verify(args) -> int:
    started = utc_now_iso()
    names = sorted(SUITES) if args.all else [args.property]
    results = []
    for name in names:
        results.extend(
            run_suite(name, max_m=args.max_m, max_n=args.max_n, depth=args.depth, jobs=args.jobs)
        )
    report = RunReport(
        command="verify",
        config={
            "properties": names,
            "max_m": args.max_m,
            "max_n": args.max_n,
            "depth": args.depth,
            "jobs": args.jobs,
        },
        results=tuple(results),
        started=started,
        finished=utc_now_iso(),
    )
    _emit_run_report(report, args.format)
    return EXIT_PASS if report.overall_passed else EXIT_COUNTEREXAMPLE


def _cmd_scan(args) -> int:
    started = utc_now_iso()
    if args.kind == "ilogconcave":
        cfg = ScanConfig(max_m=args.max_m, depth=args.depth, stop_on_failure=args.stop_on_failure)
        result = scan_infinite_logconcavity(cfg)
        config = {"kind": args.kind, "max_m": cfg.max_m, "depth": cfg.depth}
    else:
        grid = _parse_grid(args.x_grid)
        cfg = ScanConfig(max_m=args.max_m, x_grid=grid, stop_on_failure=args.stop_on_failure)
        result = scan_hyp_inequality(cfg)
        config = {"kind": args.kind, "max_m": cfg.max_m, "x_grid": [rational_str(x) for x in grid]}
    report = RunReport(
        command="scan",
        config=config,
        results=(result,),
        started=started,
        finished=utc_now_iso(),
    )
    _emit_run_report(report, args.format)
    return EXIT_PASS if report.overall_passed else EXIT_COUNTEREXAMPLE


def _cmd_tvalues(args) -> int:
    bundles = [t_bundle(m) for m in range(1, args.max_m + 1)]
    if args.format == "json":
        payload = {
            "schema_version": 1,
            "command": "tvalues",
            "limit": (2.0 - 2.0**0.5) / 2.0,
            "rows": [b.to_jsonable() for b in bundles],
        }
        print(json.dumps(payload, indent=2))
    elif args.format == "csv":
        print("m,direct,hypergeometric,integral,approx,limit_gap")
        for b in bundles:
            print(
                f"{b.m},{rational_str(b.direct)},{rational_str(b.hypergeometric)},"
                f"{rational_str(b.integral)},{float(b.direct)},{b.limit_gap}"
            )
    else:
        for b in bundles:
            print(f"T({b.m}) = {rational_str(b.direct)}  ~ {float(b.direct):.9f}  gap {b.limit_gap:.9f}")
    return EXIT_PASS


def _cmd_integral(args) -> int:
    result = evaluate_quartic_integral(args.m, args.a, args.tol)
    if args.format == "json":
        print(json.dumps(result.to_jsonable(), indent=2))
    elif args.format == "csv":
        print("m,a,numeric,closed_form,relative_error,evaluations")
        print(
            f"{result.m},{result.a},{result.numeric!r},{result.closed_form!r},"
            f"{result.relative_error!r},{result.evaluations}"
        )
    else:
        print(
            f"m={result.m} a={result.a}: numeric {result.numeric!r}, closed form "
            f"{result.closed_form!r}, relative error {result.relative_error:.3e}, "
            f"{result.evaluations} evaluations"
        )
    return EXIT_PASS


def _emit_run_report(report: RunReport, fmt: str) -> None:
    if fmt == "json":
        print(report.to_json())
        return
    for r in report.results:
        print(f"{r.verdict():4s}  {r.property:28s}  {r.range}  [{r.elapsed:.2f}s]")
        for note in r.notes:
            print(f"      note: {note}")
        if r.counterexample is not None:
            print(f"      counterexample at {r.counterexample.location}: {r.counterexample.values}")
    print(f"overall: {'pass' if report.overall_passed else 'FAIL'}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "coeffs": _cmd_coeffs,
        "verify": _cmd_verify,
        "scan": _cmd_scan,
        "tvalues": _cmd_tvalues,
        "integral": _cmd_integral,
    }
    try:
        return handlers[args.command](args)
    except QuadratureConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ArithmeticError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
