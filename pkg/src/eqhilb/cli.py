"""Command-line entry point.

Exit codes: 0 success, 1 verification mismatch, 2 usage error,
3 config parse error, 4 math-domain error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .global_series import ConfigError, assemble, load_config
from .local import (
    SUPPORTS,
    GroupAction,
    MalformedLog,
    closed_form_conjecture,
    closed_form_theorem2,
    line_local_series,
    origin_local_series,
)
from .motivic import MotivicClass
from .series import LogSeries, MotivicSeries, NonUnitConstantTerm, series_log
from .verify import SUITES, Report, run_check

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_CONFIG, EXIT_MATH = 0, 1, 2, 3, 4


def class_to_json(c: MotivicClass) -> list:
    return [[d, str(v)] for d, v in c.items()]


def series_to_json(s: MotivicSeries) -> dict:
    return {"order": s.order, "coefficients": [class_to_json(c) for c in s.coeffs]}


def log_to_json(lg: LogSeries) -> dict:
    return {"order": lg.order, "log": [[i, class_to_json(lg.coefficient(i))] for i in lg.support()]}


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _specialize(s: MotivicSeries) -> MotivicSeries:
    return MotivicSeries([c.euler() for c in s.coeffs], s.order)


def _emit_series(s: MotivicSeries, args) -> None:
    if args.euler:
        s = _specialize(s)
    print(_dump(series_to_json(s)) if args.format == "json" else str(s))


def _emit_log(lg: LogSeries, args) -> None:
    if args.euler:
        lg = LogSeries.from_classes({i: MotivicClass({0: lg.coefficient(i).euler()}) for i in lg.support()}, lg.order)
    print(_dump(log_to_json(lg)) if args.format == "json" else str(lg))


def _local_series(args) -> MotivicSeries:
    action = GroupAction(args.M, args.N, args.variant)
    if args.support == "line":
        return line_local_series(action, args.order)
    return origin_local_series(action, args.order)


def cmd_local(args) -> int:
    _emit_series(_local_series(args), args)
    return EXIT_OK


def cmd_log(args) -> int:
    _emit_log(series_log(_local_series(args)), args)
    return EXIT_OK


def cmd_closed_form(args) -> int:
    if args.conjecture:
        s = closed_form_conjecture(args.order)
    else:
        s = closed_form_theorem2(args.M, args.variant, args.support, args.order)
    _emit_series(s, args)
    return EXIT_OK


def cmd_global(args) -> int:
    spec = load_config(args.config, args.order)
    _emit_series(assemble(spec), args)
    return EXIT_OK


def _print_report(rep: Report, fmt: str) -> None:
    if fmt == "json":
        print(_dump(rep.to_dict()))
        return
    for c in rep.comparisons:
        print(f"{'ok  ' if c.ok else 'FAIL'} {c.label}: {c.actual}")
    for note in rep.notes:
        print(f"# {note}")
    bad = rep.first_failure()
    if bad is None:
        print(f"PASS {rep.check} ({len(rep.comparisons)} comparisons)")
    else:
        print(f"FAIL {rep.check}: first mismatch at {bad.label}: expected {bad.expected}, got {bad.actual}")


def cmd_verify(args) -> int:
    names = sorted(SUITES) if args.check == "all" else [args.check]
    ok = True
    for name in names:
        params = {}
        if args.order is not None and name not in ("log-tables", "stabilization"):
            params["order"] = args.order
        if name == "theorem2" and args.M is not None:
            params["Ms"] = tuple(args.M)
        if name == "remark1" and args.pair:
            params["pairs"] = tuple((M, n1, n2, args.order or 21) for M, n1, n2 in args.pair)
            params.pop("order", None)
        rep = run_check(name, **params)
        _print_report(rep, args.format)
        ok &= rep.passed
    return EXIT_OK if ok else EXIT_MISMATCH


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _pair(text: str) -> tuple:
    try:
        M, n1, n2 = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("expected M,N1,N2") from None
    if M < 1:
        raise argparse.ArgumentTypeError("M must be >= 1")
    return M, n1, n2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eqhilb",
        description="Generating series of classes of equivariant Hilbert schemes of points.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--euler", action="store_true", help="specialize L := 1 before rendering")

    action = argparse.ArgumentParser(add_help=False)
    action.add_argument("--M", type=_positive, default=1, help="order of the cyclic group")
    action.add_argument("--N", type=int, default=None, help="weight of y (default M-1)")
    action.add_argument("--variant", type=int, choices=(1, 2), default=1)
    action.add_argument("--support", choices=SUPPORTS, default="origin")
    action.add_argument("--order", type=_nonneg, default=12)

    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("local", parents=[common, action], help="local series by fixed-point enumeration")
    p.set_defaults(func=cmd_local)
    p = sub.add_parser("log", parents=[common, action], help="Log table of a local series")
    p.set_defaults(func=cmd_log)
    p = sub.add_parser("closed-form", parents=[common, action], help="product formulas for N = -1")
    p.add_argument("--conjecture", action="store_true", help="the conjectured product for M=3, N=1, variant 1")
    p.set_defaults(func=cmd_closed_form)
    p = sub.add_parser("global", parents=[common], help="assemble a global series from a strata config")
    p.add_argument("--config", required=True, help="JSON config path or bundled name (cp2-z3)")
    p.add_argument("--order", type=_nonneg, default=None, help="override the config's order")
    p.set_defaults(func=cmd_global)
    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("--check", required=True, choices=sorted(SUITES) + ["all"])
    p.add_argument("--order", type=_nonneg, default=None)
    p.add_argument("--M", type=_positive, nargs="+", default=None, help="group orders (theorem2)")
    p.add_argument("--pair", type=_pair, action="append", help="M,N1,N2 for remark1; repeatable")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "N", "absent") is None:
        args.N = args.M - 1
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (NonUnitConstantTerm, MalformedLog) as exc:
        print(f"math error: {exc}", file=sys.stderr)
        return EXIT_MATH


if __name__ == "__main__":
    sys.exit(main())
