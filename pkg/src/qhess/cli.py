"""Command-line frontend.

Subcommands: poincare, csf, expand, verify, conjecture-h2, enumerate.
Exit codes: 0 success, 1 verification failure, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import engine as _engine
from .chromatic import DEFAULT_ORACLE_BOUND, OracleBoundError, csf
from .hessfn import (
    HessenbergError,
    OperatorError,
    enumerate_generalized,
    enumerate_initial_segment,
    enumerate_on_domain,
    enumerate_ordinary,
    parse as parse_fn,
)
from .qpoly import ExactDivisionError
from .symfunc import DegreeBoundError, SymFunc
from .verify import SWEEPS, run_checks

USAGE_ERROR = 2
CHECK_FAILURE = 1


def _dump_json(data) -> str:
    return json.dumps(data, separators=(",", ":"))


def _print_symfunc(f: SymFunc):
    print(str(f))


def _cmd_poincare(args) -> int:
    h = parse_fn(args.function)
    if args.algorithm == "alg2" and not h.has_initial_segment_domain:
        print(
            f"error: alg2 needs an initial-segment domain, got I={list(h.domain)}",
            file=sys.stderr,
        )
        return USAGE_ERROR
    if args.algorithm in ("alg1", "admissible") and not h.is_ordinary:
        print(f"error: {args.algorithm} needs an ordinary function", file=sys.stderr)
        return USAGE_ERROR
    if args.algorithm == "admissible" and not h.is_irreducible:
        print("error: admissible needs an irreducible function", file=sys.stderr)
        return USAGE_ERROR
    result = _engine.compute(h, args.algorithm)
    value = result.value
    if args.basis == "e":
        value = value.omega()
    elif args.basis == "m":
        value = value.to_monomial()
    elif args.basis == "s":
        value = value.to_schur()
    if args.format == "json":
        data = result.to_json()
        data["value"] = value.to_json()
        print(_dump_json(data))
    else:
        _print_symfunc(value)
    return 0


def _cmd_csf(args) -> int:
    h = parse_fn(args.function)
    oracle = csf(h, args.bound)
    if args.basis == "e":
        engine_value = _engine.poincare_general(h).omega()
        if engine_value.to_monomial() != oracle:
            print(
                "MISMATCH: engine value and coloring oracle disagree on "
                f"{h.to_text()}",
                file=sys.stderr,
            )
            return CHECK_FAILURE
        out = engine_value
    else:
        out = oracle
    if args.format == "json":
        print(_dump_json(out.to_json()))
    else:
        _print_symfunc(out)
    return 0


def _cmd_expand(args) -> int:
    if args.file == "-":
        raw = sys.stdin.read()
    else:
        with open(args.file) as fh:
            raw = fh.read()
    f = SymFunc.from_json(json.loads(raw))
    out = f.to_schur(args.bound) if args.to == "s" else f.to_monomial(args.bound)
    print(_dump_json(out.to_json()))
    return 0


def _cmd_verify(args) -> int:
    names = args.checks or ["all"]
    reports = run_checks(names, max_n=args.max_n, jobs=args.jobs)
    if args.format == "json":
        print(_dump_json([r.to_json() for r in reports]))
    else:
        for report in reports:
            print(report.summary())
    return 0 if all(r.passed for r in reports) else CHECK_FAILURE


def _cmd_conjecture(args) -> int:
    report = run_checks(["conjecture-h2"], max_n=args.max_n, jobs=args.jobs)[0]
    if args.format == "json":
        print(_dump_json(report.to_json()))
    else:
        print(report.summary())
    return 0 if report.passed else CHECK_FAILURE


def _cmd_enumerate(args) -> int:
    if args.domain is not None:
        domain = tuple(int(d) for d in args.domain.split(",")) if args.domain else ()
        stream = enumerate_on_domain(args.n, domain)
    elif args.kind == "ordinary":
        stream = enumerate_ordinary(args.n)
    elif args.kind == "initial-segment":
        stream = enumerate_initial_segment(args.n)
    else:
        stream = enumerate_generalized(args.n)
    for h in stream:
        print(h.to_text())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qhess",
        description=(
            "Exact S_n-equivariant Poincare polynomials of generalized "
            "Hessenberg varieties, with a chromatic-function cross-check."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poincare", help="compute the equivariant Poincare polynomial")
    p.add_argument("function", help='e.g. "3,3,3" or "n=4; I=1,2; h=2,4,4"')
    p.add_argument(
        "--algorithm",
        choices=("auto", "alg1", "alg2", "admissible"),
        default="auto",
    )
    p.add_argument("--basis", choices=("h", "e", "m", "s"), default="h")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_poincare)

    p = sub.add_parser("csf", help="chromatic quasi-symmetric function (oracle)")
    p.add_argument("function")
    p.add_argument("--basis", choices=("m", "e"), default="m")
    p.add_argument("--bound", type=int, default=DEFAULT_ORACLE_BOUND)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_csf)

    p = sub.add_parser("expand", help="convert a JSON symmetric function between bases")
    p.add_argument("file", help="path to a SymFunc JSON file, or - for stdin")
    p.add_argument("--to", choices=("m", "s"), default="m")
    p.add_argument("--bound", type=int, default=9)
    p.set_defaults(func=_cmd_expand)

    p = sub.add_parser("verify", help="run verification sweeps")
    p.add_argument(
        "checks",
        nargs="*",
        metavar="CHECK",
        help=f"any of: all, {', '.join(sorted(SWEEPS))}",
    )
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("conjecture-h2", help="scan the two-row coefficient conjecture")
    p.add_argument("--max-n", type=int, default=9)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_conjecture)

    p = sub.add_parser("enumerate", help="list Hessenberg functions")
    p.add_argument("n", type=int)
    p.add_argument(
        "--kind",
        choices=("ordinary", "generalized", "initial-segment"),
        default="ordinary",
    )
    p.add_argument("--domain", default=None, help='fixed domain, e.g. "1,2" or ""')
    p.set_defaults(func=_cmd_enumerate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (
        HessenbergError,
        OperatorError,
        OracleBoundError,
        DegreeBoundError,
        KeyError,
        ValueError,
        OSError,
        json.JSONDecodeError,
    ) as exc:
        message = exc.args[0] if exc.args else exc
        print(f"error: {message}", file=sys.stderr)
        return USAGE_ERROR
    except ExactDivisionError as exc:
        print(f"internal error (exact division failed): {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
