"""Command-line interface.

Subcommands:

* ``table``  -- emit T(2n,d) values for n <= max-n as json, csv, or latex;
* ``coeffs`` -- emit the depth-d coefficient row (the t(2j)t(2n-2j) shape);
* ``verify`` -- run an identity suite and emit a JSON report;
* ``eval``   -- numerically evaluate t(s_1,...,s_d) from the defining series.

Data goes to stdout, diagnostics (including timings) to stderr.  Exit codes:
0 success / all checks passed, 1 verification failure or divergent input,
2 usage error.  Rationals are serialized as decimal strings for numerator
and denominator, never as floats.  The environment variable TSUMS_PRECISION
overrides the default numeric precision (significant digits) of ``eval``
and the oracle suite; explicit ``--precision`` flags still win.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

import mpmath as mp

from .exact import PiPower
from .formulas import T_from_euler, coeff_row
from .oracle import DivergentSeriesError, TruncationParams, t_numeric
from .verify import SUITES, run_suite

__all__ = ["main", "console_main"]


def _env_precision() -> int | None:
    raw = os.environ.get("TSUMS_PRECISION")
    if raw is None:
        return None
    try:
        return max(10, int(raw))
    except ValueError:
        return None


def _latex_pi_power(x: PiPower) -> str:
    c = x.coeff
    if c == 0:
        return "0"
    sign = "-" if c < 0 else ""
    num, den = abs(c.numerator), c.denominator
    frac = f"\\frac{{{num}}}{{{den}}}" if den != 1 else f"{num}"
    return f"{sign}{frac}\\pi^{{{x.pi_exp}}}"


def _cmd_table(args) -> int:
    rows = []
    for n in range(1, args.max_n + 1):
        for d in range(1, n + 1):
            if args.depth is not None and d != args.depth:
                continue
            rows.append((n, d, T_from_euler(n, d)))
    if args.format == "json":
        payload = [
            {
                "weight": 2 * n,
                "depth": d,
                "coefficient": {
                    "num": str(v.coeff.numerator),
                    "den": str(v.coeff.denominator),
                },
                "pi_exp": v.pi_exp,
            }
            for n, d, v in rows
        ]
        print(json.dumps(payload, indent=2))
    elif args.format == "csv":
        print("weight,depth,num,den,pi_exp")
        for n, d, v in rows:
            print(f"{2*n},{d},{v.coeff.numerator},{v.coeff.denominator},{v.pi_exp}")
    else:  # latex
        for n, d, v in rows:
            print(f"T({2*n},{d}) = {_latex_pi_power(v)}")
    return 0


def _cmd_coeffs(args) -> int:
    row = coeff_row(args.depth)
    if args.format == "json":
        payload = {
            "depth": row.depth,
            "coefficients": [
                {"j": j, "num": str(c.numerator), "den": str(c.denominator)}
                for j, c in row.pairs
            ],
        }
        print(json.dumps(payload, indent=2))
    elif args.format == "csv":
        print("depth,j,num,den")
        for j, c in row.pairs:
            print(f"{row.depth},{j},{c.numerator},{c.denominator}")
    else:  # latex: T(2n,d) = c0 t(2n) + c1 t(2)t(2n-2) + ...
        parts = []
        for j, c in row.pairs:
            num, den = abs(c.numerator), c.denominator
            frac = f"\\frac{{{num}}}{{{den}}}" if den != 1 else f"{num}"
            if j == 0:
                term = f"{frac}t(2n)"
            else:
                term = f"{frac}t({2*j})t(2n-{2*j})"
            parts.append(("-" if c < 0 else "+", term))
        body = parts[0][1] if parts[0][0] == "+" else "-" + parts[0][1]
        for sign, term in parts[1:]:
            body += f" {sign} {term}"
        print(f"T(2n,{row.depth}) = {body}")
    return 0


def _cmd_verify(args) -> int:
    overrides = {
        "max_n": args.max_n,
        "max_d": args.max_d,
        "terms": args.terms,
        "dps": args.precision if args.precision is not None else _env_precision(),
        "num_vars": args.num_vars,
    }
    report = run_suite(args.suite, **overrides)
    print(json.dumps(report.to_dict(), indent=2))
    print(
        f"suite {report.suite}: {report.passed}/{report.total} passed "
        f"in {report.wall_time_s:.3f}s",
        file=sys.stderr,
    )
    return 0 if report.failed == 0 else 1


def _cmd_eval(args) -> int:
    try:
        exponents = [int(x) for x in args.t.split(",") if x.strip() != ""]
    except ValueError:
        print(f"error: cannot parse arguments {args.t!r}", file=sys.stderr)
        return 2
    dps = args.precision if args.precision is not None else (_env_precision() or 50)
    t0 = time.perf_counter()
    try:
        result = t_numeric(
            exponents,
            TruncationParams(terms=args.terms, tail_order=args.tail_order),
            dps=dps,
        )
    except DivergentSeriesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    label = ",".join(str(x) for x in exponents)
    print(
        f"t({label}) = {mp.nstr(result.value, 20)}  "
        f"err <= {mp.nstr(result.err, 3)}  terms = {args.terms}"
    )
    print(f"elapsed: {time.perf_counter() - t0:.3f}s", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tsums",
        description="Exact sums of multiple t-values at even arguments.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="emit the T(2n,d) value table")
    p.add_argument("--max-n", type=int, required=True, dest="max_n")
    p.add_argument("--depth", type=int, default=None, help="keep only this depth")
    p.add_argument("--format", choices=("json", "csv", "latex"), default="csv")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("coeffs", help="emit a fixed-depth coefficient row")
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--format", choices=("json", "csv", "latex"), default="csv")
    p.set_defaults(func=_cmd_coeffs)

    p = sub.add_parser("verify", help="run an identity verification suite")
    p.add_argument("--suite", choices=tuple(SUITES) + ("all",), required=True)
    p.add_argument("--max-n", type=int, default=None, dest="max_n")
    p.add_argument("--max-d", type=int, default=None, dest="max_d")
    p.add_argument("--terms", type=int, default=None)
    p.add_argument("--precision", type=int, default=None)
    p.add_argument("--num-vars", type=int, default=None, dest="num_vars")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("eval", help="evaluate t(s_1,...,s_d) numerically")
    p.add_argument("--t", required=True, help="comma-separated exponents, e.g. 2,2")
    p.add_argument("--terms", type=int, default=1_000_000)
    p.add_argument("--precision", type=int, default=None)
    p.add_argument("--tail-order", type=int, choices=(0, 1), default=1, dest="tail_order")
    p.set_defaults(func=_cmd_eval)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "table" and args.max_n < 1:
        print("error: --max-n must be >= 1", file=sys.stderr)
        return 2
    if args.command == "coeffs" and args.depth < 1:
        print("error: --depth must be >= 1", file=sys.stderr)
        return 2
    return args.func(args)


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
