"""Command-line front end: compute, verify, and benchmark.

Subcommands: ``bern`` (Bernoulli numbers), ``sum`` (power sums by three
methods), ``poly`` (power-sum and Bernoulli polynomials), ``solve``
(difference-equation solutions plus the Bernoulli numbers extracted
from them), ``verify`` (the identity suite), and ``bench`` (naive
summation against the closed form).

Output is ``plain`` text or a single ``structured`` JSON document; in
structured mode every exact value travels as a string in the rational
interchange form, never as a native number. Exit status is 0 on
success, 1 when a verification or benchmark cross-check fails, and 2
on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import timeit

from . import identities
from .bernoulli import Convention, bernoulli_numbers
from .exactnum import format_rational
from .faulhaber import (
    bernoulli_polynomial,
    faulhaber_poly,
    faulhaber_variant_eval,
    sum_powers_closed,
    sum_powers_naive,
)
from .feqsolver import extract_bernoulli, solve_monomial, solve_shifted

__all__ = ["main", "entry", "build_parser", "render_structured"]

VERIFY_SUITES = (
    "all",
    "lemma1",
    "faulhaber",
    "differences",
    "binomial-identity",
    "extraction",
    "series",
)

BENCH_NOTE = "timings are machine-dependent; reported time is the minimum over repetitions"


def render_structured(doc: dict) -> str:
    """Canonical JSON rendering; re-rendering a parsed document is byte-identical."""
    return json.dumps(doc, indent=2, sort_keys=True)


def _emit(args: argparse.Namespace, lines: list[str], doc: dict) -> None:
    if args.output == "structured":
        print(render_structured(doc))
    else:
        for line in lines:
            print(line)


def _rational_list(values) -> str:
    return "[" + ", ".join(format_rational(v) for v in values) + "]"


def _nonnegative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def _positive_int(text: str) -> int:
    value = _nonnegative_int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _int_list(text: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("need at least one value of n")
    if any(v < 0 for v in values):
        raise argparse.ArgumentTypeError("all values of n must be >= 0")
    return values


def _usage_error(message: str) -> int:
    print(f"usage error: {message}", file=sys.stderr)
    return 2


def cmd_bern(args: argparse.Namespace) -> int:
    conv = Convention(args.convention)
    values = bernoulli_numbers(conv, args.upto)
    lines = [f"{j}: {format_rational(v)}" for j, v in enumerate(values)]
    doc = {
        "command": "bern",
        "convention": conv.value,
        "upto": args.upto,
        "values": [format_rational(v) for v in values],
    }
    _emit(args, lines, doc)
    return 0


def cmd_sum(args: argparse.Namespace) -> int:
    if args.method == "eq7" and args.p < 1:
        return _usage_error(
            "method eq7 requires p >= 1: the minus-convention variant "
            "is stated only for positive powers"
        )
    if args.method == "naive":
        result = sum_powers_naive(args.n, args.p)
    elif args.method == "eq2":
        result = sum_powers_closed(args.n, args.p)
    else:
        result = faulhaber_variant_eval(args.n, args.p)
    doc = {
        "command": "sum",
        "method": args.method,
        "n": str(args.n),
        "p": args.p,
        "result": str(result),
    }
    _emit(args, [str(result)], doc)
    return 0


def cmd_poly(args: argparse.Namespace) -> int:
    if args.kind == "faulhaber-minus":
        p = faulhaber_poly(args.k, Convention.MINUS)
    elif args.kind == "faulhaber-plus":
        p = faulhaber_poly(args.k, Convention.PLUS)
    else:
        p = bernoulli_polynomial(args.k)
    doc = {
        "command": "poly",
        "kind": args.kind,
        "k": args.k,
        "human": str(p),
        "coefficients": p.coefficient_strings(),
    }
    _emit(args, [str(p)], doc)
    return 0


def cmd_solve(args: argparse.Namespace) -> int:
    if args.shifted:
        sol = solve_shifted(args.k)
        conv = Convention.PLUS
    else:
        sol = solve_monomial(args.k)
        conv = Convention.MINUS
    extracted = extract_bernoulli(sol, conv)
    lines = [
        f"coefficients: {_rational_list(sol.coeffs)}",
        f"normalization: {sol.normalization}",
        f"bernoulli ({conv.value}): {_rational_list(extracted)}",
    ]
    doc = {
        "command": "solve",
        "k": args.k,
        "shifted": args.shifted,
        "coefficients": [format_rational(c) for c in sol.coeffs],
        "normalization": sol.normalization,
        "bernoulli_convention": conv.value,
        "bernoulli": [format_rational(b) for b in extracted],
    }
    _emit(args, lines, doc)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    suite = args.suite
    if suite == "all":
        reports = identities.run_all(
            m_max=args.m_max,
            n_max=args.n_max,
            p_max=args.p_max,
            k_max=args.k_max,
            order=args.order,
        )
    elif suite == "lemma1":
        reports = [identities.check_lemma1(args.m_max)]
    elif suite == "faulhaber":
        reports = [
            identities.check_faulhaber(args.n_max, args.p_max, "eq2"),
            identities.check_faulhaber(args.n_max, args.p_max, "eq7"),
        ]
    elif suite == "differences":
        reports = [identities.check_difference_properties(args.k_max)]
    elif suite == "binomial-identity":
        reports = [identities.check_binomial_f_identity(max(args.k_max, 1))]
    elif suite == "extraction":
        reports = [identities.check_extraction_props(args.k_max)]
    else:
        reports = [identities.check_series_vs_recursion(args.order)]
    all_pass = all(r.passed for r in reports)
    lines = [r.render() for r in reports]
    doc = {
        "command": "verify",
        "suite": suite,
        "all_pass": all_pass,
        "reports": [r.to_doc() for r in reports],
    }
    _emit(args, lines, doc)
    return 0 if all_pass else 1


def _time_min(fn, repetitions: int) -> float:
    return min(timeit.repeat(fn, number=1, repeat=repetitions))


def cmd_bench(args: argparse.Namespace) -> int:
    p, repetitions = args.p, args.repetitions
    rows = []
    for n in args.n:
        naive_value = sum_powers_naive(n, p)
        closed_value = sum_powers_closed(n, p)
        if naive_value != closed_value:
            print(
                f"benchmark aborted: methods disagree at n={n}, p={p}: "
                f"naive={naive_value} closed={closed_value}",
                file=sys.stderr,
            )
            return 1
        naive_s = _time_min(lambda: sum_powers_naive(n, p), repetitions)
        closed_s = _time_min(lambda: sum_powers_closed(n, p), repetitions)
        rows.append(
            {
                "n": str(n),
                "value": str(naive_value),
                "naive_seconds": naive_s,
                "closed_seconds": closed_s,
                "ratio": naive_s / max(closed_s, 1e-12),
            }
        )
    lines = [
        f"power-sum benchmark: p={p}, repetitions={repetitions} ({BENCH_NOTE})",
        f"{'n':>14} {'naive_s':>12} {'closed_s':>12} {'ratio':>12}",
    ]
    for row in rows:
        lines.append(
            f"{row['n']:>14} {row['naive_seconds']:>12.6f} "
            f"{row['closed_seconds']:>12.6f} {row['ratio']:>12.1f}"
        )
    doc = {
        "command": "bench",
        "p": p,
        "repetitions": repetitions,
        "note": BENCH_NOTE,
        "rows": rows,
    }
    _emit(args, lines, doc)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bernsum",
        description="Exact Bernoulli numbers, power sums, and difference-equation solving.",
    )
    parser.add_argument(
        "--output",
        choices=("plain", "structured"),
        default="plain",
        help="plain text, or one machine-readable JSON document (exact values as strings)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_bern = sub.add_parser("bern", help="print B_0..B_upto for one convention")
    p_bern.add_argument("convention", choices=("minus", "plus"))
    p_bern.add_argument("upto", type=_nonnegative_int)
    p_bern.set_defaults(handler=cmd_bern)

    p_sum = sub.add_parser("sum", help="sum of i^p for i = 1..n")
    p_sum.add_argument("n", type=_nonnegative_int, help="upper limit (any size)")
    p_sum.add_argument("p", type=_nonnegative_int, help="power")
    p_sum.add_argument(
        "--method",
        choices=("naive", "eq2", "eq7"),
        default="eq2",
        help="naive summation, closed form at n (eq2), or the variant at n+1 (eq7, needs p >= 1)",
    )
    p_sum.set_defaults(handler=cmd_sum)

    p_poly = sub.add_parser("poly", help="print a power-sum or Bernoulli polynomial")
    p_poly.add_argument("kind", choices=("faulhaber-minus", "faulhaber-plus", "bernoulli"))
    p_poly.add_argument("k", type=_nonnegative_int)
    p_poly.set_defaults(handler=cmd_poly)

    p_solve = sub.add_parser(
        "solve", help="minimal-degree solution of f(x) + x^k = f(x+1) and extracted Bernoulli numbers"
    )
    p_solve.add_argument("k", type=_nonnegative_int)
    p_solve.add_argument(
        "--shifted",
        action="store_true",
        help="solve f(x) + (x+1)^k = f(x+1) instead (extracts the plus convention)",
    )
    p_solve.set_defaults(handler=cmd_solve)

    p_verify = sub.add_parser("verify", help="run identity checks; nonzero exit on any failure")
    p_verify.add_argument("suite", choices=VERIFY_SUITES)
    p_verify.add_argument("--m-max", type=_nonnegative_int, default=identities.DEFAULT_RANGES["m_max"])
    p_verify.add_argument("--n-max", type=_nonnegative_int, default=identities.DEFAULT_RANGES["n_max"])
    p_verify.add_argument("--p-max", type=_nonnegative_int, default=identities.DEFAULT_RANGES["p_max"])
    p_verify.add_argument("--k-max", type=_nonnegative_int, default=identities.DEFAULT_RANGES["k_max"])
    p_verify.add_argument("--order", type=_nonnegative_int, default=identities.DEFAULT_RANGES["order"])
    p_verify.set_defaults(handler=cmd_verify)

    p_bench = sub.add_parser("bench", help="time naive summation against the closed form")
    p_bench.add_argument("--n", type=_int_list, required=True, help="comma-separated list of n values")
    p_bench.add_argument("--p", type=_positive_int, required=True)
    p_bench.add_argument("--repetitions", type=_positive_int, default=3)
    p_bench.set_defaults(handler=cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    # Lift the str<->int conversion guard so n may have any number of digits.
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits itself on usage errors and --help
        code = exc.code
        if code is None:
            return 0
        return code if isinstance(code, int) else 2
    return args.handler(args)


def entry() -> None:
    sys.exit(main())
