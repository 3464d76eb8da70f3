"""Command-line interface.

Three subcommands:

* ``coeff``  - compute Taylor coefficients; JSON lines (default) or a table.
* ``trace``  - export the per-term summation trace of one coefficient as CSV.
* ``verify`` - run the self-check suites and print one PASS/FAIL line each.

Exit codes: 0 success, 1 verification failure (or --verify delta too
large), 2 domain error, 64 bad usage, 73 unwritable output file.  Output
is deterministic: identical invocations produce byte-identical bytes.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

import mpmath
from mpmath import workdps

from .coefficients import (
    DEFAULT_DIGITS,
    DEFAULT_MAX_TERMS,
    CoefficientQuery,
    CoefficientResult,
    compute_coefficient,
)
from .reference import taylor_coefficient_contour
from .summation import to_mpf
from .verification import available_suites, run_suite

__all__ = ["main", "OutputRecord"]

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_DOMAIN = 2
EXIT_USAGE = 64
EXIT_CANTCREAT = 73


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # bad flags -> 64, not argparse's default 2
        self.print_usage(sys.stderr)
        raise SystemExit(self.exit_with_usage(message))

    def exit_with_usage(self, message) -> int:
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        return EXIT_USAGE


@dataclass(frozen=True)
class OutputRecord:
    """One emitted coefficient: the query echo plus the numeric outcome,
    all numbers as decimal strings that round-trip at the requested
    precision."""

    family: str
    n: int
    a: str
    lam: str | None
    digits: int
    max_terms: int
    value: str
    error_estimate: str
    truncation_index: int
    terminated_by: str
    oracle_value: str | None = None
    oracle_delta: str | None = None

    def as_dict(self, include_oracle: bool = False) -> dict:
        d = {
            "family": self.family,
            "n": self.n,
            "a": self.a,
            "lambda": self.lam,
            "digits": self.digits,
            "max_terms": self.max_terms,
            "value": self.value,
            "error_estimate": self.error_estimate,
            "truncation_index": self.truncation_index,
            "terminated_by": self.terminated_by,
        }
        if include_oracle or self.oracle_value is not None:
            # keys appear exactly when --verify ran; null marks a skipped
            # comparison (reference summation needs |lambda| < 1)
            d["oracle_value"] = self.oracle_value
            d["oracle_delta"] = self.oracle_delta
        return d


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(
            f"expected a decimal or p/q rational, got {text!r}"
        )


def _n_range(text: str) -> list[int]:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo_i, hi_i = int(lo), int(hi)
            if hi_i < lo_i:
                raise ValueError
            return list(range(lo_i, hi_i + 1))
        return [int(text)]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected an integer or lo..hi range, got {text!r}"
        )


def _fmt_number(x, digits: int) -> str:
    return mpmath.nstr(x, digits, strip_zeros=True)


def _build_parser(default_digits: int) -> _Parser:
    parser = _Parser(prog="zetataylor", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_lambda=True):
        p.add_argument("--family", required=True, choices=["hurwitz", "riemann", "lerch"])
        p.add_argument("--n", required=True, type=_n_range, help="index k or range lo..hi")
        p.add_argument("--a", type=_fraction, default=None, help="shift a > 0 (decimal or p/q)")
        if with_lambda:
            p.add_argument("--lambda", dest="lam", type=_fraction, default=None,
                           help="lerch multiplier, |lambda| <= 1, lambda != 1")
        p.add_argument("--digits", type=int, default=default_digits)
        p.add_argument("--max-terms", type=int, default=DEFAULT_MAX_TERMS)

    coeff = sub.add_parser("coeff", help="compute coefficients")
    add_common(coeff)
    coeff.add_argument("--verify", action="store_true",
                       help="also run the contour reference and compare")
    coeff.add_argument("--format", choices=["json", "table"], default="json")

    trace = sub.add_parser("trace", help="export a per-term summation trace as CSV")
    add_common(trace)
    trace.add_argument("--out", required=True, help="output CSV path")

    verify = sub.add_parser("verify", help="run self-check suites")
    verify.add_argument("--suite", choices=list(available_suites()), default="all")
    verify.add_argument("--digits", type=int, default=default_digits)
    return parser


def _make_queries(args) -> list[CoefficientQuery]:
    family = args.family
    a = args.a
    if family == "riemann":
        if a is not None and a != 1:
            raise ValueError("the riemann family fixes a = 1")
        a = Fraction(1)
    elif a is None:
        a = Fraction(1)
    lam = getattr(args, "lam", None)
    if family != "lerch" and lam is not None:
        raise ValueError("--lambda is only meaningful for the lerch family")
    return [
        CoefficientQuery(family, n, a, lam, args.digits, args.max_terms, trace=True)
        for n in args.n
    ]


def _oracle_compare(result: CoefficientResult):
    q = result.query
    if q.family == "lerch" and abs(q.lam) >= 1:
        return None, None  # reference summation needs |lambda| < 1; skip
    fam = "lerch" if q.family == "lerch" else "hurwitz"
    oracle = taylor_coefficient_contour(fam, q.n, q.a, q.lam, digits=q.digits)
    with workdps(q.digits):
        delta = result.value - oracle.value
        bound = result.error_estimate + oracle.error_estimate
        return oracle, (delta, bound)


def _cmd_coeff(args) -> int:
    queries = _make_queries(args)
    records = []
    failed = False
    for q in queries:
        result = compute_coefficient(q)
        oracle_value = oracle_delta = None
        if args.verify:
            oracle, cmp = _oracle_compare(result)
            if oracle is not None:
                delta, bound = cmp
                oracle_value = _fmt_number(oracle.value, q.digits)
                oracle_delta = _fmt_number(delta, q.digits)
                if abs(delta) > bound:
                    failed = True
        records.append(
            OutputRecord(
                family=q.family,
                n=q.n,
                a=str(q.a),
                lam=str(q.lam) if q.lam is not None else None,
                digits=q.digits,
                max_terms=q.max_terms,
                value=_fmt_number(result.value, q.digits),
                error_estimate=_fmt_number(result.error_estimate, q.digits),
                truncation_index=result.series.truncation_index,
                terminated_by=result.series.terminated_by,
                oracle_value=oracle_value,
                oracle_delta=oracle_delta,
            )
        )
    if args.format == "json":
        for rec in records:
            print(json.dumps(rec.as_dict(include_oracle=args.verify)))
    else:
        head = ["family", "n", "a", "lambda", "value", "error_estimate",
                "truncation_index", "terminated_by"]
        if args.verify:
            head += ["oracle_value", "oracle_delta"]
        rows = [head]
        for rec in records:
            row = [rec.family, str(rec.n), rec.a, rec.lam or "-", rec.value,
                   rec.error_estimate, str(rec.truncation_index), rec.terminated_by]
            if args.verify:
                row += [rec.oracle_value or "-", rec.oracle_delta or "-"]
            rows.append(row)
        widths = [max(len(r[i]) for r in rows) for i in range(len(head))]
        for r in rows:
            print("  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip())
    return EXIT_VERIFY_FAILED if failed else EXIT_OK


def _cmd_trace(args) -> int:
    queries = _make_queries(args)
    if len(queries) != 1:
        raise ValueError("trace exports exactly one coefficient; pass a single --n")
    q = queries[0]
    result = compute_coefficient(q)
    lines = ["k,term,partial_sum"]
    for rec in result.series.trace:
        lines.append(
            f"{rec.k},{_fmt_number(rec.term, q.digits)},{_fmt_number(rec.partial_sum, q.digits)}"
        )
    s = result.series
    lines.append(
        f"# terminated_by={s.terminated_by},truncation_index={s.truncation_index},"
        f"error_estimate={_fmt_number(s.error_estimate, q.digits)}"
    )
    try:
        with open(args.out, "w", encoding="ascii", newline="") as fh:
            fh.write("\n".join(lines) + "\n")
    except OSError as exc:
        print(f"zetataylor: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_CANTCREAT
    return EXIT_OK


def _cmd_verify(args) -> int:
    ok = run_suite(args.suite, args.digits, sys.stdout)
    print("verify: all checks passed" if ok else "verify: FAILURES above")
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def main(argv=None) -> int:
    default_digits = DEFAULT_DIGITS
    env = os.environ.get("ZETA_DIGITS")
    if env:
        try:
            default_digits = int(env)
        except ValueError:
            print(f"zetataylor: ignoring non-integer ZETA_DIGITS={env!r}", file=sys.stderr)
    parser = _build_parser(default_digits)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        if args.command == "coeff":
            return _cmd_coeff(args)
        if args.command == "trace":
            return _cmd_trace(args)
        return _cmd_verify(args)
    except ValueError as exc:
        print(f"zetataylor: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
