"""Command-line front end.

Subcommands: ``check`` (hypothesis report), ``exact`` (integer coefficients
via the q-series oracle, cache-file format), ``rademacher`` (one partial sum
or the adaptively rounded integer), ``convergence`` (CSV of partial sums
against exact values over an (n, N) grid), ``asympt`` (leading-order
estimate).

Exit codes: 0 ok, 2 hypothesis failure, 3 not converged, 4 parse error,
5 I/O failure.
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass

from mpmath import mp

from .constants import check_hypotheses, derive_constants
from .precision import DEFAULT_PRECISION, working
from .qseries import CacheError, exact_coefficients, write_coefficient_cache
from .rademacher import (
    DEFAULT_N_CAP,
    NotConvergedError,
    RademacherEvaluator,
    admissible_n,
)
from .shapes import FrameShape, ShapeError, format_shape, parse_shape

EXIT_OK = 0
EXIT_HYPOTHESES = 2
EXIT_NOT_CONVERGED = 3
EXIT_PARSE = 4
EXIT_IO = 5

_PARTIAL_DIGITS = 25


@dataclass(frozen=True)
class ConvergenceReport:
    """Rows (n, N, partial, exact, abs_error) over a full (n, N) grid.

    The error column is recomputed from the other two when the report is
    built, never taken from a caller.
    """

    shape: FrameShape
    rows: tuple

    def write_csv(self, stream) -> None:
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(["shape", "n", "N", "partial_sum", "exact", "abs_error"])
        name = format_shape(self.shape)
        for n, N, partial, exact, abs_error in self.rows:
            writer.writerow(
                [
                    name,
                    n,
                    N,
                    mp.nstr(partial, _PARTIAL_DIGITS),
                    exact,
                    mp.nstr(abs_error, _PARTIAL_DIGITS),
                ]
            )


def build_convergence_report(
    shape: FrameShape,
    n_max: int,
    N_max: int,
    precision: int = DEFAULT_PRECISION,
) -> ConvergenceReport:
    """Partial sums d(n, N) against the exact oracle for n up to n_max
    (restricted to n above the expansion offset) and N up to N_max."""
    consts = derive_constants(shape)
    exact = exact_coefficients(shape, n_max)
    evaluator = RademacherEvaluator(shape, precision, consts=consts)
    rows = []
    with working(precision):
        for n in range(admissible_n(consts), n_max + 1):
            table = evaluator.term_table(n, N_max)
            target = exact[n]
            for N, partial in enumerate(table.partial_sums(), start=1):
                rows.append((n, N, partial, target, abs(partial - target)))
    return ConvergenceReport(shape=shape, rows=tuple(rows))


class _Parser(argparse.ArgumentParser):
    # spec reserves exit code 2 for hypothesis failures; all parse-time
    # problems (flags and shape strings alike) leave with 4
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="etaq",
        description="Fourier coefficients of eta-quotients: exact q-series "
        "oracle and convergent series evaluation.",
        epilog="exit codes: 0 ok, 2 hypothesis failure, 3 not converged, "
        "4 parse error, 5 I/O failure",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, precision=True):
        p.add_argument("shape", help="frame shape, e.g. '1^-3 4^1'")
        if precision:
            p.add_argument(
                "--precision",
                type=int,
                default=DEFAULT_PRECISION,
                metavar="P",
                help="working precision in decimal digits (default 50)",
            )

    p_check = sub.add_parser("check", help="report on the convergence hypotheses")
    add_common(p_check, precision=False)

    p_exact = sub.add_parser("exact", help="exact integer coefficients")
    add_common(p_exact, precision=False)
    p_exact.add_argument("--nmax", type=int, required=True, help="largest n")
    p_exact.add_argument(
        "--cache", metavar="PATH", help="write/extend a coefficient cache file"
    )

    p_rad = sub.add_parser(
        "rademacher", help="partial sum d(n,N) or adaptively rounded integer"
    )
    add_common(p_rad)
    p_rad.add_argument("-n", type=int, required=True, help="coefficient index")
    p_rad.add_argument(
        "--N", type=int, default=None, help="fixed N: print d(n,N) instead of rounding"
    )
    p_rad.add_argument(
        "--Nmax",
        type=int,
        default=DEFAULT_N_CAP,
        help=f"term cap for adaptive rounding (default {DEFAULT_N_CAP})",
    )
    p_rad.add_argument(
        "--force",
        action="store_true",
        help="evaluate even if the hypotheses fail (result unguaranteed)",
    )

    p_conv = sub.add_parser(
        "convergence", help="CSV of partial sums vs exact values on an (n,N) grid"
    )
    add_common(p_conv)
    p_conv.add_argument("--nmax", type=int, default=20, help="largest n (default 20)")
    p_conv.add_argument("--Nmax", type=int, default=100, help="largest N (default 100)")
    p_conv.add_argument("--out", metavar="PATH", help="CSV output path (default stdout)")
    p_conv.add_argument(
        "--force",
        action="store_true",
        help="evaluate even if the hypotheses fail (result unguaranteed)",
    )

    p_asy = sub.add_parser("asympt", help="leading-order estimate at one n")
    add_common(p_asy)
    p_asy.add_argument("-n", type=int, required=True, help="coefficient index")
    p_asy.add_argument(
        "--epsilon",
        type=float,
        default=1e-6,
        help="degeneracy threshold for the front sum (default 1e-6)",
    )
    p_asy.add_argument(
        "--force",
        action="store_true",
        help="evaluate even if the hypotheses fail (result unguaranteed)",
    )
    return parser


def _cmd_check(args) -> int:
    shape = parse_shape(args.shape)
    consts = derive_constants(shape)
    report = check_hypotheses(shape)
    print(f"shape: {format_shape(shape)}")
    print(f"n0 = {consts.n0}")
    print(f"c1 = {report.c1} (positive: {'yes' if report.c1_positive else 'no'})")
    print(
        f"min g(k), k = 1..{consts.period}: {report.min_g} "
        f"(non-negative: {'yes' if report.g_nonnegative else 'no'})"
    )
    print(f"hypotheses satisfied: {'yes' if report.satisfied else 'no'}")
    return EXIT_OK if report.satisfied else EXIT_HYPOTHESES


def _cmd_exact(args) -> int:
    shape = parse_shape(args.shape)
    if args.nmax < 0:
        raise ShapeError(f"--nmax must be >= 0, got {args.nmax}")
    coeffs = exact_coefficients(shape, args.nmax)
    n0 = derive_constants(shape).n0
    print(f"# etaq {format_shape(shape)} n0={n0.numerator}/{n0.denominator}")
    for n, d in enumerate(coeffs):
        print(f"{n} {d}")
    if args.cache:
        write_coefficient_cache(args.cache, shape, coeffs)
    return EXIT_OK


def _check_hypotheses_or_force(shape, force) -> int | None:
    report = check_hypotheses(shape)
    if report.satisfied:
        return None
    if not force:
        print(
            f"error: shape {format_shape(shape)} fails the convergence "
            "hypotheses; rerun with --force for an unguaranteed value",
            file=sys.stderr,
        )
        return EXIT_HYPOTHESES
    print(
        "warning: hypotheses not satisfied; the result is unguaranteed",
        file=sys.stderr,
    )
    return None


def _cmd_rademacher(args) -> int:
    shape = parse_shape(args.shape)
    failed = _check_hypotheses_or_force(shape, args.force)
    if failed is not None:
        return failed
    evaluator = RademacherEvaluator(shape, args.precision, force=True)
    if args.N is not None:
        value = evaluator.partial_sum(args.n, args.N)
        print(f"d({args.n},{args.N}) = {mp.nstr(value, _PARTIAL_DIGITS)}")
        return EXIT_OK
    try:
        value = evaluator.estimate_coefficient(args.n, args.Nmax)
    except NotConvergedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_CONVERGED
    print(value)
    return EXIT_OK


def _cmd_convergence(args) -> int:
    shape = parse_shape(args.shape)
    failed = _check_hypotheses_or_force(shape, args.force)
    if failed is not None:
        return failed
    report = build_convergence_report(shape, args.nmax, args.Nmax, args.precision)
    if args.out:
        with open(args.out, "w", encoding="ascii", newline="") as fh:
            report.write_csv(fh)
    else:
        report.write_csv(sys.stdout)
    return EXIT_OK


def _cmd_asympt(args) -> int:
    shape = parse_shape(args.shape)
    failed = _check_hypotheses_or_force(shape, args.force)
    if failed is not None:
        return failed
    evaluator = RademacherEvaluator(shape, args.precision, force=True)
    data = evaluator.asymptotic_estimate(args.n, args.epsilon)
    print(f"shape: {format_shape(shape)}  n = {args.n}")
    print(f"leading k set: {{{', '.join(str(k) for k in data.leading_set)}}}")
    print(f"max c3(k)/k^2 = {data.c3_max}")
    print(f"front sum = {mp.nstr(data.front_sum, _PARTIAL_DIGITS)}")
    print(f"estimate = {mp.nstr(data.estimate, _PARTIAL_DIGITS)}")
    if data.degenerate:
        print(
            f"note: |front sum| < {args.epsilon}; the estimate is degenerate "
            "and says nothing about the true coefficient"
        )
    return EXIT_OK


_COMMANDS = {
    "check": _cmd_check,
    "exact": _cmd_exact,
    "rademacher": _cmd_rademacher,
    "convergence": _cmd_convergence,
    "asympt": _cmd_asympt,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except ShapeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (OSError, CacheError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
