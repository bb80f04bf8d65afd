"""``updown`` command-line interface.

Exit codes: 0 success, 1 usage or precondition error, 2 a mathematical
disagreement or an input word failing its class predicate.
"""

from __future__ import annotations

import argparse
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterator, Optional, Sequence

from . import closed_form, enumeration, poly_exact, series_engine
from .enumeration import Word, WordClass
from .errors import LengthOneExcluded, NotUpDown, NotWeaklyUpDown, UpDownError
from .report import (
    FORMATS,
    CheckReport,
    EngineReport,
    render_csv,
    render_json,
    render_records,
    render_reports,
)

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH = 0, 1, 2

COUNT_ENGINES = ("closed", "sinform", "series", "dp", "brute", "auto")
CYCLIC_ENGINES = ("closed", "series", "newton", "dp", "brute", "auto")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def updown_value(k: int, n: int, engine: str, budget: int = enumeration.DEFAULT_BUDGET) -> int:
    if engine in ("closed", "sinform") and k < 2:
        raise UsageError(f"engine {engine} requires k >= 2")
    if engine == "closed":
        return closed_form.closed_updown(k, n)
    if engine == "sinform":
        return closed_form.closed_updown_sinform(k, n)
    if engine in ("series", "auto"):
        return series_engine.count_updown(k, n)
    if engine == "dp":
        return enumeration.dp_count(k, n)
    if engine == "brute":
        return enumeration.brute_count(k, n, WordClass.UPDOWN, budget)
    raise UsageError(f"unknown engine {engine}")


def cyclic_value(k: int, n2: int, engine: str, budget: int = enumeration.DEFAULT_BUDGET) -> int:
    if n2 % 2:
        raise UsageError("cyclic words have even length")
    if engine in ("closed", "newton"):
        if k < 2 or n2 < 2:
            raise UsageError(f"engine {engine} requires k >= 2 and n >= 2")
        if engine == "closed":
            return closed_form.closed_cyclic(k, n2 // 2)
        return series_engine.cyclic_newton(k, n2 // 2)
    if engine in ("series", "auto"):
        return series_engine.series_cyclic(k, n2).counts[n2]
    if engine == "dp":
        return enumeration.dp_cyclic_count(k, n2 // 2)
    if engine == "brute":
        return enumeration.brute_count(k, n2, WordClass.CYCLIC_UPDOWN, budget)
    raise UsageError(f"unknown engine {engine}")


def weakly_value(k: int, n: int) -> int:
    return series_engine.series_weakly(k, n).counts[n]


def _emit_value(args, value: int, **fields) -> str:
    if args.format == "plain":
        return f"{value}\n"
    record = dict(fields, count=value)
    return render_records([record], args.format, single=True)


def cmd_count(args) -> int:
    value = updown_value(args.k, args.n, args.engine, args.budget)
    sys.stdout.write(_emit_value(args, value, k=args.k, n=args.n, engine=args.engine))
    return EXIT_OK


def cmd_cyclic(args) -> int:
    value = cyclic_value(args.k, args.n, args.engine, args.budget)
    sys.stdout.write(_emit_value(args, value, k=args.k, n=args.n, engine=args.engine))
    return EXIT_OK


def cmd_weakly(args) -> int:
    value = weakly_value(args.k, args.n)
    sys.stdout.write(_emit_value(args, value, k=args.k, n=args.n))
    return EXIT_OK


def cmd_series(args) -> int:
    build = {
        "updown": series_engine.series_updown,
        "cyclic": series_engine.series_cyclic,
        "weakly": series_engine.series_weakly,
    }[args.variant]
    table = build(args.k, args.max_n)
    if args.format == "plain":
        sys.stdout.write("".join(f"{n} {c}\n" for n, c in enumerate(table.counts)))
    elif args.format == "csv":
        sys.stdout.write(render_csv(["n", "count"], enumerate(table.counts)))
    else:
        records = [{"n": n, "count": c} for n, c in enumerate(table.counts)]
        sys.stdout.write(render_json(records))
    return EXIT_OK


CHEBY_KINDS: dict[str, Callable[[int], poly_exact.IntPoly]] = {
    "t": poly_exact.chebyshev_t,
    "u": poly_exact.chebyshev_u,
    "v": poly_exact.chebyshev_v,
    "p": poly_exact.carlitz_p,
    "q": poly_exact.carlitz_q,
}


def cmd_cheby(args) -> int:
    if args.kind in ("p", "q") and args.degree < 1:
        raise UsageError(f"kind {args.kind} requires degree >= 1")
    poly = CHEBY_KINDS[args.kind](args.degree)
    if args.format == "plain":
        sys.stdout.write(f"{poly}\n")
    elif args.format == "csv":
        sys.stdout.write(render_csv(["power", "coefficient"], enumerate(poly.coeffs)))
    else:
        sys.stdout.write(
            render_json(
                {"kind": args.kind, "degree": args.degree, "coeffs": list(poly.coeffs), "text": str(poly)}
            )
        )
    return EXIT_OK


def _parse_word(text: str, k: int) -> Word:
    text = text.strip()
    try:
        letters = tuple(int(t) for t in text.split(",")) if text else ()
        return Word(k, letters)
    except ValueError as exc:
        raise UsageError(f"bad word {text!r}: {exc}") from None


def cmd_map(args) -> int:
    try:
        if args.direction == "forward":
            image = enumeration.weakly_to_updown(_parse_word(args.word, args.k))
        else:
            image = enumeration.updown_to_weakly(_parse_word(args.word, args.k + 1))
    except (NotUpDown, NotWeaklyUpDown, LengthOneExcluded) as exc:
        print(f"updown map: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    if args.format == "plain":
        sys.stdout.write(f"{image}\n")
    elif args.format == "csv":
        sys.stdout.write(render_csv(["position", "letter"], enumerate(image.letters, 1)))
    else:
        src = [int(t) for t in args.word.split(",")] if args.word.strip() else []
        sys.stdout.write(
            render_json({"direction": args.direction, "k": args.k, "input": src, "output": list(image.letters)})
        )
    return EXIT_OK


# --- verification sweep -------------------------------------------------


def _timed(report: EngineReport, engine: str, fn: Callable[[], int]) -> None:
    start = time.perf_counter_ns()
    value = fn()
    report.engine_values[engine] = value
    report.elapsed_micros[engine] = (time.perf_counter_ns() - start) // 1000


def _updown_report(k: int, n: int, budget: int) -> EngineReport:
    r = EngineReport(k, n, "updown")
    if k >= 2:
        _timed(r, "closed", lambda: closed_form.closed_updown(k, n))
        _timed(r, "sinform", lambda: closed_form.closed_updown_sinform(k, n))
    _timed(r, "series", lambda: series_engine.count_updown(k, n))
    _timed(r, "dp", lambda: enumeration.dp_count(k, n))
    if k**n <= budget:
        _timed(r, "brute", lambda: enumeration.brute_count(k, n, WordClass.UPDOWN, budget))
    return r


def _cyclic_report(k: int, n: int, budget: int) -> EngineReport:
    r = EngineReport(k, n, "cyclic_updown")
    if k >= 2 and n >= 2:
        _timed(r, "closed", lambda: closed_form.closed_cyclic(k, n // 2))
        _timed(r, "newton", lambda: series_engine.cyclic_newton(k, n // 2))
    _timed(r, "series", lambda: series_engine.series_cyclic(k, n).counts[n])
    _timed(r, "dp", lambda: enumeration.dp_cyclic_count(k, n // 2))
    if k**n <= budget:
        _timed(r, "brute", lambda: enumeration.brute_count(k, n, WordClass.CYCLIC_UPDOWN, budget))
    return r


def _weakly_report(k: int, n: int, budget: int) -> EngineReport:
    r = EngineReport(k, n, "weakly_updown")
    _timed(r, "series", lambda: weakly_value(k, n))
    _timed(r, "dp", lambda: k if n == 1 else enumeration.dp_count(k + 1, n))
    if k**n <= budget:
        _timed(r, "brute", lambda: enumeration.brute_count(k, n, WordClass.WEAKLY_UPDOWN, budget))
    return r


def bijection_check(k: int, n: int) -> CheckReport:
    """Round trip both maps over every weakly word over k and up-down word over k + 1."""
    forward = backward = 0
    for w in enumeration.iter_words(k, n, WordClass.WEAKLY_UPDOWN):
        u = enumeration.weakly_to_updown(w)
        if not enumeration.is_member(u, WordClass.UPDOWN) or enumeration.updown_to_weakly(u) != w:
            return CheckReport(k, n, "bijection", False, f"fails at {w}")
        forward += 1
    for u in enumeration.iter_words(k + 1, n, WordClass.UPDOWN):
        w = enumeration.updown_to_weakly(u)
        if not enumeration.is_member(w, WordClass.WEAKLY_UPDOWN) or enumeration.weakly_to_updown(w) != u:
            return CheckReport(k, n, "bijection", False, f"fails at {u}")
        backward += 1
    return CheckReport(k, n, "bijection", forward == backward, f"weakly={forward} updown={backward}")


def convolution_check(k: int, n2: int) -> CheckReport:
    """Occurrence-splitting identity between a_{k+1} and a_k at length n2."""
    lhs = series_engine.series_cyclic(k + 1, n2).counts[n2]
    rhs = series_engine.cyclic_by_convolution(k, n2 // 2)
    return CheckReport(k, n2, "convolution", lhs == rhs, f"lhs={lhs} rhs={rhs}")


def _grid_point(task: tuple[int, int, int, int]) -> list:
    k, n, budget, max_k = task
    out: list = []
    if n != 1 and (k + 1) ** n <= budget:
        out.append(bijection_check(k, n))
    if n % 2 == 0:
        if n >= 2 and k + 1 <= max_k:
            out.append(convolution_check(k, n))
        out.append(_cyclic_report(k, n, budget))
    out.append(_updown_report(k, n, budget))
    out.append(_weakly_report(k, n, budget))
    out.sort(key=lambda r: r.sort_key)
    return out


def verify_reports(
    max_k: int, max_n: int, budget: int, jobs: int = 1
) -> Iterator:
    """Reports for the grid 1 <= k <= max_k, 0 <= n <= max_n in (k, n, variant) order."""
    tasks = [(k, n, budget, max_k) for k in range(1, max_k + 1) for n in range(max_n + 1)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for batch in pool.map(_grid_point, tasks):
                yield from batch
    else:
        for task in tasks:
            yield from _grid_point(task)


def cmd_verify(args) -> int:
    if args.max_k < 2:
        raise UsageError("--max-k must be at least 2")
    reports = []
    failure = None
    for report in verify_reports(args.max_k, args.max_n, args.budget, args.jobs):
        reports.append(report)
        if not report.agree and failure is None:
            failure = report
            if not args.keep_going:
                break
    sys.stdout.write(render_reports(reports, args.format))
    if failure is not None:
        print(
            f"updown verify: disagreement at k={failure.k} n={failure.n} {failure.variant}",
            file=sys.stderr,
        )
        return EXIT_MISMATCH
    return EXIT_OK


# --- argument parsing ---------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="updown", description="Exact counts of up-down words over [k].")
    parser.add_argument("--format", choices=FORMATS, default="plain")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser, required=True)

    def add(name: str, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS)
        return p

    p = add("count", "number of up-down words of length n")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--engine", choices=COUNT_ENGINES, default="auto")
    p.add_argument("--budget", type=_positive, default=enumeration.DEFAULT_BUDGET)
    p.set_defaults(func=cmd_count)

    p = add("cyclic", "number of cyclic up-down words of even length n")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--engine", choices=CYCLIC_ENGINES, default="auto")
    p.add_argument("--budget", type=_positive, default=enumeration.DEFAULT_BUDGET)
    p.set_defaults(func=cmd_cyclic)

    p = add("weakly", "number of weakly up-down words of length n")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--n", type=_nonneg, required=True)
    p.set_defaults(func=cmd_weakly)

    p = add("series", "table of counts for lengths 0..max-n")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--max-n", type=_nonneg, required=True)
    p.add_argument("--variant", choices=("updown", "cyclic", "weakly"), default="updown")
    p.set_defaults(func=cmd_series)

    p = add("cheby", "print a Chebyshev or Carlitz-Scoville polynomial")
    p.add_argument("--kind", choices=tuple(CHEBY_KINDS), required=True)
    p.add_argument("--degree", type=_nonneg, required=True)
    p.set_defaults(func=cmd_cheby)

    p = add("map", "apply the weakly/strict up-down bijection to a word")
    p.add_argument("--direction", choices=("forward", "backward"), required=True)
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--word", required=True, help="comma-separated letters, e.g. 1,1,1,1")
    p.set_defaults(func=cmd_map)

    p = add("verify", "cross-check all engines over a grid")
    p.add_argument("--max-k", type=int, required=True)
    p.add_argument("--max-n", type=_nonneg, required=True)
    p.add_argument("--budget", type=_positive, default=10**6, help="largest k**n brute-forced")
    p.add_argument("--keep-going", action="store_true")
    p.add_argument("--jobs", type=_positive, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, UpDownError, ValueError, ArithmeticError) as exc:
        print(f"updown {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
