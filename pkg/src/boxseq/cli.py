"""Command-line interface: ``boxseq {build,eval,export,verify,population}``.

Exit status is 0 on success, 1 when ``verify`` finds a failing check, and 2
on usage errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .closed_form import eval_f_closed, eval_g_closed, eval_g_combination
from .errors import BoxseqError, EmptyRangeError
from .exact import format_rational, parse_rational
from .piecewise import PiecewisePoly, evaluate
from .sequences import build_f, build_g, population_profile
from .verify import run_all

# Flags whose value may legitimately start with "-" (negative rationals).
_RATIONAL_FLAGS = ("--x", "--R", "--range")


class UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _range(text: str) -> Tuple[Fraction, Fraction]:
    lo, sep, hi = text.partition(":")
    if not sep:
        raise argparse.ArgumentTypeError(f"range must look like LO:HI, got {text!r}")
    return _rational(lo), _rational(hi)


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="boxseq", description="Exact box-started integral and integro-difference sequences.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("build", help="build f_n or g_n and write its piecewise JSON")
    p.add_argument("--kind", choices=("f", "g"), required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--out")

    p = sub.add_parser("eval", help="evaluate f_n or g_n at one rational point")
    p.add_argument("--kind", choices=("f", "g"), required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--x", type=_rational, required=True)
    p.add_argument("--side", choices=("left", "right"))
    p.add_argument("--method", choices=("recursion", "closed-form", "combination"), default="recursion")

    p = sub.add_parser("export", help="tabulate values on an equally spaced grid")
    p.add_argument("--kind", choices=("f", "g", "population"), required=True)
    p.add_argument("--n", type=_positive)
    p.add_argument("--t", type=_positive)
    p.add_argument("--R", type=_rational)
    p.add_argument("--range", type=_range, required=True)
    p.add_argument("--count", type=_positive, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--decimal-digits", type=_positive)
    p.add_argument("--out")

    p = sub.add_parser("verify", help="run every identity check and print the JSON report")
    p.add_argument("--n-max", type=int, default=12)
    p.add_argument("--samples", type=_positive, default=100)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--out")

    p = sub.add_parser("population", help="box-kernel population profile R**t f_t")
    p.add_argument("--t", type=_positive, required=True)
    p.add_argument("--R", type=_rational, required=True)
    p.add_argument("--x", type=_rational)
    p.add_argument("--side", choices=("left", "right"))
    p.add_argument("--out")
    return parser


def _join_negative_values(args: Sequence[str]) -> List[str]:
    # argparse reads "-1/4" as an option; glue it to its flag instead.
    out: List[str] = []
    it = iter(args)
    for arg in it:
        if arg in _RATIONAL_FLAGS:
            value = next(it, None)
            out.append(arg if value is None else f"{arg}={value}")
        else:
            out.append(arg)
    return out


def _sequence(kind: str, n: int) -> PiecewisePoly:
    return build_f(n) if kind == "f" else build_g(n)


def _evaluate_at(f: PiecewisePoly, x: Fraction, side: Optional[str]) -> Fraction:
    if x in f.knots and side is None:
        raise UsageError(f"x = {format_rational(x)} is a knot; pass --side left or --side right")
    return evaluate(f, x, side or "interior")


def _write(text: str, path: Optional[str]) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def eval_value(kind: str, n: int, x: Fraction, method: str, side: Optional[str] = None) -> Fraction:
    f = _sequence(kind, n)
    if method == "recursion":
        return _evaluate_at(f, x, side)
    # Closed forms are pointwise; at a knot they only make sense one-sided.
    if x in f.knots:
        raise UsageError(f"x = {format_rational(x)} is a knot; method {method!r} needs x off knots")
    if method == "combination":
        if kind != "g":
            raise UsageError("method 'combination' applies to --kind g only")
        return eval_g_combination(n, x)
    if n == 1:
        return evaluate(f, x)  # the closed forms start at n = 2; f_1 = g_1 = box
    return eval_f_closed(n, x) if kind == "f" else eval_g_closed(n, x)


@dataclass
class ExportTable:
    rows: List[Tuple[Fraction, Fraction]]
    decimal_digits: Optional[int] = None

    def _format(self, value: Fraction) -> str:
        if self.decimal_digits is None:
            return format_rational(value)
        scaled = round(value * 10**self.decimal_digits)  # exact, half to even
        sign = "-" if scaled < 0 else ""
        digits = str(abs(scaled)).rjust(self.decimal_digits + 1, "0")
        return f"{sign}{digits[:-self.decimal_digits]}.{digits[-self.decimal_digits:]}"

    def formatted_rows(self) -> List[Tuple[str, str]]:
        return [(self._format(x), self._format(v)) for x, v in self.rows]

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["x", "value"])
        writer.writerows(self.formatted_rows())
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps({"rows": [{"x": x, "value": v} for x, v in self.formatted_rows()]}) + "\n"


def grid_points(lo: Fraction, hi: Fraction, count: int, knots: Sequence[Fraction]) -> List[Fraction]:
    """``count`` equally spaced points on ``[lo, hi]``.

    A point on a knot moves half a grid step towards the interior of the range
    (the last point moves backwards); if that is still a knot or would collide
    with the previous point, the nudge is halved again.
    """
    if not lo < hi:
        raise EmptyRangeError(f"empty range {format_rational(lo)}:{format_rational(hi)}")
    step = (hi - lo) / (count - 1) if count > 1 else hi - lo
    knot_set = set(knots)
    points: List[Fraction] = []
    for i in range(count):
        base = lo + i * step if count > 1 else lo
        backwards = count > 1 and i == count - 1
        x, nudge = base, step / 2
        while x in knot_set or (points and x <= points[-1]):
            x = base - nudge if backwards else base + nudge
            nudge /= 2
        points.append(x)
    return points


def export_samples(
    kind: str,
    n_or_t: int,
    count: int,
    value_range: Tuple[Fraction, Fraction],
    R: Optional[Fraction] = None,
    decimal_digits: Optional[int] = None,
) -> ExportTable:
    if kind == "population":
        if R is None:
            raise UsageError("--R is required for --kind population")
        f = population_profile(n_or_t, R)
    else:
        f = _sequence(kind, n_or_t)
    xs = grid_points(value_range[0], value_range[1], count, f.knots)
    return ExportTable([(x, evaluate(f, x)) for x in xs], decimal_digits)


def _cmd_build(ns) -> int:
    _write(_sequence(ns.kind, ns.n).to_json() + "\n", ns.out)
    return 0


def _cmd_eval(ns) -> int:
    print(format_rational(eval_value(ns.kind, ns.n, ns.x, ns.method, ns.side)))
    return 0


def _cmd_export(ns) -> int:
    if ns.kind == "population":
        n_or_t = ns.t if ns.t is not None else ns.n
    else:
        n_or_t = ns.n
    if n_or_t is None:
        raise UsageError("--n (or --t for population) is required")
    table = export_samples(ns.kind, n_or_t, ns.count, ns.range, ns.R, ns.decimal_digits)
    _write(table.to_csv() if ns.format == "csv" else table.to_json(), ns.out)
    return 0


def _cmd_verify(ns) -> int:
    if ns.n_max < 2:
        raise UsageError("--n-max must be at least 2")
    report = run_all(ns.n_max, ns.samples, ns.seed)
    _write(report.to_json() + "\n", ns.out)
    return 0 if report.all_passed else 1


def _cmd_population(ns) -> int:
    f = population_profile(ns.t, ns.R)
    if ns.x is not None:
        print(format_rational(_evaluate_at(f, ns.x, ns.side)))
    else:
        _write(f.to_json() + "\n", ns.out)
    return 0


_COMMANDS = {
    "build": _cmd_build,
    "eval": _cmd_eval,
    "export": _cmd_export,
    "verify": _cmd_verify,
    "population": _cmd_population,
}


def run(args: Optional[Sequence[str]] = None) -> int:
    if args is None:
        args = sys.argv[1:]
    try:
        ns = build_parser().parse_args(_join_negative_values(args))
        return _COMMANDS[ns.command](ns)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 2
    except BoxseqError as exc:
        print(f"boxseq: error [{exc.code}]: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
