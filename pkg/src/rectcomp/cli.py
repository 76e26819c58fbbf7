"""Command-line front end.

Subcommands expose the library and emit machine-readable output:

* ``triangle``  -- rows of an (l+1)-nomial triangle
* ``count``     -- one exact composition count, optionally oracle-verified
* ``dist``      -- pmf_X / pmf_S / normal cell masses over the union support
* ``table1``    -- the embedded reference grid of max |pmf_X - pmf_S|
* ``normality`` -- KS distance to the matching normal along an m-list
* ``sample``    -- reproducible uniform composition samples

Exit codes are part of the interface: 0 ok, 1 reference-check failure,
2 usage error, 3 enumeration guard exceeded.  Exact counts print as full
decimal strings; csv/json floats print as shortest round-trip strings,
and the table format rounds to the requested significant digits.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass
from typing import Sequence, TextIO

from .compositions import (
    DEFAULT_ENUM_GUARD,
    EnumerationGuardError,
    PartBounds,
    count,
    count_support,
    enumerate_compositions,
)
from .distributions import (
    RectSpec,
    error_decomposition,
    normal_distance,
    pmf_S,
    pmf_X,
    sample,
)
from .polycoeff import iter_raw_rows

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_GUARD = 3

GUARD_ENV_VAR = "RECTCOMP_ENUM_GUARD"

# ---------------------------------------------------------------------------
# Reference grid for the table1 command.
#
# Expected cells as originally printed: values truncated (not rounded) to
# the shown precision.  The generating convention for a column labelled
# m uses a parts budget of m - 1; table1 reproduces that convention and
# reports the budget in its output.  One factor cell (l=64, m=10) is
# printed as 3.82 in the source data but is inconsistent with its own
# neighbouring cells (0.00014871 / 0.000038399 = 3.8727); the corrected
# 3.87 is embedded here.

TABLE1_L_VALUES = (1, 2, 4, 8, 16, 32, 64)
TABLE1_M_LABELS = (10, 20)

TABLE1_EXPECTED_CELLS = {
    (1, 10): "0.0471", (2, 10): "0.0191", (4, 10): "0.0064",
    (8, 10): "0.0019", (16, 10): "5.5909e-4", (32, 10): "1.4871e-4",
    (64, 10): "3.8399e-5",
    (1, 20): "0.0240", (2, 20): "0.0093", (4, 20): "0.0031",
    (8, 20): "9.5016e-4", (16, 20): "2.6494e-4", (32, 20): "7.0291e-5",
    (64, 20): "1.8126e-5",
}

TABLE1_EXPECTED_FACTORS = {
    (2, 10): 2.46, (4, 10): 2.94, (8, 10): 3.25, (16, 10): 3.56,
    (32, 10): 3.75, (64, 10): 3.87,
    (2, 20): 2.57, (4, 20): 2.96, (8, 20): 3.30, (16, 20): 3.58,
    (32, 20): 3.76, (64, 20): 3.87,
}

CELL_ABS_TOL = 5e-5       # 4-decimal cells
CELL_REL_TOL = 1e-3       # scientific-notation cells
FACTOR_TOL = 0.02


@dataclass(frozen=True)
class Table1Row:
    l: int
    m_label: int
    parts_budget: int
    max_abs_diff: float
    factor: float | None


def compute_table1() -> list[Table1Row]:
    """Recompute every reference cell plus decay factors between l values."""
    rows = []
    for m_label in TABLE1_M_LABELS:
        prev = None
        for l in TABLE1_L_VALUES:
            budget = m_label - 1
            value = error_decomposition(RectSpec(0, l, budget)).max_abs_diff
            factor = None if prev is None else prev / value
            rows.append(Table1Row(l, m_label, budget, value, factor))
            prev = value
    return rows


def _truncate(value: float, decimals: int) -> float:
    scale = 10 ** decimals
    return math.floor(value * scale) / scale


def _cell_matches(computed: float, printed: str) -> bool:
    expected = float(printed)
    if "e" in printed:
        return abs(computed - expected) <= CELL_REL_TOL * expected
    decimals = len(printed.split(".")[1])
    if abs(computed - expected) <= CELL_ABS_TOL:
        return True
    # The reference cells were truncated to the printed precision, which
    # can sit up to one unit in the last place below the true value.
    return _truncate(computed, decimals) == expected


def check_table1(rows: Sequence[Table1Row]) -> list[str]:
    """Return one human-readable failure line per mismatching cell."""
    failures = []
    for row in rows:
        printed = TABLE1_EXPECTED_CELLS[(row.l, row.m_label)]
        if not _cell_matches(row.max_abs_diff, printed):
            failures.append(
                f"cell l={row.l} m={row.m_label}: computed "
                f"{row.max_abs_diff!r}, expected {printed}"
            )
        expected_factor = TABLE1_EXPECTED_FACTORS.get((row.l, row.m_label))
        if expected_factor is not None:
            if row.factor is None or abs(row.factor - expected_factor) > FACTOR_TOL:
                failures.append(
                    f"factor l={row.l} m={row.m_label}: computed "
                    f"{row.factor!r}, expected {expected_factor}"
                )
    return failures


# ---------------------------------------------------------------------------
# Output handling


@dataclass(frozen=True)
class OutputSpec:
    fmt: str = "csv"
    destination: str | None = None
    float_digits: int = 6


def _add_output_args(parser: argparse.ArgumentParser, default_fmt: str = "csv") -> None:
    parser.add_argument("--format", choices=("csv", "json", "table"),
                        default=default_fmt, help="output format")
    parser.add_argument("--output", metavar="PATH", default=None,
                        help="write to PATH instead of standard output")
    parser.add_argument("--float-digits", type=int, default=6,
                        help="significant digits for floats in table format (4-17)")


def _output_spec(args: argparse.Namespace, parser: argparse.ArgumentParser) -> OutputSpec:
    digits = args.float_digits
    if not 4 <= digits <= 17:
        parser.error(f"--float-digits must be in [4, 17], got {digits}")
    return OutputSpec(fmt=args.format, destination=args.output, float_digits=digits)


class _Emitter:
    """Renders rows of (header, cells) in csv, json, or aligned-table form.

    Cell values: ints and strings pass through untouched (exact counts
    stay full decimal strings); floats render as shortest round-trip
    strings in csv/json and at ``float_digits`` significant digits in
    table format.
    """

    def __init__(self, spec: OutputSpec, stream: TextIO):
        self.spec = spec
        self.stream = stream

    def _cell(self, value, for_table: bool) -> str:
        if isinstance(value, float):
            if for_table:
                return f"{value:.{self.spec.float_digits}g}"
            return repr(value)
        if value is None:
            return ""
        return str(value)

    def emit(self, header: Sequence[str], rows: Sequence[Sequence]) -> None:
        if self.spec.fmt == "csv":
            self.stream.write(",".join(header) + "\n")
            for row in rows:
                self.stream.write(",".join(self._cell(v, False) for v in row) + "\n")
        elif self.spec.fmt == "json":
            payload = [dict(zip(header, row)) for row in rows]
            json.dump(payload, self.stream, indent=2)
            self.stream.write("\n")
        else:
            cells = [[self._cell(v, True) for v in row] for row in rows]
            widths = [
                max(len(h), *(len(r[i]) for r in cells)) if cells else len(h)
                for i, h in enumerate(header)
            ]
            self.stream.write(
                "  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip() + "\n"
            )
            for row in cells:
                self.stream.write(
                    "  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() + "\n"
                )


def _with_stream(spec: OutputSpec, fn) -> int:
    if spec.destination is None:
        return fn(_Emitter(spec, sys.stdout))
    with open(spec.destination, "w", encoding="utf-8", newline="") as handle:
        return fn(_Emitter(spec, handle))


# ---------------------------------------------------------------------------
# Subcommands


def _cmd_triangle(args, parser) -> int:
    if args.l < 0 or args.rows < 0:
        parser.error("--l and --rows must be >= 0")
    out = _output_spec(args, parser)

    def run(emitter: _Emitter) -> int:
        rows = []
        for k, row in enumerate(iter_raw_rows(args.l, args.rows)):
            for n, coeff in enumerate(row):
                rows.append((k, n, str(coeff)))
        emitter.emit(("k", "n", "coeff"), rows)
        return EXIT_OK

    return _with_stream(out, run)


def _parse_support(raw: str, parser) -> list[int]:
    try:
        values = [int(tok) for tok in raw.split(",") if tok.strip() != ""]
    except ValueError:
        parser.error(f"--support must be a comma-separated integer list, got {raw!r}")
    if not values:
        parser.error("--support must be non-empty")
    return values


def _cmd_count(args, parser) -> int:
    if args.n < 0 or args.k < 0:
        parser.error("--n and --k must be >= 0")
    if (args.support is None) == (args.b is None):
        parser.error("provide either --a/--b or --support")

    guard = int(os.environ.get(GUARD_ENV_VAR, DEFAULT_ENUM_GUARD))
    if args.support is not None:
        support = _parse_support(args.support, parser)
        result = count_support(args.n, args.k, support)
        enum_kwargs = {"support": support}
    else:
        if args.b == "inf":
            bounds = PartBounds(args.a, None)
        else:
            try:
                bounds = PartBounds(args.a, int(args.b))
            except ValueError as exc:
                parser.error(str(exc))
        result = count(args.n, args.k, bounds)
        enum_kwargs = {"bounds": bounds}

    if args.verify:
        try:
            listed = sum(1 for _ in enumerate_compositions(
                args.n, args.k, guard=guard, **enum_kwargs))
        except EnumerationGuardError as exc:
            print(f"verify: {exc}", file=sys.stderr)
            return EXIT_GUARD
        if listed != result:
            print(f"verify: enumeration found {listed}, formula says {result}",
                  file=sys.stderr)
            return EXIT_CHECK_FAILED

    out = _output_spec(args, parser)

    def run(emitter: _Emitter) -> int:
        if out.fmt == "json":
            emitter.emit(("n", "k", "count"), [(args.n, args.k, str(result))])
        else:
            emitter.stream.write(str(result) + "\n")
        return EXIT_OK

    return _with_stream(out, run)


def _cmd_dist(args, parser) -> int:
    try:
        spec = RectSpec(args.a, args.b, args.m)
    except ValueError as exc:
        parser.error(str(exc))
    if spec.a == spec.b:
        parser.error("normal column undefined for a = b (zero variance)")
    out = _output_spec(args, parser)

    px = pmf_X(spec)
    ps = pmf_S(spec)
    report = normal_distance(spec)

    def run(emitter: _Emitter) -> int:
        rows = []
        for n in range(px.offset, spec.m * spec.b + 1):
            rows.append((n, px.float_prob(n), ps.float_prob(n),
                         report.normal.cell_mass(n)))
        emitter.emit(("n", "pmf_x", "pmf_s", "normal"), rows)
        return EXIT_OK

    return _with_stream(out, run)


def _cmd_table1(args, parser) -> int:
    out = _output_spec(args, parser)
    rows = compute_table1()

    failures = check_table1(rows) if args.check else []

    def run(emitter: _Emitter) -> int:
        if out.fmt == "table":
            header = ("l", "m=10", "factor", "m=20", "factor")
            by_label = {
                (r.l, r.m_label): r for r in rows
            }
            table_rows = []
            for l in TABLE1_L_VALUES:
                r10 = by_label[(l, 10)]
                r20 = by_label[(l, 20)]
                table_rows.append((
                    l, r10.max_abs_diff,
                    None if r10.factor is None else f"{r10.factor:.2f}",
                    r20.max_abs_diff,
                    None if r20.factor is None else f"{r20.factor:.2f}",
                ))
            emitter.emit(header, table_rows)
        else:
            emitter.emit(
                ("l", "m", "parts_budget", "max_abs_diff", "factor"),
                [(r.l, r.m_label, r.parts_budget, r.max_abs_diff, r.factor)
                 for r in rows],
            )
        return EXIT_OK

    status = _with_stream(out, run)
    if args.check:
        if failures:
            for line in failures:
                print(f"check: FAIL {line}", file=sys.stderr)
            return EXIT_CHECK_FAILED
        print("check: all reference cells and factors match", file=sys.stderr)
    return status


def _cmd_normality(args, parser) -> int:
    try:
        m_values = [int(tok) for tok in args.m.split(",") if tok.strip() != ""]
    except ValueError:
        parser.error(f"--m must be a comma-separated integer list, got {args.m!r}")
    if not m_values:
        parser.error("--m must be non-empty")
    if args.b <= args.a:
        parser.error("normality needs b > a (nonzero variance)")
    out = _output_spec(args, parser)

    reports = []
    for m in m_values:
        try:
            reports.append((m, normal_distance(RectSpec(args.a, args.b, m))))
        except ValueError as exc:
            parser.error(str(exc))

    def run(emitter: _Emitter) -> int:
        emitter.emit(
            ("m", "ks", "max_pmf_diff", "peak"),
            [(m, rep.ks, rep.max_pmf_diff, rep.pmf_argmax) for m, rep in reports],
        )
        return EXIT_OK

    status = _with_stream(out, run)
    if args.assert_decreasing:
        ks_values = [rep.ks for _, rep in reports]
        if any(b >= a for a, b in zip(ks_values, ks_values[1:])):
            print("assert-decreasing: KS distances are not strictly decreasing",
                  file=sys.stderr)
            return EXIT_CHECK_FAILED
    return status


def _cmd_sample(args, parser) -> int:
    if args.count < 1:
        parser.error("--count must be >= 1")
    try:
        spec = RectSpec(args.a, args.b, args.m)
    except ValueError as exc:
        parser.error(str(exc))
    out = _output_spec(args, parser)
    draws = sample(spec, args.count, args.seed)

    def run(emitter: _Emitter) -> int:
        rows = [
            (i, sum(parts), " ".join(str(p) for p in parts))
            for i, parts in enumerate(draws)
        ]
        emitter.emit(("index", "sum", "parts"), rows)
        return EXIT_OK

    return _with_stream(out, run)


# ---------------------------------------------------------------------------
# Parser assembly


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rectcomp",
        description="Exact composition counting and rectangle-composition distributions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("triangle", help="emit rows 0..K of an (l+1)-nomial triangle")
    p.add_argument("--l", type=int, required=True, help="part-range width (row arity l+1)")
    p.add_argument("--rows", type=int, required=True, help="last row index K")
    _add_output_args(p)
    p.set_defaults(handler=_cmd_triangle)

    p = sub.add_parser("count", help="count compositions of n into k parts")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--a", type=int, default=0, help="lower part bound")
    p.add_argument("--b", default=None, help="upper part bound, integer or 'inf'")
    p.add_argument("--support", default=None,
                   help="comma-separated part support set (alternative to --a/--b)")
    p.add_argument("--verify", action="store_true",
                   help="cross-check against the enumeration oracle")
    _add_output_args(p)
    p.set_defaults(handler=_cmd_count)

    p = sub.add_parser("dist", help="pmf of X and S plus normal cell masses")
    p.add_argument("--a", type=int, default=0)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    _add_output_args(p)
    p.set_defaults(handler=_cmd_dist)

    p = sub.add_parser("table1", help="recompute the embedded reference grid")
    p.add_argument("--check", action="store_true",
                   help="compare against embedded expected values; exit 1 on mismatch")
    _add_output_args(p, default_fmt="table")
    p.set_defaults(handler=_cmd_table1)

    p = sub.add_parser("normality", help="KS distance to the matching normal law")
    p.add_argument("--a", type=int, default=0)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--m", required=True, help="comma-separated list of part budgets")
    p.add_argument("--assert-decreasing", action="store_true",
                   help="exit 1 unless KS strictly decreases along the m list")
    _add_output_args(p)
    p.set_defaults(handler=_cmd_normality)

    p = sub.add_parser("sample", help="reproducible uniform composition samples")
    p.add_argument("--a", type=int, default=0)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    _add_output_args(p)
    p.set_defaults(handler=_cmd_sample)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.handler(args, parser)


if __name__ == "__main__":
    sys.exit(main())
