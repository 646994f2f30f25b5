"""Command-line front end.

    peano eval --dim 2 --depth 4 0.1
    peano invert --dim 2 --depth 3 1/3 1
    peano polyline --dim 2 --depth 2
    peano analyze census --dim 3

Exit codes: 0 success, 1 invariant violated, 2 usage or parse error,
3 grid larger than the cell budget (``PEANO_MAX_CELLS``).
"""

from __future__ import annotations

import argparse
import io
import json
import random
import sys
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction

from . import analysis
from .core import check_dim, decimal_places, eval_curve, min_depth
from .errors import DomainError, ResourceError
from .inverse import invert, key_encode
from .selfaffine import check_self_affinity
from .ternary import DigitSeq, TriadicRational, from_triadic, parse_digits, to_triadic

DEFAULT_SEED = 0
HOLDER_BOUND = 6

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def parse_number(text: str) -> DigitSeq:
    """A parameter or coordinate: base-3 digit string or power-of-3 fraction."""
    text = text.strip()
    if text.startswith("0.") or text == "0":
        return parse_digits(text)
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot parse {text!r} as digits or a fraction")
    try:
        return from_triadic(TriadicRational.from_fraction(value))
    except DomainError as exc:
        raise UsageError(str(exc))


def parse_levels(text: str) -> list:
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            return [int(text)]
        return list(range(int(lo), int(hi) + 1))
    except ValueError:
        raise argparse.ArgumentTypeError(f"levels must look like A..B, got {text!r}")


def fmt_decimal(value, places: int) -> str:
    """Round to ``places`` decimals, dropping trailing zeros."""
    value = Fraction(value)
    with localcontext() as ctx:
        ctx.prec = places + 20
        d = Decimal(value.numerator) / Decimal(value.denominator)
        d = d.quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_EVEN)
    text = format(d, "f")
    if "." in text:
        text = text.rstrip("0").rstrip(".")
    return text


def fmt_point(point) -> str:
    return "(" + ", ".join(str(c) for c in point) + ")"


# --- subcommands ----------------------------------------------------------------


def cmd_eval(args, out) -> int:
    t = parse_number(args.t)
    J = args.depth if args.depth is not None else max(1, min_depth(t, args.dim))
    point = eval_curve(t, args.dim, J)
    places = decimal_places(J)
    decimals = [fmt_decimal(c.to_fraction(), places) for c in point]
    if args.format == "json":
        json.dump(
            {"t": str(t), "dim": args.dim, "depth": J,
             "point": [str(c) for c in point], "decimal": decimals},
            out,
        )
        out.write("\n")
    else:
        out.write(fmt_point(point) + "\n")
        out.write("(" + ", ".join(decimals) + ")\n")
    return EXIT_OK


def cmd_invert(args, out) -> int:
    if len(args.coords) != args.dim:
        raise UsageError(f"expected {args.dim} coordinates, got {len(args.coords)}")
    rows = [parse_number(c) for c in args.coords]
    J = args.depth if args.depth is not None else 1
    t = invert(rows, args.dim, J)
    key = key_encode(rows, args.dim, J)
    value = to_triadic(t)
    if args.format == "json":
        json.dump({"t": str(value), "digits": str(t), "key": str(key)}, out)
        out.write("\n")
    else:
        out.write(f"t = {value}\n")
        out.write(f"key = {key}\n")
    return EXIT_OK


def cmd_polyline(args, out) -> int:
    n = args.dim
    J = args.depth if args.depth is not None else 1
    columns = [analysis.grid_values(n, i, J) for i in range(1, n + 1)]
    t_places, x_places = decimal_places(n * J), decimal_places(J)
    rows = []
    for s in range(3 ** (n * J) + 1):
        t = fmt_decimal(Fraction(s, 3 ** (n * J)), t_places)
        xs = [fmt_decimal(Fraction(int(col[s]), 3**J), x_places) for col in columns]
        rows.append([t] + xs)
    if args.format == "json":
        json.dump({"dim": n, "depth": J, "rows": rows}, out)
        out.write("\n")
    else:
        for row in rows:
            out.write(",".join(row) + "\n")
    return EXIT_OK


def _emit_table(args, out, header, rows, extra=None, comments=()):
    if args.format == "json":
        payload = {"rows": [dict(zip(header, row)) for row in rows]}
        payload.update(extra or {})
        json.dump(payload, out, default=str)
        out.write("\n")
        return
    out.write(",".join(header) + "\n")
    for row in rows:
        out.write(",".join(str(v) for v in row) + "\n")
    for line in comments:
        out.write(f"# {line}\n")


def analyze_census(args, out) -> int:
    n = args.dim
    expected = 3 ** (n - 1)
    rows = []
    for i, counts in enumerate(analysis.census_table(n), start=1):
        rows.extend((i, s, c) for s, c in enumerate(counts))
    ok = all(c == expected for _, _, c in rows)
    _emit_table(args, out, ("i", "s", "count"), rows, {"expected": expected, "ok": ok})
    return EXIT_OK if ok else EXIT_VIOLATION


def analyze_histogram(args, out) -> int:
    m = args.depth if args.depth is not None else 3
    counts = analysis.histogram(args.dim, args.coord, m, args.bin_depth)
    ok = max(counts) - min(counts) <= 1
    _emit_table(args, out, ("bin", "count"), list(enumerate(counts)), {"ok": ok})
    return EXIT_OK if ok else EXIT_VIOLATION


def analyze_holder(args, out) -> int:
    top = args.depth if args.depth is not None else 3
    reports = [analysis.holder_scan(args.dim, args.coord, m) for m in range(1, top + 1)]
    rows = [
        (r.depth, repr(r.max_ratio), r.argmax[0], r.argmax[1]) for r in reports
    ]
    ok = all(r.max_ratio <= HOLDER_BOUND for r in reports)
    ok &= all(
        b.max_ratio <= a.max_ratio for a, b in zip(reports, reports[1:]) if a.depth >= 2
    )
    _emit_table(args, out, ("depth", "max_ratio", "t", "u"), rows,
                {"bound": HOLDER_BOUND, "ok": ok})
    return EXIT_OK if ok else EXIT_VIOLATION


def analyze_witness(args, out) -> int:
    n, i = args.dim, args.coord
    top = args.depth if args.depth is not None else 6
    rng = random.Random(args.seed)
    rows, ok = [], True
    for trial in range(args.trials):
        t = analysis.random_digitseq(rng, n * (top + 2))
        for d in range(1, top + 1):
            u, dx, ratio = analysis.lower_modulus_witness(n, i, t, d)
            if abs(dx) < Fraction(1, 2 * 3**d) or ratio < 3 ** ((n - 1) * d) / 2:
                ok = False
            rows.append((trial, d, t, u, dx, repr(ratio)))
    _emit_table(args, out, ("trial", "depth", "t", "u", "dx", "ratio"), rows, {"ok": ok})
    return EXIT_OK if ok else EXIT_VIOLATION


def analyze_dimension(args, out) -> int:
    levels = args.levels or [1, 2, 3]
    est = analysis.box_counting(args.dim, args.coord, levels)
    rows = list(zip(est.levels, est.box_counts))
    ok = all(N <= 3 ** (2 * L) for L, N in rows)
    ok &= all(b[1] >= a[1] for a, b in zip(rows, rows[1:]))
    summary = f"slope={est.slope!r} expected={est.expected}"
    _emit_table(args, out, ("level", "box_count"), rows,
                {"slope": est.slope, "expected": str(est.expected), "ok": ok},
                comments=[summary])
    return EXIT_OK if ok else EXIT_VIOLATION


def analyze_selfaffine(args, out) -> int:
    n = args.dim
    cols = args.depth if args.depth is not None else 4
    rng = random.Random(args.seed)
    offending = []
    for _ in range(args.trials):
        t = analysis.random_digitseq(rng, n * cols, canonical=False)
        i = rng.randint(1, n)
        k = rng.randint(1, cols)
        residual = check_self_affinity(t, n, i, k, cols)
        if residual != 0:
            offending.append({"t": str(t), "i": i, "k": k, "residual": str(residual)})
    status = "residuals: all zero" if not offending else "residuals: NONZERO"
    if args.format == "json":
        json.dump({"trials": args.trials, "nonzero": len(offending),
                   "offending": offending, "status": status}, out)
        out.write("\n")
    else:
        out.write(f"trials={args.trials} nonzero={len(offending)}\n")
        for item in offending:
            out.write("offending t={t} i={i} k={k} residual={residual}\n".format(**item))
        out.write(status + "\n")
    return EXIT_OK if not offending else EXIT_VIOLATION


ANALYSES = {
    "census": analyze_census,
    "histogram": analyze_histogram,
    "holder": analyze_holder,
    "witness": analyze_witness,
    "dimension": analyze_dimension,
    "selfaffine": analyze_selfaffine,
}


# --- parser -----------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--dim", type=int, default=2, help="dimension n >= 2")
    common.add_argument("--depth", type=int, default=None, help="column depth J")
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--out", default=None, help="write to PATH instead of stdout")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)

    parser = _Parser(prog="peano", description="n-dimensional Peano curve tools")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", parents=[common], help="evaluate the curve at t")
    p.add_argument("t", help="parameter: digits like 0.112(2) or a fraction like 13/27")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("invert", parents=[common], help="parameter and key for a point")
    p.add_argument("coords", nargs="+")
    p.set_defaults(func=cmd_invert)

    p = sub.add_parser("polyline", parents=[common], help="curve over the depth-J grid")
    p.set_defaults(func=cmd_polyline)

    p = sub.add_parser("analyze", parents=[common], help="run a property check")
    p.add_argument("analysis", choices=sorted(ANALYSES))
    p.add_argument("--coord", type=int, default=1, help="coordinate index i")
    p.add_argument("--bin-depth", type=int, default=1)
    p.add_argument("--levels", type=parse_levels, default=None, help="A..B")
    p.add_argument("--trials", type=int, default=100)
    p.set_defaults(func=lambda args, out: ANALYSES[args.analysis](args, out))
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        check_dim(args.dim)
        if args.depth is not None and args.depth < 1:
            raise UsageError(f"depth must be >= 1, got {args.depth}")
        buf = io.StringIO()
        code = args.func(args, buf)
    except (UsageError, DomainError) as exc:
        print(f"peano: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceError as exc:
        print(f"peano: error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(buf.getvalue())
    else:
        sys.stdout.write(buf.getvalue())
    return code


if __name__ == "__main__":
    sys.exit(main())
