"""Command-line interface.

Subcommands: ``count`` (one closed-form count), ``table`` (count triangle),
``coeffs`` (quasipolynomial coefficients), ``verify`` (self-check suites).
Output formats: csv, tsv, bfile (``index value`` lines with ``#`` headers),
json.  Exit codes: 0 success, 1 verification or I/O failure, 2 usage error.
All output is deterministic: the same invocation produces the same bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import formulas, quasipoly, verify

_SEPARATORS = {"csv": ",", "tsv": "\t"}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chesscount",
        description="Exact counts of nonattacking bishop and anassa placements on m x m boards.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=["csv", "tsv", "bfile", "json"], default="csv",
        help="output format (default: csv)",
    )
    common.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="one closed-form count")
    p.add_argument("piece", choices=["bishop", "anassa"])
    p.add_argument("m", type=int, help="board size (any integer)")
    p.add_argument("k", type=int, help="number of pieces")
    p.add_argument(
        "--below", type=int, metavar="P", default=None,
        help="anassa only: count placements with exactly P pieces below the main diagonal",
    )

    p = sub.add_parser("table", parents=[common], help="triangle of counts for m = 0..M")
    p.add_argument("piece", choices=["bishop", "anassa"])
    p.add_argument("m_max", type=int, help="largest board size")
    p.add_argument(
        "--rect", action="store_true",
        help="pad every row with zeros to a common width instead of truncating at feasibility",
    )
    p.add_argument(
        "--offset", type=int, default=0,
        help="starting index for bfile output (default: 0)",
    )

    p = sub.add_parser("coeffs", parents=[common], help="quasipolynomial coefficients for fixed k")
    p.add_argument("piece", choices=["bishop", "anassa"])
    p.add_argument("k", type=int, help="number of pieces")

    p = sub.add_parser("verify", parents=[common], help="run self-check suites")
    p.add_argument("suite", choices=["oracle", "identities", "collapse", "coeffs", "all"])
    p.add_argument("--m-max", type=int, default=None, help="override board-size bound")
    p.add_argument("--k-max", type=int, default=None, help="override piece-count bound")

    return parser


def _emit(text: str, out: str | None) -> int:
    if out is None:
        sys.stdout.write(text)
        return 0
    try:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)
    except OSError as exc:
        print(f"cannot write {out}: {exc.strerror or exc}", file=sys.stderr)
        return 1
    return 0


def _rational(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


def cmd_count(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    if args.k < 0:
        parser.error(f"k must be >= 0, got {args.k}")
    if args.below is not None:
        if args.piece != "anassa":
            parser.error("--below applies only to the anassa")
        if args.below < 0:
            parser.error(f"--below must be >= 0, got {args.below}")
        value = formulas.anassas_split(args.m, args.k, args.below)
    else:
        value = formulas.count(args.piece, args.m, args.k)
    if args.format == "json":
        payload = {"piece": args.piece, "m": args.m, "k": args.k}
        if args.below is not None:
            payload["below"] = args.below
        payload["count"] = value
        return _emit(json.dumps(payload) + "\n", args.out)
    if args.format == "bfile":
        parser.error("bfile output applies only to 'table'")
    return _emit(f"{value}\n", args.out)


def _table_bfile(table: formulas.CountTable, rect: bool, offset: int) -> str:
    bound = "padded to a common width" if rect else "truncated at the last nonzero count"
    lines = [
        f"# nonattacking {table.piece} placements on m x m boards",
        f"# triangle rows m = 0..{table.m_max}, k ascending within each row ({bound})",
        f"# single running index in row-major order, starting at {offset}",
    ]
    lines.extend(f"{offset + i} {v}" for i, v in enumerate(table.flatten()))
    return "\n".join(lines) + "\n"


def parse_bfile(text: str) -> tuple[int, list[int]]:
    """Read ``index value`` lines back; returns (start index, values).

    Comment lines start with ``#``; indices must be consecutive.  This is the
    inverse of ``table --format bfile``.
    """
    entries = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        index_text, value_text = line.split()
        entries.append((int(index_text), int(value_text)))
    if not entries:
        return 0, []
    start = entries[0][0]
    for pos, (index, _) in enumerate(entries):
        if index != start + pos:
            raise ValueError(f"non-consecutive index {index} (expected {start + pos})")
    return start, [value for _, value in entries]


def cmd_table(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    if args.m_max < 0:
        parser.error(f"m_max must be >= 0, got {args.m_max}")
    table = formulas.count_table(args.piece, args.m_max, rect=args.rect)
    if args.format == "json":
        payload = {
            "piece": table.piece,
            "m_max": table.m_max,
            "rect": args.rect,
            "rows": [list(row) for row in table.rows],
        }
        return _emit(json.dumps(payload) + "\n", args.out)
    if args.format == "bfile":
        return _emit(_table_bfile(table, args.rect, args.offset), args.out)
    sep = _SEPARATORS[args.format]
    text = "".join(sep.join(str(v) for v in row) + "\n" for row in table.rows)
    return _emit(text, args.out)


def cmd_coeffs(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    if args.k < 0:
        parser.error(f"k must be >= 0, got {args.k}")
    if args.piece == "bishop":
        vectors = [quasipoly.bishop_coeffs(args.k, 0), quasipoly.bishop_coeffs(args.k, 1)]
    else:
        vectors = [quasipoly.anassa_coeffs(args.k)]
    period = quasipoly.effective_period(vectors)
    vectors = vectors[:period]
    if args.format == "json":
        payload = {
            "piece": args.piece,
            "k": args.k,
            "period": period,
            "coeffs": [[_rational(c) for c in vec] for vec in vectors],
        }
        return _emit(json.dumps(payload) + "\n", args.out)
    if args.format == "bfile":
        parser.error("bfile output applies only to 'table'")
    sep = _SEPARATORS[args.format]
    text = "".join(sep.join(str(c) for c in vec) + "\n" for vec in vectors)
    return _emit(text, args.out)


def cmd_verify(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    results = verify.run_suite(args.suite, m_max=args.m_max, k_max=args.k_max)
    lines = []
    total_checks = sum(r.checks for r in results)
    total_failures = sum(len(r.failures) for r in results)
    for r in results:
        if r.ok:
            lines.append(f"ok    {r.name} ({r.checks} checks)")
        else:
            lines.append(f"FAIL  {r.name} ({r.checks} checks, {len(r.failures)} failed)")
            lines.extend(f"      {failure}" for failure in r.failures)
    lines.append(
        f"summary: {len(results)} check groups, {total_checks} checks, {total_failures} failures"
    )
    status = _emit("\n".join(lines) + "\n", args.out)
    if status:
        return status
    return 1 if total_failures else 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = {
        "count": cmd_count,
        "table": cmd_table,
        "coeffs": cmd_coeffs,
        "verify": cmd_verify,
    }[args.command]
    return handler(args, parser)


if __name__ == "__main__":
    sys.exit(main())
