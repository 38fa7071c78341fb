"""Command-line front end: tables, identity sweeps, oracle comparison,
construction verification, and integer-sequence cross-checks.

Exit codes are a stable contract for CI: 0 all-pass, 1 verification
failure, 2 usage error, 3 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from itertools import product

from . import bijections, identities
from .distributions import DEFAULT_CAP, SizeLimitError, oracle_row
from .lah_core import g_poly, row_sum_poly

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_CAP = 3

# OEIS A000110 (Bell numbers) -- literal fixture, never fetched.
BELL_PREFIX = (1, 1, 2, 5, 15, 52, 203, 877)
# OEIS A000262 (sets of lists) -- literal fixture, never fetched.
A000262_PREFIX = (1, 1, 3, 13, 73, 501, 4051)


def _parse_span(text: str) -> tuple[int, ...]:
    """``LO..HI`` inclusive, or a single value; HI < LO is the empty selection."""
    try:
        if ".." in text:
            lo_text, hi_text = text.split("..", 1)
            lo, hi = int(lo_text), int(hi_text)
            return tuple(range(lo, hi + 1))
        return (int(text),)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}, expected N or LO..HI")


def _emit_json(payload) -> None:
    # sort_keys plus default separators keep load/dump round trips byte-identical
    print(json.dumps(payload, sort_keys=True))


def _emit_csv(header, rows) -> None:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    sys.stdout.write(buffer.getvalue())


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "csv", "json"), default="text")
    common.add_argument("--cap-override", type=int, default=None, metavar="N",
                        help=f"raise the enumeration cap (default {DEFAULT_CAP})")
    common.add_argument("--jobs", type=int, default=1, metavar="N")

    parser = argparse.ArgumentParser(prog="rlah",
                                     description="exact generalized r-Lah toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p_table = sub.add_parser("table", parents=[common], help="print triangle rows")
    p_table.add_argument("--n", type=int, required=True, help="largest row")
    p_table.add_argument("--r", type=int, required=True)
    p_table.add_argument("--a", type=int, default=None)
    p_table.add_argument("--b", type=int, default=None)

    p_check = sub.add_parser("check", parents=[common], help="verify identities")
    p_check.add_argument("--id", default="all",
                         help="comma-separated identity ids, or 'all'")
    for flag in ("--n", "--k", "--m", "--r", "--s"):
        p_check.add_argument(flag, type=_parse_span, default=(0,), metavar="LO..HI")

    p_oracle = sub.add_parser("oracle", parents=[common],
                              help="compare the triangles to brute-force enumeration")
    p_oracle.add_argument("--n", type=int, required=True)
    p_oracle.add_argument("--r", type=int, required=True)

    p_con = sub.add_parser("constructions", parents=[common],
                           help="verify the involution/bijection constructions")
    p_con.add_argument("--id", default="all")
    for flag in ("--n", "--k", "--r", "--s"):
        p_con.add_argument(flag, type=_parse_span, default=(0,), metavar="LO..HI")
    p_con.add_argument("--trace", action="store_true",
                       help="print before/after text for each map application")

    p_seq = sub.add_parser("sequences", parents=[common],
                           help="row-sum specializations vs embedded fixtures")
    p_seq.add_argument("which", choices=("bell", "a000262", "r_bell"))
    p_seq.add_argument("--n", type=int, required=True, help="largest index (<= 12)")
    p_seq.add_argument("--r", type=int, default=0)

    return parser


# ----------------------------------------------------------------------
# table


def cmd_table(args) -> int:
    if args.n < 0 or args.r < 0:
        print("table: need --n and --r nonnegative", file=sys.stderr)
        return EXIT_USAGE
    bindings = {}
    if args.a is not None:
        bindings["a"] = args.a
    if args.b is not None:
        bindings["b"] = args.b
    numeric = {"a", "b"} <= set(bindings)
    cells = []
    for n in range(args.n + 1):
        for k in range(n + 1):
            value = g_poly(n, k, args.r)
            if bindings:
                value = value.eval(**bindings)
            cells.append((n, k, value.as_int() if numeric else str(value)))
    if args.format == "json":
        _emit_json([{"n": n, "k": k, "value": v} for n, k, v in cells])
    elif args.format == "csv":
        _emit_csv(("n", "k", "value"), cells)
    else:
        for n in range(args.n + 1):
            row = [str(v) for nn, _, v in cells if nn == n]
            print(" ".join(row) if numeric else " | ".join(row))
    return EXIT_OK


# ----------------------------------------------------------------------
# check


def _identity_ids(text: str) -> list[str] | None:
    if text == "all":
        return list(identities.IDENTITY_IDS)
    ids = []
    for piece in text.split(","):
        ident = piece.strip().upper()
        if ident not in identities.IDENTITY_IDS:
            return None
        ids.append(ident)
    return ids


def cmd_check(args) -> int:
    ids = _identity_ids(args.id)
    if ids is None:
        print(f"check: unknown identity id in {args.id!r}", file=sys.stderr)
        return EXIT_USAGE
    reports, skipped = identities.sweep_detailed(
        ids, n=args.n, k=args.k, m=args.m, r=args.r, s=args.s, seeds=args.s,
        jobs=args.jobs)
    failed = [rep for rep in reports if not rep.passed]
    if args.format == "json":
        payload = []
        for rep in reports:
            entry = {"identity": rep.identity_id, "status": "PASS" if rep.passed else "FAIL"}
            entry.update(dict(zip(("n", "k", "m", "r", "s"), rep.params)))
            if not rep.passed:
                entry["lhs"] = str(rep.lhs)
                entry["rhs"] = str(rep.rhs)
            payload.append(entry)
        for ident, params in skipped:
            entry = {"identity": ident, "status": "SKIP"}
            entry.update(dict(zip(("n", "k", "m", "r", "s"), params)))
            payload.append(entry)
        _emit_json(payload)
    elif args.format == "csv":
        rows = [(rep.identity_id,) + tuple("" if v is None else v for v in rep.params)
                + ("PASS" if rep.passed else "FAIL",) for rep in reports]
        rows += [(ident,) + tuple("" if v is None else v for v in params) + ("SKIP",)
                 for ident, params in skipped]
        _emit_csv(("identity", "n", "k", "m", "r", "s", "status"), rows)
    else:
        for rep in reports:
            print(rep.line())
            if not rep.passed:
                print(f"  lhs: {rep.lhs}")
                print(f"  rhs: {rep.rhs}")
        for ident, params in skipped:
            pieces = [f"{name}={value}" for name, value in zip(("n", "k", "m", "r", "s"), params)
                      if value is not None]
            print(f"{ident} {' '.join(pieces)} SKIP")
    return EXIT_FAIL if failed else EXIT_OK


# ----------------------------------------------------------------------
# oracle


def cmd_oracle(args) -> int:
    if args.n < 0 or args.r < 0:
        print("oracle: need --n and --r nonnegative", file=sys.stderr)
        return EXIT_USAGE
    cells = 0
    mismatches = []
    try:
        for r in range(args.r + 1):
            for n in range(args.n + 1):
                row = oracle_row(n, r, cap=args.cap_override)
                for k in range(n + 1):
                    expected = row.get(k, g_poly(0, 1, 0))  # zero polynomial default
                    actual = g_poly(n, k, r)
                    cells += 1
                    if expected != actual:
                        mismatches.append((n, k, r, str(expected), str(actual)))
    except SizeLimitError as exc:
        print(f"oracle: {exc}", file=sys.stderr)
        return EXIT_CAP
    status = "PASS" if not mismatches else "FAIL"
    if args.format == "json":
        _emit_json({"cells": cells, "mismatches": [list(m) for m in mismatches],
                    "status": status})
    elif args.format == "csv":
        _emit_csv(("cells", "mismatches", "status"), [(cells, len(mismatches), status)])
    else:
        for n, k, r, expected, actual in mismatches:
            print(f"MISMATCH n={n} k={k} r={r} oracle={expected} triangle={actual}")
        print(f"cells={cells} {status}")
    return EXIT_OK if not mismatches else EXIT_FAIL


# ----------------------------------------------------------------------
# constructions


def cmd_constructions(args) -> int:
    if args.id == "all":
        ids = list(bijections.CONSTRUCTION_IDS)
    else:
        ids = [piece.strip().upper() for piece in args.id.split(",")]
        bad = [i for i in ids if i not in bijections.CONSTRUCTION_IDS]
        if bad:
            print(f"constructions: unknown id(s) {bad}", file=sys.stderr)
            return EXIT_USAGE
    trace_lines: list[str] = []

    def on_apply(before, after):
        after_text = after.text()
        trace_lines.append(f"  {before.text()}  ->  {after_text}")

    reports = []
    for cid in ids:
        for n, k, r, s in product(args.n, args.k, args.r, args.s):
            if not bijections.construction_applies(cid, n, k, r, s):
                continue
            trace_lines.clear()
            report = bijections.verify_construction(
                cid, n, k, r, s, on_apply=on_apply if args.trace else None)
            reports.append((report, tuple(trace_lines)))
    failed = [rep for rep, _ in reports if not rep.passed]
    if args.format == "json":
        payload = []
        for rep, _ in reports:
            payload.append({
                "construction": rep.construction_id,
                "n": rep.params[0], "k": rep.params[1],
                "r": rep.params[2], "s": rep.params[3],
                "pairs": rep.total_pairs, "fixed": rep.fixed_points,
                "signed": rep.signed_sum, "target": rep.closed_form,
                "status": "PASS" if rep.passed else "FAIL",
            })
        _emit_json(payload)
    elif args.format == "csv":
        rows = [(rep.construction_id, *rep.params, rep.total_pairs, rep.fixed_points,
                 rep.signed_sum, rep.closed_form, "PASS" if rep.passed else "FAIL")
                for rep, _ in reports]
        _emit_csv(("construction", "n", "k", "r", "s", "pairs", "fixed", "signed",
                   "target", "status"), rows)
    else:
        for rep, lines in reports:
            for line in lines:
                print(line)
            print(rep.line())
    return EXIT_FAIL if failed else EXIT_OK


# ----------------------------------------------------------------------
# sequences


def cmd_sequences(args) -> int:
    if args.n < 0 or args.n > 12:
        print("sequences: --n must be between 0 and 12", file=sys.stderr)
        return EXIT_USAGE
    if args.r < 0:
        print("sequences: --r must be nonnegative", file=sys.stderr)
        return EXIT_USAGE
    if args.which == "bell":
        values = [row_sum_poly(n, 0).eval(a=0, b=1).as_int() for n in range(args.n + 1)]
        fixture = BELL_PREFIX
    elif args.which == "a000262":
        values = [row_sum_poly(n, 0).eval(a=1, b=1).as_int() for n in range(args.n + 1)]
        fixture = A000262_PREFIX
    else:
        values = [row_sum_poly(n, args.r).eval(a=0, b=1).as_int() for n in range(args.n + 1)]
        fixture = None
    status = "PASS"
    if fixture is not None:
        overlap = min(len(values), len(fixture))
        if values[:overlap] != list(fixture[:overlap]):
            status = "FAIL"
    if args.format == "json":
        _emit_json({"status": status, "values": values, "which": args.which})
    elif args.format == "csv":
        _emit_csv(("n", "value"), list(enumerate(values)))
    else:
        for n, value in enumerate(values):
            print(f"{n} {value}")
        print(status)
    return EXIT_OK if status == "PASS" else EXIT_FAIL


_HANDLERS = {
    "table": cmd_table,
    "check": cmd_check,
    "oracle": cmd_oracle,
    "constructions": cmd_constructions,
    "sequences": cmd_sequences,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    return _HANDLERS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
