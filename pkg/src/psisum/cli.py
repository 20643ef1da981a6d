"""Command-line front end.

Exit status: 0 success / everything agrees, 1 mathematical disagreement or
b-file mismatch, 2 usage error.

Triangles are linearized row by row (m = 2 first, k ascending) with a
1-based running index; that is the layout of ``--format bfile`` and of the
``oeis`` subcommand.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .coeffs import ROUTES, build_A, build_C
from .conjecture import InsufficientTableError, check_conjecture
from .hypersum import METHODS, Evaluator, HyperSumQuery
from .suite import run_suite

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _num(x) -> str:
    if isinstance(x, Fraction) and x.denominator != 1:
        return f"{x.numerator}/{x.denominator}"
    return str(int(x))


def _dump_json(doc, out):
    json.dump(doc, out, indent=2)
    out.write("\n")


def _csv_writer(out):
    return csv.writer(out, lineterminator="\n")


def format_bfile(values) -> str:
    return "".join(f"{i} {v}\n" for i, v in enumerate(values, start=1))


def parse_bfile(text: str) -> list[tuple[int, int]]:
    """Parse ``index value`` lines; blank lines and '#' comments are skipped."""
    pairs = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise UsageError(f"line {lineno}: expected two integer tokens, got {line!r}")
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise UsageError(f"line {lineno}: non-integer token in {line!r}") from None
    return pairs


# -- subcommands --------------------------------------------------------------

def cmd_coeffs(args, out) -> int:
    status = EXIT_OK
    if args.kind == "a":
        if args.route:
            raise UsageError("--route applies to the c table only")
        if args.format == "bfile":
            raise UsageError("the a table is rational; bfile output needs integers")
        table = build_A(args.max_m)
        rows = [(m, list(table.row(m))) for m in range(2, args.max_m + 1)]
    else:
        if args.route:
            table = build_C(args.max_m, args.route, jobs=args.jobs)
        else:
            tables = {r: build_C(args.max_m, r, jobs=args.jobs) for r in ROUTES}
            table = tables["recurrence"]
            for r, t in tables.items():
                if t.rows != table.rows:
                    bad = next(m for m in range(2, args.max_m + 1) if t.row(m) != table.row(m))
                    print(f"route {r} disagrees with recurrence at row m={bad}", file=sys.stderr)
                    status = EXIT_MISMATCH
        rows = [(m, list(table.row(m))) for m in range(2, args.max_m + 1)]

    route_label = args.route or ("all" if args.kind == "c" else "cofa1")
    if args.format == "bfile":
        out.write(format_bfile(v for _, row in rows for v in row))
    elif args.format == "csv":
        w = _csv_writer(out)
        w.writerow(["m", "k", "value"])
        for m, row in rows:
            for k, v in enumerate(row, start=2):
                w.writerow([m, k, _num(v)])
    else:
        _dump_json({
            "kind": args.kind,
            "params": {"max_m": str(args.max_m), "route": route_label},
            "rows": [{"m": str(m), "values": [_num(v) for v in row]} for m, row in rows],
        }, out)
    return status


def cmd_hypersum(args, out) -> int:
    m, a, n = args.m, args.a, args.n
    ev = Evaluator(max(m, 2))
    if args.method == "all":
        methods = ev.applicable(m) if n >= 1 and a >= 0 else ["oracle"]
    else:
        methods = [args.method]
    try:
        for meth in methods:
            HyperSumQuery(m, a, n, meth)
    except ValueError as e:
        raise UsageError(str(e)) from None
    results = {meth: ev.evaluate(m, a, n, meth) for meth in methods}
    agree = len(set(results.values())) == 1

    if args.format == "json":
        _dump_json({
            "kind": "hypersum",
            "params": {"m": str(m), "a": str(a), "n": str(n), "method": args.method},
            "results": [{"method": k, "value": str(v)} for k, v in results.items()],
            "agree": agree,
        }, out)
    else:
        w = _csv_writer(out)
        w.writerow(["method", "value"])
        for k, v in results.items():
            w.writerow([k, v])
    if not agree:
        print(f"methods disagree: {results}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def _write_records(kind, params, records, fmt, out):
    if fmt == "json":
        _dump_json({"kind": kind, "params": params, "results": records}, out)
        return
    w = _csv_writer(out)
    keys = list(records[0]) if records else []
    w.writerow(keys)
    for r in records:
        w.writerow(["" if r[k] is None else json.dumps(r[k]) if isinstance(r[k], dict) else r[k]
                    for k in keys])


def cmd_verify(args, out) -> int:
    results = run_suite(args.max_m, args.max_a, args.max_n, jobs=args.jobs)
    params = {"max_m": str(args.max_m), "max_a": str(args.max_a), "max_n": str(args.max_n)}
    _write_records("verify", params, [r.as_dict() for r in results], args.format, out)
    failed = [r.name for r in results if not r.ok]
    if failed:
        print(f"failed identities: {', '.join(failed)}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def _conjecture_table_size(k_max, m_max):
    # enough rows for the largest odd fit (start 2k+4, 2k+1 samples, 5 checks)
    return max(m_max, 4 * k_max + 9)


def cmd_conjecture(args, out) -> int:
    table = build_C(_conjecture_table_size(args.k_max, args.max_m))
    report = check_conjecture(args.k_max, args.max_m, table)
    params = {"k_max": str(args.k_max), "max_m": str(args.max_m)}
    _write_records("conjecture", params, [r.as_dict() for r in report.records], args.format, out)
    if not report.ok:
        for r in report.falsifications():
            print(f"falsified: k={r.k} {r.parity} {r.claim} at m={r.failure_m}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_oeis(args, out) -> int:
    values = build_C(args.max_m).flat()
    if not args.compare:
        out.write(format_bfile(values))
        return EXIT_OK
    try:
        with open(args.compare, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise UsageError(f"cannot read {args.compare}: {e}") from None
    theirs = parse_bfile(text)
    ours = list(enumerate(values, start=1))
    for (i, v), (j, w) in zip(ours, theirs):
        if i != j or v != w:
            out.write(f"mismatch at index {i}: expected {i} {v}, file has {j} {w}\n")
            return EXIT_MISMATCH
    out.write(f"agree on {min(len(ours), len(theirs))} terms\n")
    return EXIT_OK


# -- parser -------------------------------------------------------------------

def _at_least(lo):
    def parse(s):
        try:
            v = int(s)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{s!r} is not an integer") from None
        if v < lo:
            raise argparse.ArgumentTypeError(f"must be >= {lo}, got {v}")
        return v
    return parse


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="psisum",
        description="Exact coefficient tables, hyper-sums and identity checks for the psi-basis "
                    "expansion of iterated power sums.",
        epilog="Exit status: 0 ok, 1 disagreement or mismatch, 2 usage error. b-file output lists "
               "the c triangle row by row (m = 2 first, k ascending) with 1-based indices.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("coeffs", help="print the c_mk or a_ml triangle")
    c.add_argument("kind", choices=["c", "a"])
    c.add_argument("--max-m", type=_at_least(2), required=True)
    c.add_argument("--route", choices=ROUTES,
                   help="c only; omitted means build by every route and require agreement")
    c.add_argument("--format", choices=["json", "csv", "bfile"], default="csv")
    c.add_argument("--jobs", type=_at_least(1), default=1)
    c.set_defaults(func=cmd_coeffs)

    h = sub.add_parser("hypersum", help="evaluate S_m^(a)(n)")
    h.add_argument("--m", type=_at_least(0), required=True)
    h.add_argument("--a", type=_at_least(0), required=True)
    h.add_argument("--n", type=_at_least(1), required=True)
    h.add_argument("--method", choices=("all",) + METHODS, default="all")
    h.add_argument("--format", choices=["json", "csv"], default="csv")
    h.set_defaults(func=cmd_hypersum)

    v = sub.add_parser("verify", help="run the identity suite")
    v.add_argument("--max-m", type=_at_least(2), default=10)
    v.add_argument("--max-a", type=_at_least(0), default=4)
    v.add_argument("--max-n", type=_at_least(2), default=12)
    v.add_argument("--format", choices=["json", "csv"], default="csv")
    v.add_argument("--jobs", type=_at_least(1), default=1)
    v.set_defaults(func=cmd_verify)

    k = sub.add_parser("conjecture", help="check the conjectured diagonal structure")
    k.add_argument("--k-max", type=_at_least(0), default=5)
    k.add_argument("--max-m", type=_at_least(2), default=40)
    k.add_argument("--format", choices=["json", "csv"], default="csv")
    k.set_defaults(func=cmd_conjecture)

    o = sub.add_parser("oeis", help="emit the c triangle as a b-file or compare with one")
    o.add_argument("--max-m", type=_at_least(2), required=True)
    o.add_argument("--compare", metavar="PATH", help="local b-file to compare against")
    o.set_defaults(func=cmd_oeis)
    return p


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args, out)
    except (UsageError, InsufficientTableError) as e:
        print(f"psisum: error: {e}", file=sys.stderr)
        return EXIT_USAGE


def run(argv=None) -> tuple[int, str]:
    """Run the CLI in-process and capture stdout."""
    buf = io.StringIO()
    code = main(argv, out=buf)
    return code, buf.getvalue()
