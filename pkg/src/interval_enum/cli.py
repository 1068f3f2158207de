"""Command-line entry point: ``interval-enum <verb> ...``.

Exit status is 0 on success, 1 on a bound violation or oracle mismatch, and
2 on bad input, parse errors or a capacity refusal.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from typing import Sequence, TextIO

from . import bounds, codec, enumerator
from .graph6 import Graph6Error, from_graph6, to_graph6
from .recognizer import is_interval
from .representation import intervals_from_json, intervals_to_graph

EXIT_OK, EXIT_VIOLATION, EXIT_BAD_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _threads(value: str) -> int:
    n = int(value)
    if n < 1:
        raise argparse.ArgumentTypeError("threads must be at least 1")
    return n


def _n_values(args: argparse.Namespace, default_max: int) -> list[int]:
    if args.n is not None:
        return [args.n]
    lo = args.min_n if args.min_n is not None else 0
    hi = args.max_n if args.max_n is not None else default_max
    if lo > hi:
        raise InputError(f"--min-n {lo} is above --max-n {hi}")
    return list(range(lo, hi + 1))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="interval-enum", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_range(p: argparse.ArgumentParser) -> None:
        p.add_argument("--n", type=int, help="a single vertex count")
        p.add_argument("--min-n", type=int)
        p.add_argument("--max-n", type=int)

    def add_threads(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--threads",
            type=_threads,
            help=f"worker processes (default: ${enumerator.THREADS_ENV} or the CPU count)",
        )

    p = sub.add_parser("enumerate", help="count interval graphs for each n")
    add_range(p)
    add_threads(p)
    p.add_argument("--format", choices=["csv", "json", "graph6"], default="csv")
    p.add_argument("--csv", dest="csv_path", help="results CSV to reuse and update")
    p.add_argument("--recompute", action="store_true", help="ignore rows already in --csv")
    p.add_argument("--force", action="store_true", help=f"allow n above {enumerator.DEFAULT_CAP}")

    p = sub.add_parser("encode", help="permutation -> colored interval system JSON")
    p.add_argument("--perm", required=True, help='one-line image, e.g. "2 1 3"')

    p = sub.add_parser("decode", help="colored interval system JSON -> permutation")
    p.add_argument("--input", default="-", help="JSON file (default: stdin)")

    p = sub.add_parser("recognize", help="graph6 or interval JSON lines -> verdict JSON lines")
    p.add_argument("--input", default="-", help="input file (default: stdin)")

    p = sub.add_parser("verify-bounds", help="check the lower/upper bounds on computed counts")
    add_range(p)
    add_threads(p)
    p.add_argument("--csv", dest="csv_path", help="read counts from this CSV instead of computing")
    p.add_argument("--identities-max", type=int, default=50)

    p = sub.add_parser("oracle", help="independent count, diffed against stored or fresh counts")
    add_range(p)
    add_threads(p)
    p.add_argument("--csv", dest="csv_path", help="stored counts to compare against")
    p.add_argument("--method", choices=["labeled", "exhaustive", "extension"], default="labeled")
    return parser


def _open_input(path: str) -> TextIO:
    return sys.stdin if path == "-" else open(path)


def _cmd_enumerate(args: argparse.Namespace, out: TextIO) -> int:
    ns = _n_values(args, default_max=7)
    threads = args.threads or enumerator.default_threads()
    for n in ns:
        enumerator.check_capacity(n, force=args.force)
    if args.format == "graph6":
        if len(ns) != 1:
            raise InputError("--format graph6 needs a single --n")
        enumerator.enumerate_distinct(ns[0], lambda g: out.write(to_graph6(g) + "\n"), threads, force=args.force)
        return EXIT_OK
    if args.csv_path:
        records = enumerator.update_counts_csv(
            args.csv_path, ns, threads, force=args.force, recompute=args.recompute
        )
    else:
        records = [enumerator.count_interval_graphs(n, threads, force=args.force) for n in ns]
    if args.format == "json":
        for rec in records:
            low = rec.lower_bound
            doc = {
                "n": rec.n,
                "i_n": rec.i_n,
                "matchings": rec.matchings_visited,
                "lower_bound": None if low is None else f"{low.numerator}/{low.denominator}",
                "upper_bound": rec.upper_bound,
                "seconds": round(rec.wall_time, 3),
            }
            out.write(json.dumps(doc, sort_keys=True) + "\n")
    else:
        rows = [enumerator.report_row(r) for r in records]
        writer = csv.DictWriter(out, fieldnames=enumerator.CSV_COLUMNS, extrasaction="ignore", lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    return EXIT_OK


def _cmd_encode(args: argparse.Namespace, out: TextIO) -> int:
    try:
        p = codec.Permutation.parse(args.perm)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if p.k == 0:
        raise InputError("empty permutation")
    out.write(codec.encode(p).to_json() + "\n")
    return EXIT_OK


def _cmd_decode(args: argparse.Namespace, out: TextIO) -> int:
    with _open_input(args.input) as fh:
        text = fh.read()
    try:
        system = codec.ColoredIntervalSystem.from_json(text)
        if 3 * system.k <= codec.MAX_VERTICES and system.k >= 1:
            cg = codec.ColoredGraph(intervals_to_graph(system.intervals()), tuple(system.colors()))
            p = codec.decode(cg)
        else:
            p = codec.decode_system(system)
    except (ValueError, KeyError, TypeError) as exc:
        raise InputError(str(exc)) from None
    out.write(str(p) + "\n")
    return EXIT_OK


def _cmd_recognize(args: argparse.Namespace, out: TextIO) -> int:
    with _open_input(args.input) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            try:
                if line.startswith("{"):
                    intervals, _ = intervals_from_json(line)
                    g = intervals_to_graph(intervals)
                else:
                    g = from_graph6(line)
            except (Graph6Error, ValueError) as exc:
                raise InputError(f"line {lineno}: {exc}") from None
            out.write(json.dumps(is_interval(g).to_json()) + "\n")
    return EXIT_OK


def _load_or_count(args: argparse.Namespace, ns: Sequence[int]) -> list[enumerator.CountsRecord]:
    if args.csv_path:
        try:
            stored = enumerator.read_counts_csv(args.csv_path)
        except (OSError, KeyError, ValueError) as exc:
            raise InputError(f"cannot read {args.csv_path}: {exc}") from None
        if args.n is None and args.min_n is None and args.max_n is None:
            return [stored[n] for n in sorted(stored)]
        missing = [n for n in ns if n not in stored]
        if missing:
            raise InputError(f"{args.csv_path} has no rows for n={missing}")
        return [stored[n] for n in ns]
    threads = args.threads or enumerator.default_threads()
    return [enumerator.count_interval_graphs(n, threads) for n in ns]


def _cmd_verify_bounds(args: argparse.Namespace, out: TextIO) -> int:
    records = _load_or_count(args, _n_values(args, default_max=7))
    reports = bounds.verify_sandwich(records)
    writer = csv.DictWriter(
        out, fieldnames=enumerator.CSV_COLUMNS + enumerator.BOUND_COLUMNS, lineterminator="\n"
    )
    writer.writeheader()
    for rec, rep in zip(records, reports):
        writer.writerow(enumerator.report_row(rec, rep))
    status = EXIT_OK
    for rep in reports:
        if not rep.ok:
            print(f"VIOLATION {rep.violation}", file=sys.stderr)
            status = EXIT_VIOLATION
    failed = bounds.first_identity_failure(args.identities_max)
    if failed is not None:
        print(f"VIOLATION double-factorial identity fails at n={failed}", file=sys.stderr)
        status = EXIT_VIOLATION
    return status


def _cmd_oracle(args: argparse.Namespace, out: TextIO) -> int:
    default_max = {"labeled": enumerator.ORACLE_CAP, "exhaustive": enumerator.EXHAUSTIVE_ORACLE_CAP}
    cap = default_max.get(args.method, enumerator.EXTENSION_ORACLE_CAP)
    ns = _n_values(args, default_max=cap)
    expected = {r.n: r.i_n for r in _load_or_count(args, ns)}
    if args.csv_path and args.n is None and args.min_n is None and args.max_n is None:
        ns = [n for n in sorted(expected) if n <= cap]
    status = EXIT_OK
    out.write("n,oracle,enumerator,match\n")
    for n in ns:
        got = enumerator.oracle_count_interval_graphs(n, args.method)
        want = expected.get(n)
        match = got == want
        out.write(f"{n},{got},{'' if want is None else want},{'yes' if match else 'NO'}\n")
        if not match:
            status = EXIT_VIOLATION
    return status


COMMANDS = {
    "enumerate": _cmd_enumerate,
    "encode": _cmd_encode,
    "decode": _cmd_decode,
    "recognize": _cmd_recognize,
    "verify-bounds": _cmd_verify_bounds,
    "oracle": _cmd_oracle,
}


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    out = out or sys.stdout
    try:
        return COMMANDS[args.verb](args, out)
    except (InputError, enumerator.CapacityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
