"""Command-line frontend.

Subcommands: count, oracle, oeis, teach, asympt, bench.  Big integers are
always rendered as exact decimal strings.  Exit codes: 0 success (and all
checks matched), 1 usage error, 2 capacity error, 3 validation mismatch.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from typing import Optional, Sequence

from . import __version__
from .asymptotics import reports_to_csv, residual_sweep
from .counting import breakdown, count_p, count_total
from .errors import CapacityError
from .grid import GridSpec
from .numtheory import sieve, u_mobius
from .oracle import cross_validate, dump_functions, enumerate_by_lines, enumerate_by_subsets
from .teaching import census

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CAPACITY = 2
EXIT_MISMATCH = 3

OEIS_SEQUENCES = ("A114146", "A114043", "A018805")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad flags; the CLI contract reserves 2 for
    # capacity problems, so usage errors are rerouted to exit code 1
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _emit(record: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(record, indent=2, sort_keys=True))
    else:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        keys = list(record)
        writer.writerow(keys)
        writer.writerow([record[k] for k in keys])
        sys.stdout.write(out.getvalue())


def _cmd_count(args: argparse.Namespace) -> int:
    if (args.k is None) == (args.m is None and args.n is None):
        raise UsageError("give either --k or both --m and --n")
    started = time.perf_counter()
    if args.k is not None:
        if args.k < 1:
            raise UsageError("--k must be >= 1")
        grid = GridSpec(args.k - 1, args.k - 1)
    else:
        if args.m is None or args.n is None:
            raise UsageError("give both --m and --n")
        grid = GridSpec(args.m, args.n)
    tables = sieve(max(1, min(grid.m, grid.n)))
    record: dict = {
        "command": "count",
        "m": grid.m,
        "n": grid.n,
    }
    if args.k is not None:
        record["k"] = args.k
        record["P"] = str(count_p(args.k, tables))
    record["total"] = str(count_total(grid, tables))
    if args.breakdown:
        b = breakdown(grid, tables)
        record["stable"] = str(b.stable)
        record["unstable"] = str(b.unstable)
        record["f_class"] = str(b.f_class)
        record["provenance"] = b.provenance
    record["elapsed_ms"] = round(1000 * (time.perf_counter() - started), 3)
    _emit(record, args.format)
    return EXIT_OK


def _cmd_oracle(args: argparse.Namespace) -> int:
    grid = GridSpec(args.m, args.n)
    tables = sieve(max(1, min(grid.m, grid.n)))
    started = time.perf_counter()
    # honour the requested method's capacity limits before validating
    dump_source = None
    if args.method in ("subsets", "both"):
        dump_source = enumerate_by_subsets(grid)
    if args.method in ("lines", "both"):
        dump_source = enumerate_by_lines(grid)
    if args.dump and dump_source is not None:
        dump_functions(dump_source, args.dump)
    report = cross_validate(grid, tables)
    record = {
        "command": "oracle",
        "m": grid.m,
        "n": grid.n,
        "method": args.method,
        "formula_total": str(report.formula_total),
        "formula_stable": str(report.formula_stable),
        "formula_unstable": str(report.formula_unstable),
        "subset_total": None if report.subset_total is None else str(report.subset_total),
        "lines_total": None if report.lines_total is None else str(report.lines_total),
        "oracle_stable": None if report.oracle_stable is None else str(report.oracle_stable),
        "oracle_unstable": None if report.oracle_unstable is None else str(report.oracle_unstable),
        "provenance": report.provenance,
        "all_match": report.all_match,
        "elapsed_ms": round(1000 * (time.perf_counter() - started), 3),
    }
    _emit(record, args.format)
    for witness in report.witnesses:
        print(witness, file=sys.stderr)
    return EXIT_OK if report.all_match else EXIT_MISMATCH


def _cmd_oeis(args: argparse.Namespace) -> int:
    if args.count < 1:
        raise UsageError("--count must be >= 1")
    tables = sieve(max(1, args.count))
    lines = []
    for k in range(1, args.count + 1):
        if args.sequence == "A114146":
            value = count_p(k, tables)
        elif args.sequence == "A114043":
            p = count_p(k, tables)
            assert p % 2 == 0, "P(k, 2) is always even"
            value = p // 2
        else:  # A018805: coprime pairs in the k x k square
            value = u_mobius(k, k, tables)
        lines.append(f"{k} {value}")
    text = "\n".join(lines) + "\n"
    if args.output:
        with open(args.output, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_teach(args: argparse.Namespace) -> int:
    grid = GridSpec(args.m, args.n)
    result = census(grid)
    if args.format == "json":
        record = {
            "command": "teach",
            "m": grid.m,
            "n": grid.n,
            "histogram": {str(k): v for k, v in result.histogram().items()},
            "mismatches": len(result.mismatches()),
        }
        print(json.dumps(record, indent=2, sort_keys=True))
    else:
        sys.stdout.write(result.to_csv())
    mismatches = result.mismatches()
    if mismatches:
        for r in mismatches:
            print(
                f"rule mismatch: predicted {r.predicted_size}, exhaustive {r.min_size}\n"
                + r.fn.render(),
                file=sys.stderr,
            )
        if args.check:
            return EXIT_MISMATCH
    return EXIT_OK


def _cmd_asympt(args: argparse.Namespace) -> int:
    if args.family == "square":
        ks = tuple(k for k in (16, 32, 64, 128, 256, 512, 1024, 2048, 4096) if k <= args.max_k)
        if not ks:
            raise UsageError("--max-k too small, no sample points")
        tables = sieve(max(ks))
        rows = residual_sweep(tables, square_ks=ks, aniso_ns=(), aniso_ms=())
    elif args.family == "anisotropic":
        tables = sieve(100_000)
        rows = residual_sweep(tables, square_ks=())
    else:
        tables = sieve(100_000)
        rows = residual_sweep(tables)
    sys.stdout.write(reports_to_csv(rows))
    return EXIT_OK


def _cmd_bench(args: argparse.Namespace) -> int:
    if args.k < 1:
        raise UsageError("--k must be >= 1")
    if args.repeat < 1:
        raise UsageError("--repeat must be >= 1")
    timings = []
    value = 0
    for _ in range(args.repeat):
        started = time.perf_counter()
        tables = sieve(max(1, args.k - 1))
        value = count_p(args.k, tables)
        timings.append(time.perf_counter() - started)
    record = {
        "command": "bench",
        "k": args.k,
        "repeat": args.repeat,
        "best_seconds": round(min(timings), 6),
        "P_digits": len(str(value)),
        "P": str(value),
    }
    _emit(record, args.format)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gridthresh",
                     description="Exact counts of two-dimensional threshold functions")
    parser.add_argument("--version", action="version", version=f"gridthresh {__version__}")
    sub = parser.add_subparsers(dest="cmd", required=True)

    p_count = sub.add_parser("count", help="N(m, n) or P(k, 2), optionally with the breakdown")
    p_count.add_argument("--m", type=int)
    p_count.add_argument("--n", type=int)
    p_count.add_argument("--k", type=int)
    p_count.add_argument("--breakdown", action="store_true")
    p_count.add_argument("--format", choices=("json", "csv"), default="json")
    p_count.set_defaults(run=_cmd_count)

    p_oracle = sub.add_parser("oracle", help="cross-validate formulas against brute force")
    p_oracle.add_argument("--m", type=int, required=True)
    p_oracle.add_argument("--n", type=int, required=True)
    p_oracle.add_argument("--method", choices=("subsets", "lines", "both"), default="both")
    p_oracle.add_argument("--dump", metavar="PATH", help="write enumerated zero bit-strings")
    p_oracle.add_argument("--format", choices=("json", "csv"), default="json")
    p_oracle.set_defaults(run=_cmd_oracle)

    p_oeis = sub.add_parser("oeis", help="emit an OEIS b-file")
    p_oeis.add_argument("--sequence", choices=OEIS_SEQUENCES, required=True)
    p_oeis.add_argument("--count", type=int, default=20)
    p_oeis.add_argument("--output", metavar="PATH")
    p_oeis.set_defaults(run=_cmd_oeis)

    p_teach = sub.add_parser("teach", help="teaching-set census of a grid")
    p_teach.add_argument("--m", type=int, required=True)
    p_teach.add_argument("--n", type=int, required=True)
    p_teach.add_argument("--check", action="store_true",
                         help="exit 3 if the 3/4 rule disagrees with exhaustive search")
    p_teach.add_argument("--format", choices=("csv", "json"), default="csv")
    p_teach.set_defaults(run=_cmd_teach)

    p_asympt = sub.add_parser("asympt", help="residual sweep against the asymptotic laws")
    p_asympt.add_argument("--family", choices=("square", "anisotropic", "all"), default="all")
    p_asympt.add_argument("--max-k", type=int, default=4096)
    p_asympt.set_defaults(run=_cmd_asympt)

    p_bench = sub.add_parser("bench", help="wall-clock of count_p including the sieve")
    p_bench.add_argument("--k", type=int, required=True)
    p_bench.add_argument("--repeat", type=int, default=3)
    p_bench.add_argument("--format", choices=("json", "csv"), default="json")
    p_bench.set_defaults(run=_cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.run(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY


if __name__ == "__main__":
    sys.exit(main())
