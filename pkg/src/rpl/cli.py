"""Command-line front end: ``rpl verify|classify|orbits|stats|cores``.

Exit codes: 0 success, 1 a mathematical check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Sequence

from . import cores
from .checks import CATALOG, CheckReport, run_checks
from .partitions import (
    STATISTICS,
    DomainError,
    Partition,
    enumerate_partitions,
    freq_notation,
    srank,
    statistic_function,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _token(p: Sequence[int]) -> str:
    """CSV form of a partition, e.g. ``1^4.5^1``."""
    return freq_notation(p, sep=".", brackets=False)


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {value}")
    return value


def _positive(text: str) -> int:
    value = _nonneg(text)
    if value == 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _env_order() -> int | None:
    raw = os.environ.get("RPL_DEFAULT_ORDER")
    if raw is None or raw == "":
        return None
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"RPL_DEFAULT_ORDER is not an integer: {raw!r}") from None
    if value < 1:
        raise UsageError("RPL_DEFAULT_ORDER must be positive")
    return value


def _csv_text(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _json_lines(records) -> str:
    return "".join(json.dumps(r, separators=(", ", ": ")) + "\n" for r in records)


# -- verify ---------------------------------------------------------------


def _report_line(report: CheckReport, timings: bool) -> str:
    params = " ".join(f"{k}={v}" for k, v in sorted(report.params.items()))
    line = f"{report.verdict.upper():4s} {report.check_name}"
    if params:
        line += f" [{params}]"
    if timings:
        line += f" {report.elapsed:.2f}s"
    if report.counterexample:
        ce = report.counterexample
        line += f"\n     input: {ce['input']}\n     expected: {ce['expected']}\n     actual: {ce['actual']}"
        if "note" in ce:
            line += f"\n     note: {ce['note']}"
    return line


def cmd_verify(args, out) -> int:
    if args.list:
        for name, chk in CATALOG.items():
            params = " ".join(f"{k}={v}" for k, v in chk.params.items())
            out.write(f"{name:16s} {params:12s} {chk.anchor}\n")
        return EXIT_OK
    names = args.names or ["all"]
    if "all" in names:
        if len(names) > 1:
            raise UsageError("'all' cannot be combined with other check names")
        names = list(CATALOG)
    unknown = [n for n in names if n not in CATALOG]
    if unknown:
        raise UsageError(f"unknown check(s): {', '.join(unknown)}; see 'verify --list'")
    order = args.order if args.order is not None else _env_order()
    overrides = {"max_n": args.max_n, "order": order}
    try:
        reports = run_checks(names, jobs=args.jobs, stop_on_failure=not args.keep_going, **overrides)
    except DomainError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        out.write(_json_lines(r.to_dict(args.timings) for r in reports))
    elif args.format == "csv":
        header = ["check", "verdict", "params", "counterexample"] + (["elapsed"] if args.timings else [])
        rows = []
        for r in reports:
            d = r.to_dict(args.timings)
            row = [d["check"], d["verdict"], json.dumps(d["params"]), json.dumps(d["counterexample"]) if d["counterexample"] else ""]
            if args.timings:
                row.append(d["elapsed"])
            rows.append(row)
        out.write(_csv_text(header, rows))
    else:
        for r in reports:
            out.write(_report_line(r, args.timings) + "\n")
        failed = sum(not r.passed for r in reports)
        out.write(f"{len(reports) - failed} passed, {failed} failed\n")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


# -- classify -------------------------------------------------------------


def classify_grid(n: int, row_stat: str, row_mod: int, col_stat: str, col_mod: int):
    """``{(row residue, column residue): [partitions in enumeration order]}``."""
    fr, fc = statistic_function(row_stat), statistic_function(col_stat)
    grid: dict[tuple[int, int], list[Partition]] = {
        (i, k): [] for i in range(row_mod) for k in range(col_mod)
    }
    for p in enumerate_partitions(n):
        grid[fr(p) % row_mod, fc(p) % col_mod].append(p)
    return grid


def _render_grid(grid, row_mod: int, col_mod: int, row_stat: str, col_stat: str) -> str:
    rows = [i for i in range(row_mod) if any(grid[i, k] for k in range(col_mod))]
    cells = {key: [freq_notation(p) for p in v] for key, v in grid.items()}
    label_w = max(len(row_stat) + 6, 8)
    width = max([len(s) for v in cells.values() for s in v] + [len(f"{col_stat}={col_mod - 1}")])
    lines = [f"{row_stat} \\ {col_stat} (mod {row_mod}, mod {col_mod})"]
    head = " " * label_w + "  ".join(f"{col_stat}={k}".ljust(width) for k in range(col_mod))
    lines.append(head.rstrip())
    for i in rows:
        depth = max(len(cells[i, k]) for k in range(col_mod))
        for d in range(depth):
            label = f"{row_stat}={i}" if d == 0 else ""
            entries = [cells[i, k][d] if d < len(cells[i, k]) else "" for k in range(col_mod)]
            lines.append((label.ljust(label_w) + "  ".join(e.ljust(width) for e in entries)).rstrip())
    return "\n".join(lines) + "\n"


def cmd_classify(args, out) -> int:
    for stat in (args.rows, args.cols):
        if stat not in STATISTICS:
            raise UsageError(f"unknown statistic {stat!r}; choose from {', '.join(STATISTICS)}")
        if stat == "c5core" and args.n % 5 != 4:
            raise UsageError("c5core needs n = 4 mod 5")
    grid = classify_grid(args.n, args.rows, args.row_mod, args.cols, args.col_mod)
    if args.format == "text":
        out.write(_render_grid(grid, args.row_mod, args.col_mod, args.rows, args.cols))
    elif args.format == "csv":
        rows = [[i, k, len(v), " ".join(_token(p) for p in v)] for (i, k), v in grid.items() if v]
        out.write(_csv_text([f"{args.rows}_mod_{args.row_mod}", f"{args.cols}_mod_{args.col_mod}", "count", "partitions"], rows))
    else:
        out.write(_json_lines(
            {"row": i, "col": k, "count": len(v), "partitions": [list(p) for p in v]}
            for (i, k), v in grid.items() if v
        ))
    return EXIT_OK


# -- orbits ---------------------------------------------------------------


def cmd_orbits(args, out) -> int:
    if args.n % 5 != 4:
        raise UsageError(f"orbits need n = 4 mod 5, got {args.n}")
    table = cores.orbit_table(args.n, args.operator)
    classes = [srank(orb[0]) % 4 for orb in table]
    if args.format == "text":
        cells = [[freq_notation(p) for p in orb] for orb in table]
        width = max(len(s) for row in cells for s in row)
        out.write("srank  " + "  ".join(f"c5={k}".ljust(width) for k in range(5)).rstrip() + "\n")
        for cls, row in zip(classes, cells):
            out.write((f"{cls:<7d}" + "  ".join(s.ljust(width) for s in row)).rstrip() + "\n")
    elif args.format == "csv":
        rows = [[j, cls] + [_token(p) for p in orb] for j, (cls, orb) in enumerate(zip(classes, table))]
        out.write(_csv_text(["orbit", "srank_mod_4"] + [f"c5_{k}" for k in range(5)], rows))
    else:
        out.write(_json_lines(
            {"orbit": j, "srank_mod_4": cls, "members": [list(p) for p in orb]}
            for j, (cls, orb) in enumerate(zip(classes, table))
        ))
    return EXIT_OK


# -- stats ----------------------------------------------------------------


def cmd_stats(args, out) -> int:
    names = [s for s in args.stats.split(",") if s]
    if not names:
        raise UsageError("no statistics requested")
    for s in names:
        if s not in STATISTICS:
            raise UsageError(f"unknown statistic {s!r}; choose from {', '.join(STATISTICS)}")
    if "c5core" in names and args.n % 5 != 4:
        raise UsageError("c5core needs n = 4 mod 5")
    fns = [statistic_function(s) for s in names]
    records = [(p, [f(p) for f in fns]) for p in enumerate_partitions(args.n)]
    if args.format == "text":
        shown = [freq_notation(p) for p, _ in records]
        width = max(len(s) for s in shown + ["partition"])
        out.write(("partition".ljust(width) + "".join(f"{s:>9s}" for s in names)) + "\n")
        for s, (_, vals) in zip(shown, records):
            out.write(s.ljust(width) + "".join(f"{v:>9d}" for v in vals) + "\n")
    elif args.format == "csv":
        out.write(_csv_text(["partition", "weight"] + names, [[_token(p), args.n] + vals for p, vals in records]))
    else:
        out.write(_json_lines(
            {"partition": list(p), "weight": args.n, "stats": dict(zip(names, vals))} for p, vals in records
        ))
    return EXIT_OK


# -- cores ----------------------------------------------------------------


def cmd_cores(args, out) -> int:
    if args.t < 2:
        raise UsageError("t must be at least 2")
    found = cores.t_cores(args.n, args.t)
    with_crank = args.t == 5 and args.n % 5 == 4
    recs = []
    for c in found:
        rec = {"partition": list(c), "weight": args.n, "nvector": list(cores.phi2(c, args.t)), "srank": srank(c)}
        if with_crank:
            rec["alpha"] = list(cores.five_core_alpha(c))
            rec["c5core"] = cores.five_core_crank(c)
        recs.append(rec)
    if args.format == "json":
        out.write(_json_lines(recs))
    elif args.format == "csv":
        header = ["partition", "nvector", "srank"] + (["alpha", "c5core"] if with_crank else [])
        rows = []
        for c, r in zip(found, recs):
            row = [_token(c), " ".join(map(str, r["nvector"])), r["srank"]]
            if with_crank:
                row += [" ".join(map(str, r["alpha"])), r["c5core"]]
            rows.append(row)
        out.write(_csv_text(header, rows))
    else:
        out.write(f"{len(found)} {args.t}-cores of {args.n}\n")
        for c, r in zip(found, recs):
            line = f"{freq_notation(c):24s} n={tuple(r['nvector'])} srank={r['srank']}"
            if with_crank:
                line += f" alpha={tuple(r['alpha'])} c5={r['c5core']}"
            out.write(line + "\n")
    return EXIT_OK


# -- entry point ----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rpl", description="Partition statistics and identity checks.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    fmt = dict(choices=("text", "csv", "json"), default="text")

    v = sub.add_parser("verify", help="run named checks ('all' for the whole catalog)")
    v.add_argument("names", nargs="*")
    v.add_argument("--list", action="store_true", help="list the catalog and exit")
    v.add_argument("--max-n", type=_nonneg, help="largest weight for enumerative checks")
    v.add_argument("--order", type=_positive, help="series truncation order (default: RPL_DEFAULT_ORDER or per check)")
    v.add_argument("--format", **fmt)
    v.add_argument("--jobs", type=_positive, default=1)
    v.add_argument("--timings", action="store_true", help="include elapsed seconds in the report")
    v.add_argument("--keep-going", action="store_true", help="run the remaining checks after a failure")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("classify", help="grid of partitions of n by two statistics")
    c.add_argument("--n", type=_nonneg, default=9)
    c.add_argument("--rows", default="srank")
    c.add_argument("--row-mod", type=_positive, default=4)
    c.add_argument("--cols", default="stcrank")
    c.add_argument("--col-mod", type=_positive, default=5)
    c.add_argument("--format", **fmt)
    c.set_defaults(func=cmd_classify)

    o = sub.add_parser("orbits", help="orbits of the 5-core crank operators, n = 4 mod 5")
    o.add_argument("--n", type=_nonneg, default=9)
    o.add_argument("--operator", choices=cores.ORBIT_VARIANTS, default="srank")
    o.add_argument("--format", **fmt)
    o.set_defaults(func=cmd_orbits)

    s = sub.add_parser("stats", help="statistics of every partition of n")
    s.add_argument("--n", type=_nonneg, required=True)
    s.add_argument("--stats", default="srank,stcrank", help=f"comma list from {','.join(STATISTICS)}")
    s.add_argument("--format", **fmt)
    s.set_defaults(func=cmd_stats)

    k = sub.add_parser("cores", help="t-cores of n with their coordinates")
    k.add_argument("--n", type=_nonneg, required=True)
    k.add_argument("--t", type=int, default=5)
    k.add_argument("--format", **fmt)
    k.set_defaults(func=cmd_cores)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        sys.stderr.write(f"rpl: error: {exc}\n")
        return EXIT_USAGE
    except DomainError as exc:
        sys.stderr.write(f"rpl: error: {exc}\n")
        return EXIT_USAGE
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
