"""Acceptance criteria 1-10, each at its stated bound and with zero tolerance.

Every criterion prints one ``criterion N: PASS|FAIL`` line; the lines are
also repeated in the terminal summary.  Run on its own with
``pytest tests/test_acceptance.py -v``.
"""

import io
import json
import time

import pytest

from rpl.checks import CATALOG
from rpl.cli import main
from rpl.partitions import parse_partition
from rpl.tables import GRID_9, ORBITS_9

RESULTS: dict[int, str] = {}


def record(n: int, ok: bool, detail: str) -> None:
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'} {detail}"
    RESULTS[n] = line
    print(line)
    assert ok, line


def run_checks(spec: list[tuple[str, dict]]):
    """Run catalog checks with explicit parameters; returns (all passed, summary, seconds)."""
    start = time.perf_counter()
    reports = [CATALOG[name].run(**params) for name, params in spec]
    elapsed = time.perf_counter() - start
    bad = [r for r in reports if not r.passed]
    if bad:
        r = bad[0]
        return False, f"{r.check_name} failed: {json.dumps(r.counterexample)}", elapsed
    names = ", ".join(f"{r.check_name}{r.params or ''}" for r in reports)
    return True, names, elapsed


def cli(argv):
    out = io.StringIO()
    start = time.perf_counter()
    code = main(argv, out=out)
    return code, out.getvalue(), time.perf_counter() - start


def test_criterion_1_stcrank_grid():
    code, text, secs = cli(["classify", "--n", "9", "--format", "json"])
    cells = {(r["row"], r["col"]): {tuple(p) for p in r["partitions"]} for r in map(json.loads, text.splitlines())}
    sizes_ok = all(len(v) == (4 if i == 0 else 2) for (i, _), v in cells.items())
    match = cells == {k: set(v) for k, v in GRID_9.items()}
    columns = {k for _, k in cells} == set(range(5))
    code_t, grid, secs_t = cli(["classify", "--n", "9"])
    ok = code == code_t == 0 and sizes_ok and match and columns and len(grid.splitlines()) == 8
    record(1, ok and secs < 1 and secs_t < 1, f"30 partitions in a 5x(4+2) grid, {max(secs, secs_t):.3f}s")


def test_criterion_2_orbit_rows():
    code, text, secs = cli(["orbits", "--n", "9", "--operator", "srank", "--format", "csv"])
    rows = text.splitlines()[1:]
    got = {tuple(parse_partition(tok) for tok in row.split(",")[2:]) for row in rows}
    classes = sorted(int(row.split(",")[1]) for row in rows)
    from rpl.cores import five_core_crank

    cranks_ok = all([five_core_crank(p) for p in orb] == [0, 1, 2, 3, 4] for orb in got)
    ok = code == 0 and len(rows) == 6 and got == {row for _, row in ORBITS_9} and classes == [0, 0, 0, 0, 2, 2]
    record(2, ok and cranks_ok and secs < 1, f"6 orbits equal to the reference rows, {secs:.3f}s")


def test_criterion_3_stcrank_equidistribution():
    ok, detail, secs = run_checks([("theorem1", {"max_n": 49})])
    record(3, ok and secs < 30, f"{detail}, {secs:.1f}s (limit 30s)")


def test_criterion_4_orbit_structure():
    ok, detail, secs = run_checks([("orbits_srank", {"max_n": 49})])
    record(4, ok, f"{detail}, {secs:.1f}s")


def test_criterion_5_congruences():
    ok, detail, secs = run_checks([
        ("ram5", {"max_n": 49}),
        ("andrefine", {"max_n": 49}),
        ("ram7", {"max_n": 47}),
        ("ram11", {"max_n": 39}),
        ("dyson", {"max_n": 49}),
        ("agcrank", {"max_n": 49}),
    ])
    record(5, ok, f"{detail}, {secs:.1f}s")


def test_criterion_6_series():
    ok, detail, secs = run_checks([
        ("stcrank_product", {"order": 25}),
        ("rsgf", {"order": 25}),
        ("crankgf", {"order": 25}),
        ("p02prod", {"order": 30}),
        ("srankprodid", {"order": 30}),
        ("jtpa", {"order": 200}),
        ("jtp", {"order": 100}),
        ("tcore_lattice", {"order": 40}),
        ("coresift5", {"order": 30}),
        ("rambest", {"order": 40}),
    ])
    record(6, ok and secs < 60, f"{detail}, {secs:.1f}s (limit 60s)")


def test_criterion_7_roots_of_unity():
    # order 30 covers every q^(5n+4) with 5n+4 <= 29
    ok, detail, secs = run_checks([("coeffz1", {"order": 30}), ("coeffzi", {"order": 30})])
    record(7, ok, f"{detail}, {secs:.1f}s")


def test_criterion_8_five_cores():
    ok, detail, secs = run_checks([
        ("corerel", {"max_n": 40}),
        ("theta", {"max_n": 30}),
        ("refine", {"max_n": 30}),
        ("a50forms", {"max_n": 60}),
    ])
    record(8, ok, f"{detail}, {secs:.1f}s")


def test_criterion_9_srank_formulas():
    ok, detail, secs = run_checks([("elegant1", {"max_n": 40}), ("elegant2", {"max_n": 25})])
    record(9, ok, f"{detail}, {secs:.1f}s")


def test_criterion_10_oracles():
    ok, detail, secs = run_checks([("enumeration", {"max_n": 60}), ("abacus_core", {"max_n": 20})])
    record(10, ok, f"{detail}, {secs:.1f}s")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-s"]))
