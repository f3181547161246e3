import csv
import io
import json

import pytest

import rpl.stanley
from rpl.checks import CATALOG, CheckReport, run_checks
from rpl.cli import main
from rpl.tables import GRID_9, ORBITS_9


def run(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


def test_verify_passes_and_lists():
    code, text = run(["verify", "grid9", "orbits9", "rambest", "--order", "40"])
    assert code == 0
    assert text.splitlines()[-1] == "3 passed, 0 failed"
    code, text = run(["verify", "--list"])
    assert code == 0
    assert [line.split()[0] for line in text.splitlines()] == list(CATALOG)


def test_verify_theorem1_json():
    code, text = run(["verify", "theorem1", "--max-n", "24", "--format", "json"])
    assert code == 0
    (rec,) = [json.loads(line) for line in text.splitlines()]
    assert rec["verdict"] == "pass" and rec["params"] == {"max_n": 24}
    assert "elapsed" not in rec


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "nonexistent"],
        ["verify", "all", "grid9"],
        ["verify", "grid9", "--max-n", "-3"],
        ["verify", "stcrank_product", "--order", "500"],
        ["frobnicate"],
        ["orbits", "--n", "8"],
        ["classify", "--rows", "bogus"],
        ["stats", "--n", "8", "--stats", "c5core"],
        ["stats", "--n", "8", "--stats", "srank,nope"],
        ["cores", "--n", "4", "--t", "1"],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    assert run(argv)[0] == 2
    assert "error" in capsys.readouterr().err


def test_bad_env_order_exit_2(monkeypatch):
    monkeypatch.setenv("RPL_DEFAULT_ORDER", "many")
    assert run(["verify", "jtp"])[0] == 2


def test_env_order_is_used(monkeypatch):
    monkeypatch.setenv("RPL_DEFAULT_ORDER", "12")
    code, text = run(["verify", "jtp", "stcrank_product", "--format", "json"])
    assert code == 0
    assert [json.loads(line)["params"] for line in text.splitlines()] == [{"order": 12}] * 2


def test_flipped_psi_fails_at_weight_9(monkeypatch):
    real = rpl.stanley.psi
    monkeypatch.setattr(rpl.stanley, "psi", lambda p: 1 - real(p))
    code, text = run(["verify", "all", "--format", "json"])
    assert code == 1
    last = json.loads(text.splitlines()[-1])
    assert last["verdict"] == "fail"
    assert sum(last["counterexample"]["input"]) == 9


def test_report_invariants():
    with pytest.raises(ValueError):
        CheckReport("x", {}, "fail")
    with pytest.raises(ValueError):
        CheckReport("x", {}, "maybe")
    report = CATALOG["jtp"].run(order=30)
    assert report.passed and report.to_dict()["params"] == {"order": 30}
    assert "elapsed" in report.to_dict(timings=True)


def test_output_identical_across_job_counts():
    names = ["grid9", "ram5", "jtpa", "theta"]
    one = [r.to_dict() for r in run_checks(names, jobs=1)]
    many = [r.to_dict() for r in run_checks(names, jobs=3)]
    assert one == many
    a = run(["verify", *names, "--jobs", "1"])
    b = run(["verify", *names, "--jobs", "2"])
    assert a == b


def test_classify_grid_text():
    code, text = run(["classify", "--n", "9"])
    assert code == 0
    lines = text.splitlines()
    # two header lines, four srank=0 lines, two srank=2 lines
    assert len(lines) == 8
    assert lines[2].startswith("srank=0") and lines[6].startswith("srank=2")
    assert run(["classify", "--n", "9"]) == (code, text)


def test_classify_csv_matches_reference_grid():
    code, text = run(["classify", "--n", "9", "--format", "csv"])
    rows = list(csv.DictReader(io.StringIO(text)))
    assert len(rows) == 10
    from rpl.partitions import parse_partition

    for row in rows:
        cell = (int(row["srank_mod_4"]), int(row["stcrank_mod_5"]))
        members = {parse_partition(tok) for tok in row["partitions"].split()}
        assert members == GRID_9[cell]
        assert int(row["count"]) == (4 if cell[0] == 0 else 2)


def test_classify_empty_and_14():
    code, text = run(["classify", "--n", "0", "--format", "json"])
    assert [json.loads(line) for line in text.splitlines()] == [{"row": 0, "col": 0, "count": 1, "partitions": [[]]}]
    code, text = run(["classify", "--n", "14", "--format", "json"])
    recs = [json.loads(line) for line in text.splitlines()]
    for i in (0, 2):
        assert len({r["count"] for r in recs if r["row"] == i}) == 1


def test_orbits_reference_rows():
    code, text = run(["orbits", "--n", "9", "--operator", "srank", "--format", "json"])
    assert code == 0
    recs = [json.loads(line) for line in text.splitlines()]
    assert len(recs) == 6
    assert [r["srank_mod_4"] for r in recs].count(0) == 4
    got = {tuple(tuple(m) for m in r["members"]) for r in recs}
    assert got == {row for _, row in ORBITS_9}
    code, text = run(["orbits", "--n", "4", "--format", "csv"])
    assert text.splitlines() == ["orbit,srank_mod_4,c5_0,c5_1,c5_2,c5_3,c5_4", "0,0,2^2,1^4,1^2.2^1,1^1.3^1,4^1"]


def test_stats_records():
    code, text = run(["stats", "--n", "1", "--format", "json"])
    assert json.loads(text) == {"partition": [1], "weight": 1, "stats": {"srank": 0, "stcrank": 0}}
    code, text = run(["stats", "--n", "0", "--format", "csv"])
    assert text == "partition,weight,srank,stcrank\n,0,0,0\n"
    code, text = run(["stats", "--n", "9", "--stats", "srank,stcrank,c5core", "--format", "csv"])
    rows = list(csv.DictReader(io.StringIO(text)))
    assert len(rows) == 30
    code, text = run(["stats", "--n", "9"])
    assert code == 0 and len(text.splitlines()) == 31


def test_cores_listing():
    code, text = run(["cores", "--n", "9", "--format", "json"])
    recs = [json.loads(line) for line in text.splitlines()]
    assert sorted(r["c5core"] for r in recs) == [0, 1, 2, 3, 4]
    from rpl.cores import rim_hook_core
    from rpl.partitions import enumerate_partitions

    for t in (2, 3, 4):
        brute = sum(1 for p in enumerate_partitions(6) if rim_hook_core(p, t) == p)
        code, text = run(["cores", "--n", "6", "--t", str(t)])
        assert text.splitlines()[0] == f"{brute} {t}-cores of 6"
