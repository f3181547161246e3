import pytest

import rpl.stanley
from rpl.checks import CATALOG, CheckFailed, expect


@pytest.mark.parametrize("name", list(CATALOG))
def test_every_check_passes_at_small_bounds(name):
    report = CATALOG[name].run(max_n=14, order=20)
    assert report.passed, report.counterexample
    assert report.anchor


def test_series_failure_names_the_coefficient(monkeypatch):
    real = rpl.stanley.psi
    monkeypatch.setattr(rpl.stanley, "psi", lambda p: 1 - real(p))
    report = CATALOG["stcrank_product"].run(order=12)
    assert report.verdict == "fail"
    assert report.counterexample["input"] == "g(x,y,q): coefficient of q^0"


def test_stcrank_types_catches_mutation(monkeypatch):
    monkeypatch.setattr(rpl.stanley, "psi", lambda p: 0)
    report = CATALOG["stcrank_types"].run(max_n=10)
    assert report.verdict == "fail"
    assert rpl.stanley.is_type_b(report.counterexample["input"])


def test_expect_raises_with_fields():
    with pytest.raises(CheckFailed) as info:
        expect(3, 4, (1, 2), "note")
    assert (info.value.input, info.value.expected, info.value.actual) == ((1, 2), 4, 3)
