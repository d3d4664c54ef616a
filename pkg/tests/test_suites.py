import pytest

from linemod.reports import render
from linemod.suites import run_suite


@pytest.mark.parametrize("name", ["sl2", "sl11", "slc", "sl21"])
def test_suite_passes(name):
    result = run_suite(name, samples=500, seed=3)
    failing = [c["name"] for c in result["checks"] if not c["pass"]]
    assert result["pass"], failing


def test_suite_deterministic():
    first = render(run_suite("sl21", samples=50, seed=5))
    second = render(run_suite("sl21", samples=50, seed=5))
    assert first == second


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("bogus")


def test_sl21_trace_present():
    result = run_suite("sl21", samples=50, seed=0)
    checks = {c["name"]: c for c in result["checks"]}
    cert = checks["zero_divisor_certificate"]
    assert cert["derivation_trace"]
    assert cert["derived_rules"]


def test_sl21_zero_divisor_rule_derived():
    result = run_suite("sl21", samples=50, seed=0)
    checks = {c["name"]: c for c in result["checks"]}
    derived = {d["rule"] for d in checks["zero_divisor_certificate"]["derived_rules"]}
    assert "t*y1*y1" in derived
