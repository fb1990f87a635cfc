"""Verification suites and their reports"""
import pytest

from conifolddt import errors, suites
from conifolddt.conifold import CANONICAL_CHAMBERS
from conifolddt.ring import ONE
from conifolddt.series import TruncSeries
from conifolddt.suites import CheckResult, SuiteReport, VerificationSuite, \
    compare, suite_framed


def test_registry():
    names = [s.name for s in suites.suites_available]
    assert names == ["identities", "universal", "counts", "chambers",
                     "framed", "dtpt", "vertex"]
    assert suites.get_suite("vertex").descr.startswith("refined")
    assert "suite_vertex" in repr(suites.get_suite("vertex"))
    with pytest.raises(KeyError, match="Unknown suite"):
        suites.get_suite("nothing")


def test_register_errors():
    with pytest.raises(ValueError, match="already registered"):
        suites.register_suite(suites.suites_by_name["dtpt"].recipe)
    with pytest.raises(ValueError, match="must be callable"):
        VerificationSuite({"name": "broken", "runner": 42})
    vsu = VerificationSuite({"runner": print})
    with pytest.raises(ValueError, match="No name defined"):
        vsu.name
    assert vsu.descr == "no description"


def test_report_checks():
    report = SuiteReport("demo", 3)
    report.check("plain", lambda: True)
    report.check("with detail", lambda: (False, "off by one"))
    report.check("raises", lambda: 1 / 0)
    assert len(report) == 3
    assert not report.passed
    assert report[0].passed
    assert report[1].detail == "off by one"
    assert report[2].detail.startswith("ZeroDivisionError")
    line = SuiteReport.format_check(report[1])
    assert line.startswith("FAIL with detail (")
    assert line.endswith("s): off by one")
    data = report.to_json()
    assert data["suite"] == "demo"
    assert data["passed"] is False
    assert data["checks"][0]["name"] == "plain"
    with pytest.raises(ValueError, match="Expected CheckResult"):
        report.append(("plain", True, "", 0.0))
    report.append(CheckResult("manual", True, "", 0.0))
    assert len(report) == 4


def test_report_compute():
    report = SuiteReport("demo")
    assert report.compute("sum", sum, [1, 2, 3]) == 6
    assert report.compute("broken", int, "three") is None
    assert [c.passed for c in report] == [True, False]
    assert report[1].detail.startswith("ValueError")


def test_compare():
    f = TruncSeries(2, {(0, 0): 1, (1, 0): 2})
    assert compare(f, f) == (True, "")
    passed, detail = compare(f, f + TruncSeries(2, {(1, 0): ONE}))
    assert not passed
    assert detail == "coefficient of (1, 0) differs: 2 != 3"
    passed, detail = compare(f, TruncSeries(3, {(0, 0): 1, (1, 0): 2}))
    assert not passed
    assert detail == "truncations differ"


@pytest.mark.parametrize("name,order", [
    ("identities", 4),
    ("universal", 4),
    ("chambers", 3),
    ("framed", 3),
    ("dtpt", 3),
    ("vertex", 3),
])
def test_suite_passes(name, order):
    report = suites.run_suite(name, order)
    failed = [SuiteReport.format_check(c) for c in report if not c.passed]
    assert not failed
    assert len(report) > 0


def test_counts_suite_small_cap(cap_env):
    cap_env(1000)
    report = suites.run_suite("counts", 0)
    assert report.passed
    skipped = [c for c in report if c.detail == "skipped, exceeds cap"]
    assert skipped
    assert len(skipped) < len(report)


def test_framed_suite_records_errors(monkeypatch):
    def broken(zs, order):
        raise errors.NotGenericError(None, "on a wall")

    monkeypatch.setattr(suite_framed, "framed_series_suite", broken)
    report = suite_framed.run_framed(2)
    assert len(report) == len(CANONICAL_CHAMBERS)
    assert not report.passed
    assert report[0].detail == "NotGenericError: on a wall"


def test_run_suites_order():
    reports = suites.run_suites(["vertex", "identities"], 2)
    assert [r.suite for r in reports] == ["identities", "vertex"]
    with pytest.raises(KeyError):
        suites.run_suites(["nothing"], 2)


if __name__ == "__main__":
    # Run all tests
    _loc = locals()
    for _key in list(_loc.keys()):
        if _key.startswith("test_") and hasattr(_loc[_key], "__call__"):
            _loc[_key]()
