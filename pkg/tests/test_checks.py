import pytest

from banddet import band
from banddet.checks import run_checks


def test_quick_level_is_clean():
    report = run_checks("quick")
    assert report.ok
    assert report.cases > 2000
    names = [s.name for s in report.suites]
    assert "case1-vs-laplace" in names
    assert "case2-vs-laplace" in names


def test_unknown_level_rejected():
    with pytest.raises(ValueError):
        run_checks("exhaustive")


def test_corrupted_sign_is_caught(monkeypatch):
    # flip the sign whenever it matters; the sweep must flag the smallest case
    real = band.det_case2

    def corrupted(n, k, l, a, b):
        return -real(n, k, l, a, b)

    monkeypatch.setattr(band, "det_case2", corrupted)
    report = run_checks("quick")
    assert not report.ok
    first = report.failures[0]
    assert first.startswith("case2-vs-laplace:")
    assert "n=" in first and "k=" in first and "l=" in first


def test_corrupted_recurrence_is_caught(monkeypatch):
    real = band.det_recurrence

    def corrupted(n, k, a, b):
        value = real(n, k, a, b)
        return value + value.ring_one()

    monkeypatch.setattr(band, "det_recurrence", corrupted)
    report = run_checks("quick")
    assert any(s.name == "recurrence-vs-case1" and s.failures for s in report.suites)
