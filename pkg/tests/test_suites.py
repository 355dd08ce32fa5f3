import pytest

from grothcrystal.errors import ParameterError
from grothcrystal.suites import SUITES, run_suite


def test_run_all_aggregates_every_suite():
    report = run_suite("all", "small", 1)
    per_suite = [run_suite(name, "small", 1) for name in SUITES]
    assert report.ok
    assert report.suite == "all"
    assert report.cases == sum(r.cases for r in per_suite)
    assert report.wall_time > 0.0


def test_report_json_is_seed_stable():
    # wall time varies run to run, so it is kept off the JSON payload
    rep = run_suite("sv6", "small", 3)
    payload = rep.to_json()
    assert "wall_time" not in payload
    assert payload == run_suite("sv6", "small", 3).to_json()


def test_tag_filter_restricts_cases():
    filtered = run_suite("fv", "small", 1, tags="fv.ybe")
    assert filtered.ok and filtered.cases > 0
    assert filtered.cases < run_suite("fv", "small", 1).cases


def test_unknown_suite_and_scale_rejected():
    with pytest.raises(ParameterError):
        run_suite("nosuch")
    with pytest.raises(ParameterError):
        run_suite("fv", scale="medium")
