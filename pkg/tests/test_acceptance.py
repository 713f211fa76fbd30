import pytest

from core.services.acceptance import build_checks, run_acceptance_suite


def test_check_names_are_unique():
    names = [check.name for check in build_checks()]
    assert len(names) == len(set(names))


def test_filter_selects_by_group_or_name():
    outcome = run_acceptance_suite("operators")
    assert [c.name for c in outcome.report.checks] == ["operator-laws"]
    outcome = run_acceptance_suite("telescoper")
    assert [c.group for c in outcome.report.checks] == ["summability"]
    assert run_acceptance_suite("no-such-check").report.total == 0


def test_cheap_groups_pass():
    report = run_acceptance_suite("operators", workers=1).report
    assert report.passed and report.failed == 0
    report = run_acceptance_suite("telescoper", workers=2).report
    assert report.passed


def test_reports_are_reproducible():
    first = run_acceptance_suite("summability").report.model_dump_json()
    second = run_acceptance_suite("summability", workers=1).report.model_dump_json()
    assert first == second


@pytest.mark.slow
def test_full_suite_passes():
    outcome = run_acceptance_suite()
    failures = [c.name for c in outcome.report.checks if not c.passed]
    assert not failures
    assert len(outcome.timings) == outcome.report.total == len(build_checks())
