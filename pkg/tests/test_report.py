"""Tests for suite results and report emission."""

import json

import pandas as pd
import pytest

from mono import __version__
from mono.harness.report import (
    CSV_COLUMNS, Certificate, VerificationResult, build_report, emit_report, load_report
)


@pytest.fixture
def results():
    clean = VerificationResult("koenig-internal", seed=3, seconds=0.25)
    for _ in range(4):
        clean.record(True)
    noisy = VerificationResult("thm-two-partition")
    noisy.record(True)
    noisy.record(False, Certificate("2 2\n", "two-partition-exists", annotation="asymptotic-statement"))
    return [clean, noisy]


class TestVerificationResult:
    def test_record(self, results) -> None:
        clean, noisy = results
        assert (clean.visited, clean.passes, clean.failures) == (4, 4, 0)
        assert (noisy.visited, noisy.passes, noisy.failures, noisy.annotated) == (2, 1, 1, 1)

    def test_to_dict(self, results) -> None:
        record = results[1].to_dict()
        assert record['id'] == "thm-two-partition"
        assert record['certificates'][0] == {
            'graph': "2 2\n", 'predicate': "two-partition-exists",
            'witness': {}, 'annotation': "asymptotic-statement",
        }

    def test_summary(self, results) -> None:
        results[0].details['min_gap'] = 1
        summary = results[0].get_summary()
        assert summary.startswith("✅ koenig-internal: 4/4 passed")
        assert "min_gap: 1" in summary


class TestReport:
    def test_verdict(self, results) -> None:
        assert build_report(results).verdict == "pass"
        results[1].passed = False
        assert build_report(results).verdict == "fail"

    def test_empty_report_passes(self, tmp_path) -> None:
        path = tmp_path / "empty.json"
        emit_report([], path)
        record = json.loads(path.read_text())
        assert record == {'version': __version__, 'config': {}, 'suites': [], 'verdict': "pass"}

    def test_json_round_trip(self, tmp_path, results) -> None:
        path = tmp_path / "report.json"
        emit_report(results, path, config={'seed': 3})
        report = load_report(path)
        assert report.config == {'seed': 3}
        assert [suite.id for suite in report.suites] == ["koenig-internal", "thm-two-partition"]
        assert report.suites[1].certificates[0].predicate == "two-partition-exists"

    def test_csv_summary(self, tmp_path, results) -> None:
        path = tmp_path / "report.csv"
        emit_report(results, path, format="csv-summary")
        frame = pd.read_csv(path)
        assert list(frame.columns) == CSV_COLUMNS
        assert frame['visited'].tolist() == [4, 2]
        assert frame['annotated'].tolist() == [0, 1]

    def test_unknown_format(self, tmp_path, results) -> None:
        with pytest.raises(ValueError):
            emit_report(results, tmp_path / "x", format="xml")
