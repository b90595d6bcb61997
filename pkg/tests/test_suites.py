"""Tests for the suite registry, suite runs and certificate replay."""

import pytest

from mono.graphs.constructions import build_antipodal_example
from mono.graphs.graph_core import RED, EdgeColouredGraph, to_text
from mono.harness.report import Certificate, CertificateModel
from mono.harness.suites import (
    HEURISTIC_EXHAUSTED, SUITE_IDS, SuiteParams, SuiteRunner, UnknownSuiteError,
    replay_certificate, run_suite
)
from mono.solvers.proof_guided import CLAIM_IDS, STAGES


@pytest.fixture
def runner() -> SuiteRunner:
    return SuiteRunner(verbose=False)


def without_timing(record):
    return {key: value for key, value in record.items() if key != 'seconds'}


class TestRegistry:
    def test_registered_suites(self, runner) -> None:
        for suite_id in ("prop-koenig-cover", "thm-two-partition", "lemma-r2-distinct",
                         "thm-r3-distinct", "sharpness-cover-t", "sharpness-antipodal",
                         "ryser-probe", "claim-probes", "koenig-internal"):
            assert suite_id in SUITE_IDS
            assert runner.describe(suite_id)

    def test_unknown_suite(self, runner) -> None:
        with pytest.raises(UnknownSuiteError):
            runner.run("thm-four-colours")
        with pytest.raises(KeyError):
            runner.describe("thm-four-colours")

    def test_params(self) -> None:
        params = SuiteParams(n_max=12, seed=2)
        assert params.n_range(60, 200) == [12]
        assert params.n_range(8, 10) == [8, 9, 10]
        assert params.instance_seed(5) == 2_000_005
        assert params.sample_count(100) == 100
        assert SuiteParams(samples=0).sample_count(100) == 0


class TestTheoremSuites:
    @pytest.mark.parametrize("suite_id,params", [
        ("koenig-internal", SuiteParams(samples=50, n_max=10)),
        ("prop-koenig-cover", SuiteParams(samples=30, n_max=4)),
        ("sharpness-cover-t", SuiteParams(n_max=15)),
        ("lemma-r2-distinct", SuiteParams(n_max=5)),
        ("thm-r3-distinct", SuiteParams(samples=5, n_max=9)),
        ("sharpness-antipodal", SuiteParams()),
        ("thm-two-partition", SuiteParams(samples=5, n_max=12)),
        ("ryser-probe", SuiteParams(samples=10, n_max=4)),
        ("partition-t-probe", SuiteParams(samples=5, n_max=8)),
        ("cover-r-probe", SuiteParams(samples=5, n_max=7)),
    ])
    def test_suite_passes(self, runner, suite_id, params) -> None:
        result = runner.run(suite_id, params)
        assert result.passed, result.get_summary()
        assert result.visited == result.passes + result.failures
        assert all(certificate.annotation for certificate in result.certificates)

    def test_sharpness_counts(self, runner) -> None:
        assert runner.run("sharpness-cover-t", SuiteParams(n_max=12)).visited == 1
        assert runner.run("sharpness-antipodal").visited == 4

    def test_two_partition_replay_details(self, runner) -> None:
        result = runner.run("thm-two-partition", SuiteParams(samples=5, n_max=12))
        assert result.details['replayed'] == f"{len(result.certificates)}/{len(result.certificates)}"


class TestSamplingSuites:
    def test_heuristic_suite_reports_stages(self, runner) -> None:
        result = runner.run("heuristic-two-partition", SuiteParams(samples=3, n_max=60))
        assert result.visited == 3
        assert 0.0 <= result.details['success_rate'] <= 1.0
        stages = result.details['stages']
        assert set(stages) == set(STAGES)
        assert sum(stages.values()) == 3
        assert stages['star-split'] >= 2
        assert stages['colour-split'] == 0
        for certificate in result.certificates:
            assert certificate.annotation == HEURISTIC_EXHAUSTED

    def test_claim_suite_counts_qualifying_instances(self, runner) -> None:
        result = runner.run("claim-probes", SuiteParams(samples=4, n_max=8))
        assert set(result.details['qualifying']) == set(CLAIM_IDS)
        reached = 0
        for claim, ratio in result.details['qualifying'].items():
            qualifying, total = (int(part) for part in ratio.split("/"))
            assert total == 4
            assert qualifying >= 2, claim
            reached += qualifying
        assert reached == result.visited
        assert 'unreached' not in result.details
        assert result.passed, result.get_summary()


class TestDeterminism:
    def test_same_seed_same_result(self) -> None:
        params = SuiteParams(samples=40, n_max=8, seed=7)
        first = run_suite("koenig-internal", params).to_dict()
        second = run_suite("koenig-internal", params).to_dict()
        assert without_timing(first) == without_timing(second)

    def test_worker_count_does_not_change_results(self) -> None:
        serial = run_suite("thm-r3-distinct", SuiteParams(samples=4, n_max=9, seed=1))
        pooled = run_suite("thm-r3-distinct", SuiteParams(samples=4, n_max=9, seed=1, workers=2))
        assert without_timing(serial.to_dict()) == without_timing(pooled.to_dict())


class TestReplay:
    def test_antipodal_fails_again(self) -> None:
        certificate = Certificate(to_text(build_antipodal_example(8, 2)), 'distinct-cover-exists')
        assert replay_certificate(certificate)

    def test_passing_graph_does_not_fail(self) -> None:
        g = EdgeColouredGraph.complete(4, 2, RED)
        assert not replay_certificate(CertificateModel(graph=to_text(g), predicate='distinct-cover-exists'))
        assert not replay_certificate(Certificate(to_text(g), 'cover-at-most', {'bound': 1}))

    def test_unknown_predicate(self) -> None:
        with pytest.raises(UnknownSuiteError):
            replay_certificate(Certificate("2 2\n", 'no-such-predicate'))
