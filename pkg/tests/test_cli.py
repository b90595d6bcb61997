"""Tests for the `mono` command line."""

import json

import pytest

from mono.cli import main
from mono.graphs.constructions import build_antipodal_example, build_cover_t_example, random_complete_coloured
from mono.graphs.graph_core import RED, EdgeColouredGraph, load_graph, save_graph, to_text
from mono.harness.report import Certificate, VerificationResult, emit_report, load_report


@pytest.fixture
def antipodal_file(tmp_path):
    path = tmp_path / "antipodal_8.txt"
    save_graph(build_antipodal_example(8, 2), path)
    return path


class TestParsing:
    def test_help(self, capsys) -> None:
        assert main(["--help"]) == 0
        assert "mono" in capsys.readouterr().out

    def test_usage_errors(self) -> None:
        assert main([]) == 2
        assert main(["verify", "no-such-suite"]) == 2
        assert main(["cover", "g.txt", "--method", "greedy"]) == 2


class TestGraphCommands:
    def test_construct(self, tmp_path) -> None:
        out = tmp_path / "c.txt"
        assert main(["-q", "construct", "cover-t", "--n", "12", "--t", "2", "-o", str(out)]) == 0
        assert load_graph(out) == build_cover_t_example(12, 2)

    def test_construct_random_is_seeded(self, tmp_path) -> None:
        first, second = tmp_path / "a.txt", tmp_path / "b.txt"
        for out in (first, second):
            assert main(["-q", "construct", "random", "--n", "10", "--r", "2",
                         "--min-degree", "6", "--seed", "5", "-o", str(out)]) == 0
        assert first.read_text() == second.read_text()

    def test_construct_missing_parameter(self, tmp_path, capsys) -> None:
        assert main(["construct", "cover-t", "--n", "12", "-o", str(tmp_path / "x.txt")]) == 2
        assert "Error" in capsys.readouterr().err

    def test_analyze(self, graph_file, tmp_path) -> None:
        out = tmp_path / "analysis.json"
        assert main(["-q", "analyze", str(graph_file), "--json", str(out)]) == 0
        record = json.loads(out.read_text())
        assert record['cover']['size'] == 3
        assert record['partition']['size'] == 3
        assert record['stats']['n'] == 12

    def test_cover(self, graph_file, tmp_path) -> None:
        out = tmp_path / "cover.json"
        assert main(["cover", str(graph_file), "--method", "koenig", "--json", str(out)]) == 0
        assert json.loads(out.read_text())['method'] == "koenig"
        assert main(["cover", str(graph_file), "--method", "exact"]) == 0

    def test_partition(self, graph_file) -> None:
        assert main(["partition", str(graph_file)]) == 0

    def test_distinct_cover_missing(self, antipodal_file, capsys) -> None:
        assert main(["distinct-cover", str(antipodal_file)]) == 1
        assert "no distinct-colour cover" in capsys.readouterr().out

    def test_bad_input(self, tmp_path, capsys) -> None:
        bad = tmp_path / "bad.txt"
        bad.write_text("4 2\n0 1 7\n")
        assert main(["analyze", str(bad)]) == 2
        assert "line 2" in capsys.readouterr().err
        assert main(["cover", str(tmp_path / "missing.txt")]) == 2

    def test_probe(self, tmp_path) -> None:
        path = tmp_path / "k8.txt"
        save_graph(random_complete_coloured(8, 3, seed=2), path)
        assert main(["probe", str(path), "--claim", "claim-3-1"]) == 0
        assert main(["probe", str(path), "--claim", "claim-2-1"]) == 0


class TestVerifyAndReplay:
    def test_verify_writes_reports(self, tmp_path) -> None:
        report_path, csv_path = tmp_path / "r.json", tmp_path / "r.csv"
        code = main(["-q", "verify", "sharpness-cover-t", "--n-max", "12",
                     "--json", str(report_path), "--csv", str(csv_path)])
        assert code == 0
        report = load_report(report_path)
        assert report.verdict == "pass"
        assert report.suites[0].id == "sharpness-cover-t"
        assert report.config['n_max'] == 12
        assert csv_path.read_text().startswith("id,visited")

    def test_replay(self, tmp_path) -> None:
        result = VerificationResult("sharpness-antipodal")
        result.record(False, Certificate(to_text(build_antipodal_example(8, 2)), 'distinct-cover-exists'))
        path = tmp_path / "r.json"
        emit_report([result], path)
        assert main(["replay", str(path)]) == 0

        stale = VerificationResult("sharpness-antipodal")
        stale.record(False, Certificate(to_text(EdgeColouredGraph.complete(4, 2, RED)), 'distinct-cover-exists'))
        emit_report([stale], path)
        assert main(["replay", str(path)]) == 1
