"""Tests for the analysis orchestrator."""

import pandas as pd
import pytest

from mono import Settings, create_analysis_system
from mono.graphs.constructions import random_dense_coloured
from mono.graphs.graph_core import EdgeColouredGraph, GraphError
from mono.solvers.proof_guided import PreconditionError


@pytest.fixture
def system():
    return create_analysis_system(verbose=False)


class TestSingleOperations:
    def test_cover_methods_agree_on_size(self, system, cover_t_12) -> None:
        assert system.cover(cover_t_12, "koenig").size == system.cover(cover_t_12, "exact").size == 3

    def test_unknown_methods(self, system, path_graph) -> None:
        with pytest.raises(GraphError):
            system.cover(path_graph, "greedy")
        with pytest.raises(GraphError):
            system.partition(path_graph, "greedy")
        with pytest.raises(GraphError):
            system.distinct_cover(path_graph, "greedy")

    def test_heuristic_partition_budget(self, system, path_graph) -> None:
        partition = system.partition(path_graph, "heuristic", seed=1, budget=4)
        assert partition is not None and partition.size == 2

    def test_constructive_needs_two_or_three_colours(self, system) -> None:
        with pytest.raises(PreconditionError):
            system.distinct_cover(EdgeColouredGraph(3, 4), "constructive")


class TestAnalyze:
    def test_cover_t_example(self, system, cover_t_12) -> None:
        result = system.analyze(cover_t_12, "cover-t")
        assert result.all_valid
        assert (result.cover.size, result.partition.size) == (3, 3)
        assert len(result.component_counts) == 2
        assert set(result.checks) >= {'cover', 'partition'}
        assert "ANALYSIS: cover-t" in result.get_summary()

    def test_antipodal_has_no_distinct_cover(self, system, antipodal_8) -> None:
        result = system.analyze(antipodal_8)
        assert result.distinct_cover is None
        assert "no distinct-colour cover exists" in result.notes

    def test_limits_become_notes(self) -> None:
        system = create_analysis_system(verbose=False, settings=Settings(cover_limit=5, partition_limit=5))
        g = random_dense_coloured(8, 3, 6, seed=2)
        result = system.analyze(g, "big")
        assert result.cover is None and result.partition is None
        assert any(note.startswith("cover skipped") for note in result.notes)
        assert any(note.startswith("partition skipped") for note in result.notes)

    def test_two_colour_fallbacks(self) -> None:
        system = create_analysis_system(verbose=False, settings=Settings(cover_limit=5, partition_limit=5))
        g = EdgeColouredGraph.complete(8, 2)
        result = system.analyze(g, "k8")
        assert result.cover.method.value == "koenig"
        assert result.partition.method.value == "heuristic"
        assert result.all_valid


class TestBatch:
    def test_statistics_and_export(self, system, tmp_path, antipodal_8) -> None:
        system.analyze_batch({'k4': EdgeColouredGraph.complete(4, 2), 'antipodal': antipodal_8})
        stats = system.get_statistics()
        assert stats['total_graphs'] == 2
        assert stats['with_distinct_cover'] == 1
        out = tmp_path / "analysis.csv"
        system.export_results(out)
        frame = pd.read_csv(out)
        assert frame['name'].tolist() == ['k4', 'antipodal']
        assert frame['valid'].all()

    def test_empty_statistics(self, system) -> None:
        assert system.get_statistics() == {}


def test_process_graph_dir(tmp_path, graph_file, capsys) -> None:
    from process_graphs import process_graph_dir

    (graph_file.parent / "broken.txt").write_text("not a graph\n")
    out = tmp_path / "table.csv"
    assert process_graph_dir(str(graph_file.parent), str(out), verbose=False) == 0
    assert pd.read_csv(out)['name'].tolist() == ["cover_t_12.txt"]
    assert (tmp_path / "table_summary.txt").exists()
    assert "Skipping broken.txt" in capsys.readouterr().out
