"""Tests for the exact oracles and the exhaustive colouring sweep."""

import pytest
from hypothesis import given

from mono.graphs.components import decompose_all
from mono.graphs.constructions import build_antipodal_example
from mono.graphs.graph_core import (
    BLUE, RED, ColourCountError, EdgeColouredGraph, SearchLimitError, VertexSet
)
from mono.harness.verifier import CertificateVerifier
from mono.solvers.exact_search import (
    ColouringMode, SearchLimits, distinct_colour_cover, enumerate_colourings,
    enumerate_connected_sets, exists_two_partition, min_mono_cover, min_mono_partition
)
from tests.strategies import (
    PROPERTY_SETTINGS, brute_connected_sets, brute_distinct_cover, brute_min_cover,
    brute_least_cover, brute_least_partition_key, brute_min_partition, brute_two_partition, coloured_graphs
)

verifier = CertificateVerifier()


class TestMinCover:
    def test_monochromatic_complete_graph(self) -> None:
        k, cover = min_mono_cover(EdgeColouredGraph.complete(6, 3, BLUE))
        assert k == 1
        assert cover.parts[0].colour == BLUE

    def test_edgeless_graph(self) -> None:
        assert min_mono_cover(EdgeColouredGraph(4, 2))[0] == 4

    @PROPERTY_SETTINGS
    @given(g=coloured_graphs(max_n=7, r=3))
    def test_matches_brute_force(self, g) -> None:
        k, cover = min_mono_cover(g)
        assert k == brute_min_cover(g) == cover.size
        assert verifier.check_cover(g, cover).is_valid

    def test_witness_is_least_in_candidate_order(self) -> None:
        # red 0-1, 2-3 and blue 0-2, 1-3: two optimal covers of size two
        g = EdgeColouredGraph.from_edge_list(4, 2, [(0, 1, RED), (2, 3, RED), (0, 2, BLUE), (1, 3, BLUE)])
        k, cover = min_mono_cover(g)
        assert k == 2
        assert [(p.colour, p.members.to_list()) for p in cover.parts] == [(RED, [0, 1]), (RED, [2, 3])]

    @PROPERTY_SETTINGS
    @given(g=coloured_graphs(max_n=6, r=3))
    def test_witness_matches_brute_force_order(self, g) -> None:
        _, cover = min_mono_cover(g)
        assert [p.members.mask for p in cover.parts] == brute_least_cover(g)

    def test_limit(self) -> None:
        with pytest.raises(SearchLimitError):
            min_mono_cover(EdgeColouredGraph(5, 2), SearchLimits(cover_n=4))

    def test_node_budget(self) -> None:
        with pytest.raises(SearchLimitError):
            min_mono_cover(EdgeColouredGraph(6, 2), SearchLimits(node_budget=1))


class TestConnectedSets:
    def test_path(self, path_graph) -> None:
        found = [w.to_list() for w in enumerate_connected_sets(path_graph, RED, 2)]
        assert sorted(found) == [[2], [2, 3]]

    def test_allowed_restricts(self, path_graph) -> None:
        found = list(enumerate_connected_sets(path_graph, RED, 2, allowed=VertexSet.of([0, 1, 2])))
        assert [w.to_list() for w in found] == [[2]]

    @PROPERTY_SETTINGS
    @given(g=coloured_graphs(max_n=7))
    def test_each_connected_set_exactly_once(self, g) -> None:
        for c in range(g.r):
            masks = [w.mask for w in enumerate_connected_sets(g, c, 0)]
            assert len(masks) == len(set(masks))
            assert set(masks) == brute_connected_sets(g, c, 0)


class TestMinPartition:
    def test_cover_t_needs_three(self, cover_t_12) -> None:
        k, partition = min_mono_partition(cover_t_12)
        assert k == 3
        assert verifier.check_partition(cover_t_12, partition, max_parts=3).is_valid

    @PROPERTY_SETTINGS
    @given(g=coloured_graphs(max_n=6, r=3))
    def test_matches_brute_force(self, g) -> None:
        k, partition = min_mono_partition(g)
        assert k == brute_min_partition(g) == partition.size
        assert verifier.check_partition(g, partition).is_valid
        assert min_mono_cover(g)[0] <= k <= min(decompose_all(g).counts())

    def test_witness_has_least_part_minima(self) -> None:
        # red 0-1, 0-2 and blue 1-3; the red classes {0,1,2},{3} also split V in two
        g = EdgeColouredGraph.from_edge_list(4, 2, [(0, 1, RED), (0, 2, RED), (1, 3, BLUE)])
        k, partition = min_mono_partition(g)
        assert k == 2
        assert [(p.colour, p.members.to_list()) for p in partition.parts] == [(RED, [0, 2]), (BLUE, [1, 3])]

    @PROPERTY_SETTINGS
    @given(g=coloured_graphs(max_n=6, r=3))
    def test_witness_key_matches_brute_force(self, g) -> None:
        _, partition = min_mono_partition(g)
        assert tuple(p.min_member for p in partition.parts) == brute_least_partition_key(g)

    def test_limit(self) -> None:
        with pytest.raises(SearchLimitError):
            min_mono_partition(EdgeColouredGraph(17, 2))


class TestTwoPartition:
    def test_single_vertex(self) -> None:
        assert exists_two_partition(EdgeColouredGraph(1, 2)) is None

    def test_spanning_colour_is_split(self) -> None:
        g = EdgeColouredGraph.complete(5, 2, RED)
        partition = exists_two_partition(g)
        assert partition.size == 2
        assert verifier.check_partition(g, partition, max_parts=2).is_valid

    def test_needs_two_colours(self) -> None:
        with pytest.raises(ColourCountError):
            exists_two_partition(EdgeColouredGraph(3, 3))

    @PROPERTY_SETTINGS
    @given(g=coloured_graphs(min_n=2, max_n=7))
    def test_matches_brute_force(self, g) -> None:
        partition = exists_two_partition(g)
        assert (partition is not None) == brute_two_partition(g)
        if partition is not None:
            assert verifier.check_partition(g, partition, max_parts=2).is_valid
            assert partition.size == 2


class TestDistinctColourCover:
    def test_antipodal_has_none(self, antipodal_8) -> None:
        assert distinct_colour_cover(antipodal_8) is None
        assert distinct_colour_cover(build_antipodal_example(16, 3)) is None

    @PROPERTY_SETTINGS
    @given(g=coloured_graphs(max_n=7, r=3))
    def test_matches_brute_force(self, g) -> None:
        cover = distinct_colour_cover(g)
        assert (cover is not None) == brute_distinct_cover(g)
        if cover is not None:
            assert verifier.check_cover(g, cover, distinct=True).is_valid

    def test_colour_limit(self) -> None:
        with pytest.raises(SearchLimitError):
            distinct_colour_cover(EdgeColouredGraph(3, 4))


class TestEnumerateColourings:
    def test_complete_graph_states(self) -> None:
        stats = enumerate_colourings(3, 2, ColouringMode.COMPLETE, 0, lambda g: True)
        assert (stats.states, stats.visited, stats.passed) == (8, 8, 8)

    def test_non_edges_and_degree_filter(self) -> None:
        stats = enumerate_colourings(3, 2, ColouringMode.WITH_NON_EDGES, 0, lambda g: True)
        assert (stats.states, stats.visited) == (27, 27)
        dense = enumerate_colourings(3, 2, ColouringMode.WITH_NON_EDGES, 2, lambda g: True)
        assert dense.visited == 8

    def test_failures_are_kept(self) -> None:
        stats = enumerate_colourings(3, 2, ColouringMode.COMPLETE, 0,
                                     lambda g: g.edge_count(RED) != 3, keep_failures=5)
        assert stats.failed == 1
        assert stats.failures == [EdgeColouredGraph.complete(3, 2, RED)]

    def test_thread_pool_counts_match(self) -> None:
        visitor = lambda g: g.edge_count(BLUE) < 4  # noqa: E731
        serial = enumerate_colourings(4, 2, ColouringMode.WITH_NON_EDGES, 1, visitor)
        pooled = enumerate_colourings(4, 2, ColouringMode.WITH_NON_EDGES, 1, visitor,
                                      serial=False, workers=3)
        assert serial.to_dict() == pooled.to_dict()

    def test_budget(self) -> None:
        with pytest.raises(SearchLimitError):
            enumerate_colourings(5, 2, ColouringMode.WITH_NON_EDGES, 0, lambda g: True,
                                 SearchLimits(enumeration_budget=1000))
