"""Tests for the auxiliary bipartite graph, matchings and the Koenig cover."""

import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy import Rational

from mono.graphs.constructions import random_dense_coloured
from mono.graphs.graph_core import ColourCountError, EdgeColouredGraph, GraphError, min_degree
from mono.harness.verifier import CertificateVerifier
from mono.solvers.exact_search import min_mono_cover
from mono.solvers.koenig_cover import (
    BipartiteGraph, Matching, MatchingNotMaximumError, Side, build_auxiliary, cover_two_coloured,
    degree_floor, degree_threshold, find_augmenting_path, koenig_vertex_cover, max_matching,
    realise_bipartite
)
from tests.strategies import PROPERTY_SETTINGS, bipartite_graphs, coloured_graphs

verifier = CertificateVerifier()


class TestAuxiliaryGraph:
    def test_path_graph(self, path_graph) -> None:
        h = build_auxiliary(path_graph)
        assert (h.num_left, h.num_right) == (2, 3)
        assert h.edges == ((0, 0), (0, 1), (1, 1), (1, 2))
        assert h.left[1].members.to_list() == [2, 3]

    def test_needs_two_colours(self) -> None:
        with pytest.raises(ColourCountError):
            build_auxiliary(EdgeColouredGraph(3, 3))

    def test_rejects_out_of_range_edges(self) -> None:
        with pytest.raises(GraphError):
            BipartiteGraph(2, 2, [(0, 2)])


class TestMatching:
    def test_maximum_matching_on_known_graph(self) -> None:
        h = BipartiteGraph(3, 3, [(0, 0), (0, 1), (1, 0), (2, 1), (2, 2)])
        m = max_matching(h)
        assert m.size == 3
        assert m.is_matching_of(h)

    def test_augmenting_path(self) -> None:
        h = BipartiteGraph(2, 2, [(0, 0), (0, 1), (1, 0)])
        path = find_augmenting_path(h, Matching(frozenset({(0, 0)})))
        assert path == [(1, 0), (0, 0), (0, 1)]
        assert find_augmenting_path(h, max_matching(h)) is None

    def test_cover_rejects_non_maximum_matching(self) -> None:
        h = BipartiteGraph(2, 2, [(0, 0), (0, 1), (1, 0)])
        with pytest.raises(MatchingNotMaximumError):
            koenig_vertex_cover(h, Matching(frozenset({(0, 0)})))

    def test_rejects_non_matching(self) -> None:
        h = BipartiteGraph(2, 2, [(0, 0), (0, 1), (1, 0)])
        with pytest.raises(GraphError):
            koenig_vertex_cover(h, Matching(frozenset({(0, 0), (0, 1)})))
        with pytest.raises(GraphError):
            find_augmenting_path(h, Matching(frozenset({(1, 1)})))

    @PROPERTY_SETTINGS
    @given(h=bipartite_graphs())
    def test_koenig_equality(self, h) -> None:
        m = max_matching(h)
        cover = koenig_vertex_cover(h, m)
        assert cover.size == m.size
        assert cover.covers(h)
        assert find_augmenting_path(h, m) is None
        assert all(side in (Side.LEFT, Side.RIGHT) for side, _ in cover.chosen)


class TestCoverTwoColoured:
    def test_path_graph(self, path_graph) -> None:
        cover = cover_two_coloured(path_graph)
        assert cover.size == 2
        assert verifier.check_cover(path_graph, cover).is_valid

    @PROPERTY_SETTINGS
    @given(g=coloured_graphs(max_n=7))
    def test_valid_and_minimum(self, g) -> None:
        cover = cover_two_coloured(g)
        assert verifier.check_cover(g, cover).is_valid
        assert cover.size == min_mono_cover(g)[0]

    @PROPERTY_SETTINGS
    @given(n=st.integers(4, 16), t=st.integers(1, 3), seed=st.integers(0, 10_000))
    def test_at_most_t_parts_above_threshold(self, n, t, seed) -> None:
        floor = max(0, degree_floor(n, t))
        if floor > n - 1:
            return
        g = random_dense_coloured(n, 2, floor, seed)
        assert min_degree(g) >= degree_threshold(n, t)
        assert verifier.check_cover(g, cover_two_coloured(g), max_parts=t).is_valid


class TestThreshold:
    def test_exact_rational(self) -> None:
        assert degree_threshold(12, 2) == Rational(19, 3)
        assert degree_floor(12, 2) == 7
        assert degree_floor(12, 1) == 11
        assert degree_floor(3, 3) == 0

    def test_invalid(self) -> None:
        with pytest.raises(GraphError):
            degree_threshold(5, 0)


class TestRealise:
    def test_auxiliary_of_realisation_matches(self) -> None:
        h = BipartiteGraph(2, 3, [(0, 0), (0, 1), (1, 1), (1, 2)])
        g = realise_bipartite(h)
        assert g.n == 4
        aux = build_auxiliary(g)
        assert (aux.num_left, aux.num_right, len(aux.edges)) == (2, 3, 4)
        assert max_matching(aux).size == max_matching(h).size

    def test_isolated_vertices_rejected(self) -> None:
        with pytest.raises(GraphError):
            realise_bipartite(BipartiteGraph(2, 1, [(0, 0)]))
        with pytest.raises(GraphError):
            realise_bipartite(BipartiteGraph(0, 0, []))
