"""Shared fixtures."""

import pytest

from mono.graphs.constructions import build_antipodal_example, build_cover_t_example
from mono.graphs.graph_core import BLUE, RED, EdgeColouredGraph
from mono.harness.verifier import CertificateVerifier


@pytest.fixture
def verifier() -> CertificateVerifier:
    return CertificateVerifier()


@pytest.fixture
def path_graph() -> EdgeColouredGraph:
    """0 -red- 1 -blue- 2 -red- 3"""
    return EdgeColouredGraph.from_edge_list(4, 2, [(0, 1, RED), (1, 2, BLUE), (2, 3, RED)])


@pytest.fixture
def cover_t_12() -> EdgeColouredGraph:
    return build_cover_t_example(12, 2)


@pytest.fixture
def antipodal_8() -> EdgeColouredGraph:
    return build_antipodal_example(8, 2)


@pytest.fixture
def graph_file(tmp_path, cover_t_12):
    from mono.graphs.graph_core import save_graph

    path = tmp_path / "cover_t_12.txt"
    save_graph(cover_t_12, path)
    return path
