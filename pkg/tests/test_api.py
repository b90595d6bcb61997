"""Tests for the REST API."""

import pytest
from fastapi.testclient import TestClient

from mono.api import app
from mono.graphs.constructions import build_antipodal_example
from mono.graphs.graph_core import to_text


@pytest.fixture
def client() -> TestClient:
    return TestClient(app)


@pytest.fixture
def cover_t_text(cover_t_12) -> str:
    return to_text(cover_t_12)


def test_root_and_health(client) -> None:
    assert client.get("/").json()['endpoints']['cover'] == "/api/cover"
    assert client.get("/api/health").json()['status'] == "healthy"


def test_suites(client) -> None:
    ids = [suite['id'] for suite in client.get("/api/suites").json()['suites']]
    assert "koenig-internal" in ids and "sharpness-antipodal" in ids


def test_cover(client, cover_t_text) -> None:
    response = client.post("/api/cover", json={'graph': cover_t_text})
    assert response.status_code == 200
    body = response.json()
    assert body['found'] and body['certificate']['size'] == 3
    assert body['verification']['is_valid']


def test_partition(client, path_graph) -> None:
    response = client.post("/api/partition", json={'graph': to_text(path_graph), 'method': 'exact'})
    assert response.json()['certificate']['size'] == 2


def test_distinct_cover_not_found(client) -> None:
    response = client.post("/api/distinct-cover", json={'graph': to_text(build_antipodal_example(8, 2))})
    assert response.status_code == 200
    assert response.json() == {'found': False, 'certificate': None, 'verification': None}


def test_analyze(client, path_graph) -> None:
    body = client.post("/api/analyze", json={'graph': to_text(path_graph)}).json()
    assert body['component_counts'] == [2, 3]
    assert body['cover']['size'] == 2


def test_construct(client) -> None:
    body = client.post("/api/construct", json={'kind': 'antipodal', 'n': 8, 'r': 2}).json()
    assert (body['n'], body['r']) == (8, 2)
    assert body['graph'] == to_text(build_antipodal_example(8, 2))


@pytest.mark.parametrize("path,payload", [
    ("/api/cover", {'graph': "3 2\n0 1 5\n"}),
    ("/api/cover", {'graph': "3 3\n0 1 2\n", 'method': 'koenig'}),
    ("/api/cover", {'graph': "3 2\n", 'method': 'greedy'}),
    ("/api/construct", {'kind': 'cover-t', 'n': 12}),
    ("/api/construct", {'kind': 'petersen', 'n': 10}),
])
def test_invalid_requests(client, path, payload) -> None:
    assert client.post(path, json=payload).status_code == 422
