"""HTTP service contract tests via the in-process test client."""

import pytest
from fastapi.testclient import TestClient

from conftest import graph_from_edges
from nsdcolor import __version__
from nsdcolor.graph6 import emit_graph6
from nsdcolor.service.app import app


@pytest.fixture(scope="module")
def client():
    with TestClient(app) as c:
        yield c


class TestHealth:
    def test_reports_ok_and_version(self, client):
        resp = client.get("/health")
        assert resp.status_code == 200
        assert resp.json() == {"status": "ok", "version": __version__}


class TestSolve:
    def test_k4(self, client):
        resp = client.post("/solve", json={"g6": "C~", "oracle": True})
        assert resp.status_code == 200
        body = resp.json()
        assert body["edge"]["verified"] and body["total"]["verified"]
        assert body["oracle"]["gndi"] == 3

    def test_mode_is_honored(self, client):
        body = client.post("/solve", json={"g6": "C~", "mode": "total"}).json()
        assert "edge" not in body and "total" in body

    def test_bad_graph6_is_400(self, client):
        resp = client.post("/solve", json={"g6": "!!"})
        assert resp.status_code == 400
        assert "InvalidChar" in resp.json()["detail"]

    def test_non_cubic_is_400(self, client):
        resp = client.post("/solve", json={"g6": "A?"})
        assert resp.status_code == 400
        assert "not cubic" in resp.json()["detail"]

    def test_disconnected_is_400(self, client):
        two_k4 = emit_graph6(graph_from_edges(
            8, [(i, j) for i in range(4) for j in range(i + 1, 4)]
               + [(4 + i, 4 + j) for i in range(4) for j in range(i + 1, 4)]))
        resp = client.post("/solve", json={"g6": two_k4})
        assert resp.status_code == 400
        assert "not connected" in resp.json()["detail"]

    def test_unknown_mode_is_422(self, client):
        resp = client.post("/solve", json={"g6": "C~", "mode": "vertex"})
        assert resp.status_code == 422


class TestCorpusRun:
    def test_mixed_stream(self, client):
        resp = client.post("/corpus/run",
                           json={"lines": ["C~", "!!", "A?"], "oracle": True})
        assert resp.status_code == 200
        body = resp.json()
        summary = body["summary"]
        assert summary["graphs"] == 1
        assert summary["parse_errors"] == 1
        assert summary["skipped"] == 1
        assert summary["ok"] is True

    def test_strict_flag_propagates(self, client):
        body = client.post("/corpus/run",
                           json={"lines": ["!!"], "strict": True}).json()
        assert body["summary"]["ok"] is False


class TestGenerate:
    def test_returns_requested_count(self, client):
        resp = client.post("/corpus/generate",
                           json={"n": 8, "count": 4, "seed": 2,
                                 "dedup": False})
        assert resp.status_code == 200
        assert len(resp.json()["lines"]) == 4

    def test_odd_n_is_400(self, client):
        resp = client.post("/corpus/generate", json={"n": 7, "count": 1})
        assert resp.status_code == 400

    def test_small_n_is_422(self, client):
        resp = client.post("/corpus/generate", json={"n": 2, "count": 1})
        assert resp.status_code == 422


class TestEnumerate:
    def test_n6_has_two_classes(self, client):
        resp = client.get("/corpus/enumerate", params={"n": 6})
        assert resp.status_code == 200
        assert len(resp.json()["lines"]) == 2

    def test_unsupported_n_is_400(self, client):
        resp = client.get("/corpus/enumerate", params={"n": 14})
        assert resp.status_code == 400


class TestOracle:
    def test_edge_value(self, client):
        resp = client.post("/oracle", json={"g6": "C~", "kind": "edge"})
        assert resp.status_code == 200
        body = resp.json()
        assert body["value"] == 3 and not body["budget_exceeded"]

    def test_total_value(self, client):
        body = client.post("/oracle",
                           json={"g6": "C~", "kind": "total"}).json()
        assert body["value"] == 2

    def test_budget_exceeded_is_reported_not_raised(self, client):
        from nsdcolor.pipeline import enumerate_corpus
        big = enumerate_corpus(10)[0]
        body = client.post("/oracle", json={"g6": big, "kind": "edge",
                                            "node_cap": 5}).json()
        assert body["value"] is None and body["budget_exceeded"]

    def test_edgeless_is_400(self, client):
        resp = client.post("/oracle", json={"g6": "A?", "kind": "edge"})
        assert resp.status_code == 400
