"""HTTP service tests over the in-process test client."""

import pytest

fastapi = pytest.importorskip("fastapi")
from fastapi.testclient import TestClient  # noqa: E402

from thirdform import KINDS, __version__, entry_names  # noqa: E402
from thirdform.service import app  # noqa: E402

client = TestClient(app)


class TestHealthAndCatalog:
    def test_health(self):
        r = client.get("/health")
        assert r.status_code == 200
        assert r.json() == {"status": "ok", "version": __version__}

    def test_catalog_listing(self):
        r = client.get("/catalog")
        assert r.status_code == 200
        data = r.json()
        assert data["names"] == entry_names()
        assert len(data["default_entries"]) == 12
        kinds = {e["expected_kind"] for e in data["default_entries"]}
        assert kinds <= set(KINDS)
        veronese = [e for e in data["default_entries"] if e["name"] == "veronese"]
        assert veronese and veronese[0]["expected_kind"] == "VeroneseLike"


class TestAnalyzeRoute:
    def test_round_sphere(self):
        r = client.post("/analyze", json={
            "entry": "round_sphere", "params": {"n": 2, "r": 2.0},
            "samples": 8,
        })
        assert r.status_code == 200
        data = r.json()
        assert data["kind"] == "RoundSphere"
        assert data["definite"] is True
        assert data["report"]["schema"] == "thirdform-report/1"
        assert data["report"]["verdict"]["homothety"]["r2"] == pytest.approx(4.0)

    def test_unknown_entry_is_404(self):
        r = client.post("/analyze", json={"entry": "moebius"})
        assert r.status_code == 404
        assert "moebius" in r.json()["detail"]

    def test_bad_params_are_422(self):
        r = client.post("/analyze", json={
            "entry": "veronese", "params": {"c": -1.0}, "samples": 4,
        })
        assert r.status_code == 422
        assert "BadCurvature" in r.json()["detail"]

    def test_bad_config_is_422(self):
        r = client.post("/analyze", json={"entry": "plane", "samples": 0})
        assert r.status_code == 422

    def test_missing_entry_field_is_422(self):
        r = client.post("/analyze", json={"samples": 4})
        assert r.status_code == 422


class TestDecomposeRoute:
    def test_two_block_pair(self):
        r = client.post("/decompose", json={
            "a1": [[1.0, 0.0], [0.0, 0.0]],
            "a2": [[0.0, 0.0], [0.0, 1.0]],
        })
        assert r.status_code == 200
        data = r.json()
        assert data["block_count"] == 2
        assert data["homothety_r2"] == pytest.approx(1.0)
        assert data["report"]["schema"] == "thirdform-decompose/1"
        assert data["report"]["block_dims"] == [1, 1]

    def test_not_umbilical_is_422(self):
        r = client.post("/decompose", json={
            "a1": [[1.0, 0.0], [0.0, 1.0]],
            "a2": [[0.0, 0.0], [0.0, 2.0]],
        })
        assert r.status_code == 422
        assert "NotUmbilicalThirdForm" in r.json()["detail"]

    def test_mismatched_shapes_are_422(self):
        r = client.post("/decompose", json={
            "a1": [[1.0, 0.0], [0.0, 1.0]],
            "a2": [[1.0]],
        })
        assert r.status_code == 422


class TestVerifyRoute:
    def test_filtered_run(self):
        r = client.post("/verify-catalog", json={
            "entry_filter": "clifford", "samples": 6,
        })
        assert r.status_code == 200
        data = r.json()
        assert data["passed"] is True
        assert [e["entry"] for e in data["report"]["entries"]] == ["clifford_torus"]

    def test_bad_config_is_422(self):
        r = client.post("/verify-catalog", json={"samples": 0})
        assert r.status_code == 422
