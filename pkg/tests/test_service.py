"""HTTP service tests via the in-process test client."""

from __future__ import annotations

import xml.etree.ElementTree as ET

import pytest
from fastapi.testclient import TestClient

from pagefold import __version__
from pagefold.curves import eb_csv
from pagefold.formulas import case2_excess
from pagefold.service.app import create_app

from conftest import A_STAR, B_STAR, E_STAR, SQRT2


@pytest.fixture(scope="module")
def client() -> TestClient:
    return TestClient(create_app(), raise_server_exceptions=False)


class TestInfo:
    def test_root(self, client):
        resp = client.get("/")
        assert resp.status_code == 200
        assert resp.json() == {"name": "pagefold", "version": __version__}


class TestSolve:
    def test_square_unconstrained(self, client):
        resp = client.post("/solve", json={"aspect": 1.0})
        assert resp.status_code == 200
        report = resp.json()
        assert report["excess"] == pytest.approx(0.414214, abs=1e-6)
        assert report["b"] == pytest.approx(0.585786, abs=1e-6)
        assert report["case"] == 2
        assert report["regime"] is None
        assert report["x_e"] == 1.0 + report["excess"]
        assert report["y_e"] == pytest.approx(1.0 + SQRT2 / 2.0, abs=1e-9)

    def test_square_constrained(self, client):
        resp = client.post("/solve", json={"aspect": 1.0, "constrained": True})
        report = resp.json()
        assert report["regime"] == "internal"
        assert report["a"] == pytest.approx(A_STAR, abs=1e-9)
        assert report["b"] == pytest.approx(B_STAR, abs=1e-9)
        assert report["excess"] == pytest.approx(E_STAR, abs=1e-9)
        assert report["y_e"] == pytest.approx(1.0, abs=1e-9)

    def test_wide_constrained(self, client):
        resp = client.post("/solve", json={"aspect": 2.0, "constrained": True})
        report = resp.json()
        assert report["regime"] == "boundary"
        assert report["a"] == 2.0
        assert report["b"] == pytest.approx(1.0, abs=1e-9)
        assert report["excess"] == pytest.approx(1.0, abs=1e-9)

    def test_with_oracle(self, client):
        resp = client.post(
            "/solve", json={"aspect": 1.0, "with_oracle": True, "oracle_n": 120}
        )
        report = resp.json()
        assert report["oracle_excess"] == pytest.approx(report["excess"], abs=2.0 / 120)

    def test_round_trip_excess(self, client):
        report = client.post("/solve", json={"aspect": 1.3, "constrained": True}).json()
        assert case2_excess(report["a"], report["b"]) == pytest.approx(
            report["excess"], abs=1e-9
        )

    def test_invalid_aspect(self, client):
        resp = client.post("/solve", json={"aspect": 0.5})
        assert resp.status_code == 400
        assert "aspect" in resp.json()["detail"]

    def test_invalid_oracle_n(self, client):
        resp = client.post("/solve", json={"aspect": 1.0, "oracle_n": 10})
        assert resp.status_code == 422


class TestCurve:
    def test_eb_matches_library_and_is_deterministic(self, client):
        body = {"kind": "eb", "samples": 101}
        first = client.post("/curve", json=body)
        assert first.status_code == 200
        assert first.headers["content-type"].startswith("text/csv")
        assert first.text == eb_csv(101)
        assert client.post("/curve", json=body).content == first.content

    def test_phase_curve(self, client):
        resp = client.post(
            "/curve",
            json={"kind": "phase", "from_aspect": 1.0, "to_aspect": 1.5, "samples": 51},
        )
        lines = resp.text.strip().split("\n")
        assert lines[0] == "aspect,a_opt,b_opt,excess,regime"
        assert len(lines) == 52

    def test_transition_default_aspects(self, client):
        resp = client.post("/curve", json={"kind": "transition", "samples": 41})
        lines = resp.text.strip().split("\n")
        assert len(lines) == 1 + 4 * 41

    def test_summary(self, client):
        resp = client.post(
            "/curve",
            json={"kind": "summary", "samples": 21, "a_values": [0.4, 0.9],
                  "constrained": True},
        )
        assert resp.status_code == 200
        assert resp.text.startswith("a,b,x,y\n")

    def test_unknown_kind(self, client):
        assert client.post("/curve", json={"kind": "spiral"}).status_code == 422

    def test_bad_aspect_list(self, client):
        resp = client.post(
            "/curve", json={"kind": "transition", "aspects": [0.5], "samples": 10}
        )
        assert resp.status_code == 400


class TestRender:
    def test_svg_content(self, client):
        resp = client.post(
            "/render",
            json={"aspect": 1.0, "case": 2, "a": 1.0, "b": 2.0 - SQRT2},
        )
        assert resp.status_code == 200
        assert resp.headers["content-type"].startswith("image/svg+xml")
        root = ET.fromstring(resp.text)
        images = [
            el for el in root.iter()
            if el.tag.endswith("polygon") and el.get("class") == "folded-image"
        ]
        assert len(images) == 1

    def test_invalid_fold(self, client):
        resp = client.post(
            "/render", json={"aspect": 1.0, "case": 2, "a": 0.2, "b": 0.9}
        )
        assert resp.status_code == 400


class TestCriticalAndVerify:
    def test_critical(self, client):
        resp = client.get("/critical", params={"tol": 1e-6})
        report = resp.json()
        assert report["critical_aspect"] == pytest.approx(1.20711, abs=1e-4)
        assert report["matches_closed_form"] is True
        assert report["closed_form_value"] == pytest.approx(
            (1.0 + SQRT2) / 2.0, abs=1e-12
        )

    def test_verify_fast(self, client):
        resp = client.post("/verify", json={"level": "fast"})
        assert resp.status_code == 200
        report = resp.json()
        assert report["level"] == "fast"
        assert report["passed"] is True
        names = {check["name"] for check in report["checks"]}
        assert "square-unconstrained-optimum" in names
        assert "oracle-square" in names
        assert all(check["passed"] for check in report["checks"])

    def test_verify_bad_level(self, client):
        assert client.post("/verify", json={"level": "paranoid"}).status_code == 422
