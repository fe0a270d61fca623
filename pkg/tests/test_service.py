"""HTTP surface: every endpoint, plus the error mapping (400 vs 422)."""

import pytest

pytest.importorskip("fastapi")

from fastapi.testclient import TestClient

from facalc.service.app import app

client = TestClient(app)

FLAGSHIP = {
    "terms": [
        {"shift": 1, "poly": ["2", "4"]},
        {"shift": -1, "poly": ["0", "4"]},
        {"shift": 0, "poly": ["1", "-8"]},
    ]
}


def test_health():
    r = client.get("/health")
    assert r.status_code == 200
    assert r.json() == {"status": "ok"}


def test_phi_integer_index():
    r = client.post("/phi", json={"x": "5", "n": 3})
    assert r.status_code == 200
    assert r.json()["value"] == "60"


def test_phi_rational_point():
    r = client.post("/phi", json={"x": "1/2", "n": 2})
    assert r.status_code == 200
    assert r.json()["value"] == "-1/4"


def test_phi_real_index():
    r = client.post("/phi", json={"x": "0", "nu": 0.5})
    assert r.status_code == 200
    assert float(r.json()["value"]) == pytest.approx(0.5641895835477563)


def test_phi_pole_maps_to_400():
    r = client.post("/phi", json={"x": "-1", "nu": 0.5})
    assert r.status_code == 400
    assert "detail" in r.json()


def test_phi_index_choice_is_exclusive():
    assert client.post("/phi", json={"x": "1"}).status_code == 400
    assert client.post("/phi", json={"x": "1", "n": 1, "nu": 1.0}).status_code == 400


def test_unknown_field_rejected_as_422():
    r = client.post("/phi", json={"x": "1", "n": 1, "bogus": True})
    assert r.status_code == 422


def test_series_exp_rows():
    r = client.post("/series", json={"kind": "exp", "lam": "1", "points": [0, 1, 2, 3]})
    assert r.status_code == 200
    doc = r.json()
    assert [row["value"] for row in doc["rows"]] == ["1", "2", "4", "8"]
    assert all(row["remainder"] == "0" for row in doc["rows"])


def test_series_real_point_reports_remainder():
    r = client.post("/series", json={"kind": "exp", "lam": "1/2", "at": 2.5, "order": 40})
    assert r.status_code == 200
    row = r.json()["rows"][0]
    assert float(row["value"]) == pytest.approx(1.5 ** 2.5, rel=1e-9)


def test_series_bessel_real_point_needs_order():
    r = client.post("/series", json={"kind": "bessel", "n": 0, "at": 0.5})
    assert r.status_code == 400
    r = client.post("/series", json={"kind": "bessel", "n": 0, "at": 0.5, "order": 30})
    assert r.status_code == 200


def test_series_lam_only_for_exp():
    assert client.post("/series", json={"kind": "cos", "lam": "1"}).status_code == 400
    assert client.post("/series", json={"kind": "exp"}).status_code == 400


def test_solve_flagship():
    r = client.post("/solve", json={"equation": FLAGSHIP, "order": 10})
    assert r.status_code == 200
    doc = r.json()
    assert doc["verified"] is True
    assert doc["shift"] == 0
    assert doc["roots"] == ["0", "1/2"]
    assert doc["operator"]["terms"] == [
        {"raising": 0, "difference": 0, "coeff": "3"},
        {"raising": 0, "difference": 1, "coeff": "2"},
        {"raising": 1, "difference": 2, "coeff": "4"},
    ]
    grounded = [s for s in doc["solutions"] if not s["formal"]]
    assert len(grounded) == 1
    assert grounded[0]["coeffs"][:4] == ["1", "-3/2", "3/8", "-3/80"]
    assert grounded[0]["residual"] == "0"


def test_solve_rejects_nonhomogeneous():
    eq = dict(FLAGSHIP)
    eq["rhs"] = ["1"]
    r = client.post("/solve", json={"equation": eq})
    assert r.status_code == 400


def test_solve_reports_resonance():
    eq = {
        "terms": [
            {"shift": -2, "poly": ["0", "-2", "2"]},
            {"shift": -1, "poly": ["0", "1", "-2"]},
            {"shift": 0, "poly": ["-1", "0", "1"]},
        ]
    }
    r = client.post("/solve", json={"equation": eq, "order": 8})
    assert r.status_code == 200
    doc = r.json()
    assert doc["failures"] == {"-1": "resonance at k=2"}
    assert doc["verified"] is True  # the +1 exponent still verifies


def test_heat_endpoint():
    r = client.post("/heat", json={"initial": ["0", "0", "0", "0", "1"], "steps": 2, "verify": True})
    assert r.status_code == 200
    doc = r.json()
    assert doc["result"] == ["24", "0", "24", "0", "1"]
    assert doc["oracle_agrees"] is True


def test_nonhomo_endpoint():
    r = client.post("/nonhomo", json={"a": "1", "b": "1", "g": ["0", "0", "1"], "verify": True})
    assert r.status_code == 200
    doc = r.json()
    assert doc["y_p"] == ["0", "-1/2", "1/2"]
    assert doc["residual"] == "0"
    assert doc["oracle_agrees"] is True


def test_nonhomo_degenerate_maps_to_400():
    r = client.post("/nonhomo", json={"a": "1", "b": "-1", "g": ["1"]})
    assert r.status_code == 400


def test_verify_bessel_endpoint():
    for n in (0, 3):
        r = client.post("/verify-bessel", json={"n": n})
        assert r.status_code == 200
        doc = r.json()
        assert doc["ok"] is True
        assert doc["forward_step_residual"] == "0"
        assert doc["index_relation_residual"] == "0"
        assert doc["equation_residual"] == "0"
        assert doc["structure_matches"] is True
        assert doc["coefficient_identities"] is True
