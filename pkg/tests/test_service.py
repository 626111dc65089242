import pytest
from fastapi.testclient import TestClient

from composite_design.service import create_app

LUNG_BODY = {
    "p0_e1": 0.59, "p0_e2": 0.74, "hr_e1": 0.91, "hr_e2": 0.77, "rho": 0.5,
    "beta_e1": 1.0, "beta_e2": 2.0, "case": 3, "copula": "frank",
    "rho_type": "spearman",
}


@pytest.fixture()
def client(tmp_path):
    return TestClient(create_app(str(tmp_path / "scenarios.json")))


class TestComputeEndpoints:
    def test_samplesize_worked_example(self, client):
        response = client.post("/api/tte/samplesize", json=LUNG_BODY)
        assert response.status_code == 200
        payload = response.json()
        assert payload["endpoint1"] == 6162
        assert payload["endpoint2"] == 620
        assert payload["composite"] == 636

    def test_effectsize(self, client):
        payload = client.post("/api/tte/effectsize", json=LUNG_BODY).json()
        assert payload["gahr"] == pytest.approx(0.7989, abs=1e-3)
        assert payload["treated"]["prob_e2"] == pytest.approx(0.7433, abs=5e-4)

    def test_are(self, client):
        payload = client.post("/api/tte/are", json=LUNG_BODY).json()
        assert payload["are"] == pytest.approx(9.303, abs=0.01)

    def test_curves_panels(self, client):
        body = {**LUNG_BODY, "grid": 200, "rho_grid": [0.0, 0.3, 0.5, 0.7, 0.9]}
        payload = client.post("/api/tte/curves", json=body).json()
        hr = payload["hazard_ratio"]["values"]
        assert hr[0] == pytest.approx(0.90, abs=0.02)
        mid = len(hr) // 2
        assert hr[mid] == pytest.approx(0.77, abs=0.02)
        survival = payload["survival"]
        assert len(survival["time"]) == 200
        assert survival["control_ce"][0] == 1.0
        assert all(b <= a + 1e-12 for a, b in zip(survival["control_ce"],
                                                  survival["control_ce"][1:]))
        n_curve = payload["samplesize_vs_rho"]["n"]
        assert n_curve[payload["samplesize_vs_rho"]["rho"].index(0.5)] == 636
        assert all(8.0 < value < 12.0 for value in payload["are_vs_rho"]["are"])

    def test_simulate(self, client):
        body = {**LUNG_BODY, "sample_size": 100, "seed": 7}
        payload = client.post("/api/tte/simulate", json=body).json()
        assert len(payload["time_ce"]) == 200
        assert set(payload["treated"]) == {0, 1}

    def test_cbe_prob(self, client):
        payload = client.post("/api/cbe/prob", json={"p1": 0.3, "p2": 0.2, "rho": 0}).json()
        assert payload == {"prob": 0.44}

    def test_cbe_corr_bounds(self, client):
        payload = client.post("/api/cbe/corr-bounds", json={"p1": 0.5, "p2": 0.5}).json()
        assert payload["lower"] == pytest.approx(-1.0)
        assert payload["upper"] == pytest.approx(1.0)

    def test_cbe_samplesize(self, client):
        body = {"p0_e1": 0.3, "p0_e2": 0.2, "eff_e1": -0.1, "eff_e2": -0.05, "rho": 0.0}
        payload = client.post("/api/cbe/samplesize", json=body).json()
        assert payload["total"] > 0 and payload["total"] % 2 == 0

    def test_cbe_effectsize_and_are(self, client):
        body = {"p0_e1": 0.3, "p0_e2": 0.2, "eff_e1": -0.1, "eff_e2": -0.05, "rho": 0.0}
        effect = client.post("/api/cbe/effectsize", json=body).json()
        assert effect["prob_ce_control"] == pytest.approx(0.44)
        assert effect["effect"] == pytest.approx(-0.12)
        assert client.post("/api/cbe/are", json=body).json()["are"] > 0

    def test_cbe_simulate(self, client):
        body = {"p0_e1": 0.3, "p0_e2": 0.2, "eff_e1": -0.1, "eff_e2": -0.05,
                "rho": 0.0, "sample_size": 50, "seed": 3}
        payload = client.post("/api/cbe/simulate", json=body).json()
        assert sorted(payload) == ["ce", "e1", "e2", "treated"]
        assert len(payload["ce"]) == 100

    def test_simulation_cap_422(self, client):
        body = {**LUNG_BODY, "sample_size": 600_000, "seed": 1}
        assert client.post("/api/tte/simulate", json=body).status_code == 422

    def test_referential_transparency(self, client):
        first = client.post("/api/tte/samplesize", json=LUNG_BODY).json()
        second = client.post("/api/tte/samplesize", json=LUNG_BODY).json()
        assert first == second


class TestErrorContract:
    def test_malformed_body_400(self, client):
        response = client.post("/api/tte/samplesize", json={"p0_e1": "abc"})
        assert response.status_code == 400
        payload = response.json()
        assert set(payload) == {"code", "field", "message"}
        assert payload["code"] == "validation"

    def test_unknown_field_400(self, client):
        response = client.post("/api/tte/samplesize", json={**LUNG_BODY, "zzz": 1})
        assert response.status_code == 400

    def test_domain_error_400(self, client):
        response = client.post("/api/tte/samplesize", json={**LUNG_BODY, "p0_e1": 1.4})
        assert response.status_code == 400
        assert response.json()["field"] == "p0_e1"

    def test_infeasible_422(self, client):
        body = {**LUNG_BODY, "hr_e1": 1.0, "hr_e2": 1.0}
        response = client.post("/api/tte/samplesize", json=body)
        assert response.status_code == 422
        assert response.json()["code"] == "infeasible"

    def test_infeasible_correlation_422(self, client):
        body = {"p1": 0.3, "p2": 0.6, "rho": 0.9}
        assert client.post("/api/cbe/prob", json=body).status_code == 422

    def test_grid_cap_422(self, client):
        response = client.post("/api/tte/curves", json={**LUNG_BODY, "grid": 513})
        assert response.status_code == 422


class TestScenarioStore:
    def test_crud_round_trip(self, client):
        created = client.post(
            "/api/scenarios", json={"name": "lung", "kind": "tte", "design": LUNG_BODY}
        )
        assert created.status_code == 201
        record = created.json()
        fetched = client.get(f"/api/scenarios/{record['id']}").json()
        assert fetched["design"] == record["design"]
        assert [r["id"] for r in client.get("/api/scenarios").json()] == [record["id"]]

        updated = client.put(
            f"/api/scenarios/{record['id']}",
            json={"name": "lung-2", "kind": "tte", "design": LUNG_BODY},
        )
        assert updated.json()["name"] == "lung-2"
        assert updated.json()["modified"] >= record["modified"]

        assert client.delete(f"/api/scenarios/{record['id']}").status_code == 204
        assert client.get(f"/api/scenarios/{record['id']}").status_code == 404

    def test_unknown_scenario_404(self, client):
        assert client.get("/api/scenarios/missing").status_code == 404
        assert client.delete("/api/scenarios/missing").status_code == 404

    def test_invalid_design_rejected_on_write(self, client):
        bad = {**LUNG_BODY, "p0_e1": 2.0}
        response = client.post(
            "/api/scenarios", json={"name": "bad", "kind": "tte", "design": bad}
        )
        assert response.status_code == 400

    def test_stored_scenario_recomputes_identically(self, client):
        record = client.post(
            "/api/scenarios", json={"name": "lung", "kind": "tte", "design": LUNG_BODY}
        ).json()
        stored_design = client.get(f"/api/scenarios/{record['id']}").json()["design"]
        via_store = client.post("/api/tte/samplesize", json=stored_design).json()
        direct = client.post("/api/tte/samplesize", json=LUNG_BODY).json()
        assert via_store == direct

    def test_cbe_scenario(self, client):
        design = {"p0_e1": 0.3, "p0_e2": 0.2, "eff_e1": -0.1, "eff_e2": -0.05, "rho": 0.0}
        response = client.post(
            "/api/scenarios", json={"name": "binary", "kind": "cbe", "design": design}
        )
        assert response.status_code == 201
