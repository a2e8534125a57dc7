import pytest
from fastapi.testclient import TestClient

from main import app

client = TestClient(app)

XYZ = ["x", "y", "z"]


def test_root():
    assert client.get("/").status_code == 200


def test_no_cors_headers_without_configured_origins():
    response = client.get("/", headers={"Origin": "http://localhost:8080"})
    assert "access-control-allow-origin" not in response.headers


def test_closure_inline():
    response = client.post("/api/ideals/closure", json={"vars": XYZ, "ideal": "x^7, y^3, z^2"})
    assert response.status_code == 200
    body = response.json()
    assert body["mu"] == 8
    assert body["text"] == "x^7, x^5*y, x^4*z, x^3*y^2, x^2*y*z, y^3, y^2*z, z^2"


def test_closure_payload():
    payload = {"vars": ["x", "z"], "generators": [[2, 0], [0, 2]]}
    response = client.post("/api/ideals/closure", json={"payload": payload})
    assert response.status_code == 200
    assert response.json()["generators"] == [[2, 0], [1, 1], [0, 2]]


def test_is_closed():
    response = client.post("/api/ideals/is-closed", json={"vars": ["x", "z"], "ideal": "x^2, z^2"})
    assert response.json()["is_closed"] is False


def test_invariants():
    response = client.post("/api/ideals/invariants", json={"vars": XYZ, "ideal": "x^4, x^3*y, x^2*y^2, x*y^3, y^4, z"})
    body = response.json()
    assert (body["mu"], body["v_quotient"], body["rsop_count"], body["colength"]) == (6, 2, 1, 10)
    assert body["order"] == 1


def test_power_closure():
    response = client.post("/api/ideals/power-closure", json={"vars": ["x", "z"], "ideal": "x^2, z^2", "n": 2})
    assert response.json()["mu"] == 5


def test_certificate():
    body = {"vars": XYZ, "ideal": "x^2, x*y, y^2, z^4, x*z, y*z^3", "monomial": "y*z^2"}
    response = client.post("/api/ideals/certificate", json=body)
    data = response.json()
    assert data["member"] is True
    assert data["certificate"]["rho"] == 2
    assert data["certificate"]["slack"] == [0, 0, 0]


def test_order():
    body = {"vars": XYZ, "ideal": "x^2, x*y, y^2, z^4, x*z^2, y*z^2", "weights": ["2", "2", "1"]}
    assert client.post("/api/ideals/order", json=body).json()["order"] == "4"


def test_is_normal():
    response = client.post("/api/normality/is-normal", json={"vars": ["x", "z"], "ideal": "x^2, x*z^2, z^4"})
    data = response.json()
    assert data["verdict"] == "normal"
    assert data["bound_source"] == "rrv"


def test_is_normal_with_user_bound():
    response = client.post("/api/normality/is-normal", json={"vars": XYZ, "ideal": "x, y, z", "max_power": 1})
    assert response.json()["verdict"] == "undetermined"


def test_witness():
    body = {"vars": XYZ, "ideal": "x^2, x*y, y^2, z^4, x*z, y*z^3", "n": 1}
    data = client.post("/api/normality/witness", json=body).json()
    assert data["witness"] == [0, 1, 2]
    assert data["monomial"] == "y*z^2"


@pytest.mark.parametrize("body", [
    {"vars": ["x"], "ideal": "x^-1"},
    {"ideal": "x"},
    {"vars": ["x"], "ideal": "y"},
])
def test_bad_ideals_are_client_errors(body):
    assert client.post("/api/ideals/closure", json=body).status_code in (400, 422)


def test_zero_ideal_order_is_rejected():
    body = {"vars": ["x"], "ideal": "0", "weights": ["1"]}
    assert client.post("/api/ideals/order", json=body).status_code == 400


def test_zero_denominator_weight_is_rejected():
    body = {"vars": ["x", "y"], "ideal": "x^2, y", "weights": ["1/0", "1"]}
    assert client.post("/api/ideals/order", json=body).status_code == 400


def test_sweep():
    response = client.get("/api/verify/sweep/thm-dim3", params={"c_max": 4})
    assert response.status_code == 200
    assert response.json()["passes"] is True
    assert client.get("/api/verify/sweep/nope").status_code == 404
