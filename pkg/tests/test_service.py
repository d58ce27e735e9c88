"""HTTP service: endpoints, validation, error mapping, CLI thin-client mode."""

import socket
import threading
import time

import httpx
import pytest
from fastapi.testclient import TestClient

from paracyl.service import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def test_health(client):
    r = client.get("/health")
    assert r.status_code == 200
    assert r.json()["status"] == "ok"


def test_eval_endpoint(client):
    r = client.post("/eval", json={"func": "U", "a": -1.0, "x": 1.0})
    assert r.status_code == 200
    body = r.json()
    assert abs(body["value"] - 0.842203244069839) < 5e-14
    assert body["regime"] == "moderate_series"
    assert body["accuracy_estimate"] > 0


def test_eval_forced_regime(client):
    r = client.post("/eval", json={"func": "U", "a": -0.5, "x": 10.0, "regime": "asymptotic"})
    assert r.status_code == 200
    assert r.json()["regime"] == "large_arg_asymptotic"


def test_eval_validation_422(client):
    r = client.post("/eval", json={"func": "Q", "a": 1.0, "x": 1.0})
    assert r.status_code == 422
    r = client.post("/eval", json={"func": "U", "a": "one", "x": 1.0})
    assert r.status_code == 422


def test_eval_range_error_400(client):
    r = client.post("/eval", json={"func": "U", "a": 26.0, "x": 1.0})
    assert r.status_code == 400
    assert r.json()["detail"]["type"] == "range_error"


def test_eval_regime_error_400(client):
    r = client.post("/eval", json={"func": "U", "a": 3.0, "x": 1.0, "regime": "asymptotic"})
    assert r.status_code == 400
    assert r.json()["detail"]["type"] == "regime_error"


def test_table_endpoint(client):
    r = client.post("/table", json={"func": "W", "a": [0.0, 1.0], "x": [0.0, 1.0, 2.0]})
    assert r.status_code == 200
    rows = r.json()["rows"]
    assert len(rows) == 6
    assert rows[0]["func"] == "W"


def test_table_empty_grid_rejected(client):
    r = client.post("/table", json={"func": "W", "a": [], "x": [1.0]})
    assert r.status_code == 422


def test_selftest_endpoint(client):
    r = client.post("/selftest", json={})
    assert r.status_code == 200
    body = r.json()
    assert body["ok"] is True
    assert body["fixture_count"] == 144
    assert len(body["errata_notes"]) == 20


def _free_port() -> int:
    with socket.socket() as s:
        s.bind(("127.0.0.1", 0))
        return s.getsockname()[1]


@pytest.fixture(scope="module")
def live_server():
    import uvicorn

    port = _free_port()
    config = uvicorn.Config(app, host="127.0.0.1", port=port, log_level="error")
    server = uvicorn.Server(config)
    thread = threading.Thread(target=server.run, daemon=True)
    thread.start()
    base = f"http://127.0.0.1:{port}"
    for _ in range(100):
        try:
            httpx.get(base + "/health", timeout=1.0)
            break
        except httpx.HTTPError:
            time.sleep(0.05)
    else:
        raise RuntimeError("service did not come up")
    yield base
    server.should_exit = True
    thread.join(timeout=5)


def test_cli_as_thin_client(live_server, capsys):
    from paracyl.cli import EXIT_EVAL_ERROR, EXIT_OK, main

    code = main(["--server", live_server, "eval", "--func", "U", "--a", "-1", "--x", "1"])
    out = capsys.readouterr().out
    assert code == EXIT_OK
    assert abs(float(out.splitlines()[0].split("=")[1]) - 0.842203244069839) < 5e-14
    # errors arrive with the same exit code as the in-process path
    code = main(["--server", live_server, "eval", "--func", "U", "--a", "26", "--x", "1"])
    assert code == EXIT_EVAL_ERROR
