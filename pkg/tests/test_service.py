import json
from concurrent.futures import ThreadPoolExecutor

from fastapi.testclient import TestClient

from afrank.service import create_app
from afrank.solve import payload_bytes, solve
from afrank import fixtures
from afrank.framework import serialize

from expected import JOHNSTON_TABLE


def fig9_request(task="rank", semantics="preferred", index="johnston", **options):
    req = {
        "framework": json.loads(serialize(fixtures.fig9(), "json")),
        "semantics": semantics,
        "task": task,
    }
    if index:
        req["index"] = index
    if options:
        req["options"] = options
    return req


def client(**kwargs):
    return TestClient(create_app(**kwargs))


def test_healthz():
    resp = client().get("/healthz")
    assert resp.status_code == 200
    assert resp.text == "ok"


def test_solve_rank_johnston_preferred_matches_table():
    resp = client().post("/api/solve", json=fig9_request())
    assert resp.status_code == 200
    body = resp.json()
    rows = {r["argument"]: r for r in body["result"]["scores"]}
    for name, (_, cell) in JOHNSTON_TABLE["preferred"]["in"].items():
        assert rows[name]["pi_in"] == cell
    for name, (_, cell) in JOHNSTON_TABLE["preferred"]["out"].items():
        assert rows[name]["pi_out"] == cell
    assert body["result"]["ranking"] == "a = c > d = e > b"
    assert isinstance(body["timing_ms"], int)


def test_solve_extensions_and_labellings():
    resp = client().post("/api/solve", json=fig9_request(task="extensions", index=None))
    assert resp.json()["result"]["extensions"] == [["a", "c", "d"], ["a", "c", "e"]]
    resp = client().post("/api/solve", json=fig9_request(task="labellings", index=None))
    labs = resp.json()["result"]["labellings"]
    assert {"in": ["a", "c", "d"], "out": ["b", "e"], "undec": []} in labs


def test_solve_properties_reports():
    resp = client().post(
        "/api/solve", json=fig9_request(task="properties", semantics="complete", index="shapley")
    )
    reports = resp.json()["result"]["reports"]
    assert len(reports) == 9
    verdicts = {r["property"]: r["verdict"] for r in reports}
    assert verdicts["totality"] == "holds-on-instance"


def test_size_limit_413():
    big = {
        "framework": {"arguments": [f"a{i}" for i in range(30)], "attacks": []},
        "semantics": "complete",
        "task": "extensions",
    }
    resp = client(max_args=20).post("/api/solve", json=big)
    assert resp.status_code == 413


def test_malformed_body_400():
    c = client()
    resp = c.post("/api/solve", content=b"{not json", headers={"content-type": "application/json"})
    assert resp.status_code == 400
    resp = c.post("/api/solve", json={"task": "bogus"})
    assert resp.status_code == 400
    resp = c.post("/api/solve", json={"task": "rank", "semantics": "complete"})
    assert resp.status_code == 400  # rank without index
    resp = c.post(
        "/api/solve",
        json={
            "framework": {"arguments": ["a"], "attacks": [["a", "q"]]},
            "semantics": "complete",
            "task": "extensions",
        },
    )
    assert resp.status_code == 400  # undeclared attack endpoint


def test_timeout_504_with_partial_status():
    c = client(timeout_ms=0)
    resp = c.post("/api/solve", json=fig9_request())
    assert resp.status_code == 504
    body = resp.json()
    assert body["partial"] is True


def test_statelessness_identical_requests_identical_payloads():
    c = client()
    bodies = set()
    for _ in range(5):
        resp = c.post("/api/solve", json=fig9_request(task="properties", index="shapley"))
        bodies.add(payload_bytes(resp.json()))
    assert len(bodies) == 1


def test_concurrent_requests():
    c = client()
    reqs = [
        fig9_request(semantics=s, index=i)
        for s in ("complete", "preferred", "conflict-free")
        for i in ("shapley", "banzhaf", "johnston")
    ]
    with ThreadPoolExecutor(max_workers=6) as pool:
        responses = list(pool.map(lambda r: c.post("/api/solve", json=r), reqs))
    assert all(r.status_code == 200 for r in responses)
    # same request sent concurrently stays deterministic
    with ThreadPoolExecutor(max_workers=6) as pool:
        repeats = list(pool.map(lambda _: c.post("/api/solve", json=fig9_request()), range(6)))
    assert len({payload_bytes(r.json()) for r in repeats}) == 1


def test_cli_and_service_payloads_byte_identical(capsys):
    from afrank.cli import main
    from conftest import FIXTURE_DIR

    code = main([
        "rank", str(FIXTURE_DIR / "fig9.apx"),
        "--semantics", "complete", "--index", "shapley", "--format", "json",
    ])
    assert code == 0
    cli_bytes = capsys.readouterr().out.strip().encode()

    resp = client().post(
        "/api/solve", json=fig9_request(semantics="complete", index="shapley")
    )
    assert payload_bytes(resp.json()) == cli_bytes


def test_direct_solve_matches_service():
    req = fig9_request(semantics="complete", index="banzhaf")
    direct = solve(req)
    resp = client().post("/api/solve", json=req)
    assert payload_bytes(resp.json()) == payload_bytes(direct)
