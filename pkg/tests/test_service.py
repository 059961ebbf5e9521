"""HTTP service tests via the in-process test client.

Every route is exercised with at least one happy path and its documented
error responses. Expected numbers reuse the hand-derived two-task values
(objectives 6 and 10, bound 6) so the service layer is checked against the
same oracles as the core, not against itself.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET

import pytest
from fastapi.testclient import TestClient

from maintsched.exact import solve_exact
from maintsched.milp import assignment_to_lp_values, render_solution_text
from maintsched.model import instance_from_document
from maintsched.scenario import (
    ScenarioConfig,
    WorkerTightness,
    desk_template,
    generate_scenario,
)
from maintsched.service.app import create_app

from conftest import two_task_document


@pytest.fixture(scope="module")
def client() -> TestClient:
    return TestClient(create_app(), raise_server_exceptions=False)


def _error(response) -> dict:
    body = response.json()
    assert set(body) == {"error"}
    assert set(body["error"]) == {"code", "message", "details"}
    return body["error"]


# ---------------------------------------------------------------------------
# Health and validation


def test_health(client: TestClient) -> None:
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json() == {"status": "ok"}


def test_validate_accepts_good_instance(client: TestClient) -> None:
    response = client.post("/validate", json={"instance": two_task_document()})
    assert response.status_code == 200
    assert response.json() == {"valid": True, "issues": []}


def test_validate_reports_issues_with_codes(client: TestClient) -> None:
    doc = two_task_document()
    doc["availability"]["mech"] = [1] * 3  # wrong row length
    response = client.post("/validate", json={"instance": doc})
    assert response.status_code == 200
    body = response.json()
    assert body["valid"] is False
    assert any(issue["code"] == "BAD_AVAILABILITY" for issue in body["issues"])


def test_invalid_instance_is_http_400_elsewhere(client: TestClient) -> None:
    doc = two_task_document()
    doc["tasks"][0]["subtasks"][0]["duration"] = 0
    response = client.post("/decode", json={"instance": doc, "order": ["t1", "t2"]})
    assert response.status_code == 400
    error = _error(response)
    assert error["code"] == "INVALID_INSTANCE"
    assert error["details"] and all("code" in d for d in error["details"])


def test_extra_fields_are_rejected(client: TestClient) -> None:
    response = client.post(
        "/decode",
        json={"instance": two_task_document(), "order": ["t1", "t2"], "bogus": 1},
    )
    assert response.status_code == 422


def test_missing_fields_are_rejected(client: TestClient) -> None:
    response = client.post("/solve-ga", json={"instance": two_task_document()})
    assert response.status_code == 422  # seed is required


# ---------------------------------------------------------------------------
# Min-makespan and decode


def test_min_makespan(client: TestClient) -> None:
    response = client.post("/min-makespan", json={"instance": two_task_document()})
    assert response.status_code == 200
    body = response.json()
    assert body["per_task"] == {"t1": 3, "t2": 3}
    assert body["lower_bound"] == 6.0


def test_decode_both_orders(client: TestClient) -> None:
    good = client.post(
        "/decode", json={"instance": two_task_document(), "order": ["t1", "t2"]}
    )
    assert good.status_code == 200
    body = good.json()
    assert body["feasible"] is True
    assert body["schedule"]["metrics"]["objective"] == 6.0
    assert body["schedule"]["starts"] == {"A1": 0, "A2": 1, "B1": 3, "B2": 4}

    worse = client.post(
        "/decode", json={"instance": two_task_document(), "order": ["t2", "t1"]}
    )
    assert worse.json()["schedule"]["metrics"]["objective"] == 10.0


def test_decode_rejects_bad_order(client: TestClient) -> None:
    response = client.post(
        "/decode", json={"instance": two_task_document(), "order": ["t1"]}
    )
    assert response.status_code == 400
    assert _error(response)["code"] == "BAD_ORDER"


def test_decode_reports_blocked_subtask(client: TestClient) -> None:
    doc = two_task_document()
    doc["availability"]["mech"] = [1, 1, 1, 0, 0, 0, 0, 0, 0, 0]
    response = client.post("/decode", json={"instance": doc, "order": ["t1", "t2"]})
    assert response.status_code == 200
    body = response.json()
    assert body["feasible"] is False
    assert body["schedule"] is None
    assert body["blocked_subtask"] in {"A1", "A2", "B1", "B2"}


# ---------------------------------------------------------------------------
# GA solving


def test_solve_ga_happy_path(client: TestClient) -> None:
    request = {
        "instance": two_task_document(),
        "seed": 42,
        "population_size": 12,
        "generations": 8,
    }
    response = client.post("/solve-ga", json=request)
    assert response.status_code == 200
    body = response.json()
    assert body["feasible"] is True
    result = body["result"]
    assert result["metrics"]["objective"] == 6.0
    assert result["termination"] == body["termination"]
    assert result["trace"][0]["gen"] == 0
    assert len(result["trace"]) >= 1


def test_solve_ga_is_deterministic_across_workers(client: TestClient) -> None:
    request = {
        "instance": two_task_document(),
        "seed": 7,
        "population_size": 10,
        "generations": 5,
        "fitness": "inverse",
    }
    first = client.post("/solve-ga", json=request)
    second = client.post("/solve-ga", json=request)
    four_workers = client.post("/solve-ga", json={**request, "workers": 4})
    assert first.status_code == 200
    assert first.content == second.content == four_workers.content


def test_solve_ga_rejects_bad_config(client: TestClient) -> None:
    response = client.post(
        "/solve-ga",
        json={"instance": two_task_document(), "seed": 1, "population_size": 1},
    )
    assert response.status_code == 400
    assert _error(response)["code"] == "BAD_CONFIG"


# ---------------------------------------------------------------------------
# Exact solving


def test_solve_exact_happy_path(client: TestClient) -> None:
    response = client.post("/solve-exact", json={"instance": two_task_document()})
    assert response.status_code == 200
    body = response.json()
    assert body["status"] == "OPTIMAL"
    assert body["feasible"] is True
    assert body["nodes_expanded"] > 0
    assert body["schedule"]["metrics"]["objective"] == 6.0


def test_solve_exact_budget_and_errors(client: TestClient) -> None:
    capped = client.post(
        "/solve-exact", json={"instance": two_task_document(), "node_budget": 3}
    )
    assert capped.status_code == 200
    assert capped.json()["status"] == "BUDGET_EXCEEDED"

    bad = client.post(
        "/solve-exact", json={"instance": two_task_document(), "node_budget": 0}
    )
    assert bad.status_code == 400
    assert _error(bad)["code"] == "BAD_CONFIG"


def test_solve_exact_infeasible_instance(client: TestClient) -> None:
    doc = two_task_document()
    doc["availability"]["mech"] = [0] * 10
    response = client.post("/solve-exact", json={"instance": doc})
    assert response.status_code == 200
    body = response.json()
    assert body["status"] == "INFEASIBLE_INSTANCE"
    assert body["feasible"] is False
    assert body["schedule"] is None


# ---------------------------------------------------------------------------
# MILP export / import


def test_export_milp_modes(client: TestClient) -> None:
    amended = client.post("/export-milp", json={"instance": two_task_document()})
    assert amended.status_code == 200
    body = amended.json()
    assert body["variables"] == 106
    assert body["lp_text"].startswith("\\ mode: AMENDED")
    assert "rt_B1:" in body["lp_text"]

    faithful = client.post(
        "/export-milp", json={"instance": two_task_document(), "mode": "paper"}
    )
    assert faithful.json()["lp_text"].startswith("\\ mode: PAPER_FAITHFUL")
    assert "rt_B1:" not in faithful.json()["lp_text"]


def test_export_milp_size_cap(client: TestClient) -> None:
    response = client.post(
        "/export-milp", json={"instance": two_task_document(), "max_variables": 10}
    )
    assert response.status_code == 400
    assert _error(response)["code"] == "TOO_LARGE"


def test_export_milp_rejects_unusable_ids(client: TestClient) -> None:
    doc = two_task_document()
    doc["tasks"][0]["id"] = "t-1"
    response = client.post("/export-milp", json={"instance": doc})
    assert response.status_code == 400
    assert _error(response)["code"] == "BAD_INSTANCE_IDS"


def test_import_solution_round_trip(client: TestClient) -> None:
    instance = instance_from_document(two_task_document())
    result = solve_exact(instance)
    text = render_solution_text(assignment_to_lp_values(instance, result.assignment))
    response = client.post(
        "/import-solution",
        json={"instance": two_task_document(), "solution_text": text},
    )
    assert response.status_code == 200
    body = response.json()
    assert body["starts"] == {k: v for k, v in result.assignment.starts.items()}
    report = body["report"]
    assert report["feasible"] is True
    assert report["within_tolerance"] is True
    assert report["internal_objective"] == 6.0
    assert report["tolerance"] == 1e-6


def test_import_solution_error_codes(client: TestClient) -> None:
    instance = instance_from_document(two_task_document())
    result = solve_exact(instance)
    values = assignment_to_lp_values(instance, result.assignment)
    values["xs_A1_0"] = 0.4
    fractional = client.post(
        "/import-solution",
        json={
            "instance": two_task_document(),
            "solution_text": render_solution_text(values),
        },
    )
    assert fractional.status_code == 400
    assert _error(fractional)["code"] == "NOT_INTEGRAL"

    malformed = client.post(
        "/import-solution",
        json={"instance": two_task_document(), "solution_text": "xs_A1_0 what"},
    )
    assert malformed.status_code == 400
    assert _error(malformed)["code"] == "PARSE_ERROR"


# ---------------------------------------------------------------------------
# Scenario generation


def test_gen_scenarios_matches_library(client: TestClient) -> None:
    response = client.post("/gen-scenarios", json={"seed": 777, "count": 2})
    assert response.status_code == 200
    files = response.json()["scenarios"]
    assert [f["filename"] for f in files] == [
        "scenario_1_tight_0.json",
        "scenario_1_tight_1.json",
    ]
    config = ScenarioConfig(base_instance=desk_template(), count=2, seed=777)
    for k, file in enumerate(files):
        assert instance_from_document(file["instance"]) == generate_scenario(config, k)


def test_gen_scenarios_with_custom_template(client: TestClient) -> None:
    response = client.post(
        "/gen-scenarios",
        json={
            "template": two_task_document(),
            "seed": 3,
            "count": 1,
            "tightness": "loose",
            "pi": 1.5,
        },
    )
    assert response.status_code == 200
    (file,) = response.json()["scenarios"]
    assert file["filename"] == "scenario_1.5_loose_0.json"
    scenario = instance_from_document(file["instance"])
    assert all(level == 15 for level in scenario.availability["mech"])


def test_gen_scenarios_rejects_bad_config(client: TestClient) -> None:
    response = client.post("/gen-scenarios", json={"seed": 1, "pi": 0.5})
    assert response.status_code == 400
    assert _error(response)["code"] == "BAD_CONFIG"


# ---------------------------------------------------------------------------
# Bench


def test_bench_route(client: TestClient) -> None:
    request = {
        "cases": [
            {
                "scenario_id": "demo",
                "pi": 1.0,
                "tightness": "tight",
                "instance": two_task_document(),
            }
        ],
        "methods": ["HEURISTIC_READY_SORT", "EXACT"],
        "seed": 5,
    }
    response = client.post("/bench", json=request)
    assert response.status_code == 200
    body = response.json()
    lines = body["csv"].splitlines()
    assert lines[0].startswith("scenario_id,")
    assert len(lines) == 3
    assert body["skipped"] == []
    assert body["aggregates_csv"].splitlines()[0].startswith("pi,")


def test_bench_requires_cases_and_methods(client: TestClient) -> None:
    base = {
        "cases": [],
        "methods": ["EXACT"],
        "seed": 1,
    }
    assert client.post("/bench", json=base).status_code == 400
    base = {
        "cases": [
            {
                "scenario_id": "x",
                "pi": 1.0,
                "tightness": "tight",
                "instance": two_task_document(),
            }
        ],
        "methods": [],
        "seed": 1,
    }
    assert client.post("/bench", json=base).status_code == 400


# ---------------------------------------------------------------------------
# Gantt


def test_gantt_happy_path(client: TestClient) -> None:
    response = client.post(
        "/gantt",
        json={
            "instance": two_task_document(),
            "starts": {"A1": 0, "A2": 1, "B1": 3, "B2": 4},
        },
    )
    assert response.status_code == 200
    svg = response.json()["svg"]
    ET.fromstring(svg)
    assert svg.startswith("<svg ")


def test_gantt_infeasible_is_409(client: TestClient) -> None:
    response = client.post(
        "/gantt",
        json={
            "instance": two_task_document(),
            "starts": {"A1": 0, "A2": 1, "B1": 2, "B2": 3},
        },
    )
    assert response.status_code == 409
    error = _error(response)
    assert error["code"] == "INFEASIBLE_SCHEDULE"
    assert error["details"]


def test_gantt_unknown_subtask_is_400(client: TestClient) -> None:
    response = client.post(
        "/gantt",
        json={"instance": two_task_document(), "starts": {"A1": 0, "nope": 1}},
    )
    assert response.status_code == 400
    assert _error(response)["code"] == "BAD_STARTS"
