"""Shared fixtures: the two-task worked example and small helpers.

The two-task fixture ("two_task") is the backbone of the suite: small enough
to verify every placement by hand, rich enough to exercise precedence,
ready times, and worker contention. Expected numbers in the tests were
derived by hand (enumerate candidate starts against one worker per
period) before the implementation existed.
"""

from __future__ import annotations

import random
from pathlib import Path

import pytest

from maintsched import (
    Instance,
    instance_from_document,
    load_instance,
    save_instance,
)

DATA_DIR = Path(__file__).parent / "data"


def two_task_document() -> dict:
    """Two tasks, two chained subtasks each, one worker on duty throughout.

    Task t2 becomes ready at period 2. With one worker per period the two
    orderings of the tasks produce different schedules (6 vs 10), which
    makes this the canonical order-sensitivity example.
    """
    return {
        "period_minutes": 60,
        "horizon_periods": 10,
        "num_bays": 1,
        "worker_types": [{"id": "mech", "label": "mechanic"}],
        "availability": {"mech": [1] * 10},
        "tasks": [
            {
                "id": "t1",
                "ready_time": 0,
                "deadline": 100,
                "requires_bay": False,
                "makespan_weight": 1.0,
                "lateness_weight": 1.0,
                "subtasks": [
                    {
                        "id": "A1",
                        "duration": 1,
                        "requirements": {"mech": 1},
                        "predecessors": [],
                    },
                    {
                        "id": "A2",
                        "duration": 2,
                        "requirements": {"mech": 1},
                        "predecessors": ["A1"],
                    },
                ],
            },
            {
                "id": "t2",
                "ready_time": 2,
                "deadline": 100,
                "requires_bay": False,
                "makespan_weight": 1.0,
                "lateness_weight": 1.0,
                "subtasks": [
                    {
                        "id": "B1",
                        "duration": 1,
                        "requirements": {"mech": 1},
                        "predecessors": [],
                    },
                    {
                        "id": "B2",
                        "duration": 2,
                        "requirements": {"mech": 1},
                        "predecessors": ["B1"],
                    },
                ],
            },
        ],
    }


@pytest.fixture()
def two_task() -> Instance:
    return instance_from_document(two_task_document())


@pytest.fixture()
def two_task_file(tmp_path: Path) -> Path:
    path = tmp_path / "two_task.json"
    path.write_bytes(save_instance(instance_from_document(two_task_document())))
    return path


def random_instance(
    rng: random.Random,
    *,
    max_tasks: int = 5,
    max_subtasks_per_task: int = 4,
    max_horizon: int = 20,
    worker_types: int = 3,
    headcount: tuple[int, int] = (0, 3),
    bay_chance: float = 0.3,
) -> Instance:
    """Generate a small valid instance for property tests.

    Availability may hit zero in some periods, durations and requirement
    maps vary, and a proportion of tasks demand a bay — enough variety to
    exercise the decoder's scanning paths without guaranteeing that any
    particular permutation decodes feasibly.
    """
    horizon = rng.randint(6, max_horizon)
    names = [f"circle{chr(97 + w)}" for w in range(worker_types)]
    doc = {
        "period_minutes": 60,
        "horizon_periods": horizon,
        "num_bays": rng.randint(1, 2),
        "worker_types": [{"id": n, "label": n} for n in names],
        "availability": {
            n: [rng.randint(*headcount) for _ in range(horizon)] for n in names
        },
        "tasks": [],
    }
    for ti in range(rng.randint(1, max_tasks)):
        n_subs = rng.randint(1, max_subtasks_per_task)
        subtasks = []
        for si in range(n_subs):
            preds = [
                f"j{ti}_{p}" for p in range(si) if rng.random() < 0.4
            ]
            req_type = rng.choice(names)
            subtasks.append(
                {
                    "id": f"j{ti}_{si}",
                    "duration": rng.randint(1, 3),
                    "requirements": {req_type: rng.randint(1, 2)},
                    "predecessors": preds,
                }
            )
        ready = rng.randint(0, max(0, horizon // 2))
        doc["tasks"].append(
            {
                "id": f"task{ti}",
                "ready_time": ready,
                "deadline": rng.randint(ready, horizon + 4),
                "requires_bay": rng.random() < bay_chance,
                "makespan_weight": float(rng.randint(0, 3)),
                "lateness_weight": float(rng.randint(0, 3)),
                "subtasks": subtasks,
            }
        )
    return instance_from_document(doc)


@pytest.fixture(scope="session", autouse=True)
def _write_canonical_fixture_file() -> None:
    """Keep tests/data/two_task.json in sync with the in-code fixture."""
    DATA_DIR.mkdir(exist_ok=True)
    (DATA_DIR / "two_task.json").write_bytes(
        save_instance(instance_from_document(two_task_document()))
    )


def load_two_task_from_disk() -> Instance:
    return load_instance((DATA_DIR / "two_task.json").read_bytes())
