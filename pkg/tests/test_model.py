"""Instance model: validation, topology, bounds, serialization.

min_makespan is cross-checked against an independent oracle that
enumerates every precedence path explicitly (exponential, fine at test
sizes), rather than trusting the implementation's DP.
"""

from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from maintsched import (
    Instance,
    InvalidInstanceError,
    Subtask,
    Task,
    canonical_json_bytes,
    instance_from_document,
    instance_hash,
    instance_to_document,
    load_instance,
    min_makespan,
    save_instance,
    topological_subtask_order,
    validate_instance,
)

from conftest import two_task_document, load_two_task_from_disk


def make_task(subs: list[tuple[str, int, list[str]]], **over) -> Task:
    fields = {
        "id": "t",
        "ready_time": 0,
        "deadline": 10,
        "requires_bay": False,
        "makespan_weight": 1.0,
        "lateness_weight": 1.0,
    }
    fields.update(over)
    return Task(
        subtasks=tuple(
            Subtask(
                id=sid,
                duration=dur,
                requirements={"w": 1},
                predecessors=tuple(preds),
            )
            for sid, dur, preds in subs
        ),
        **fields,
    )


# --- validation ---------------------------------------------------------


def test_valid_fixture_has_no_issues(two_task: Instance) -> None:
    assert validate_instance(two_task) == []


def invalid_documents() -> list[tuple[str, dict]]:
    cases = []

    def variant(code: str, mutate) -> None:
        doc = two_task_document()
        mutate(doc)
        cases.append((code, doc))

    variant("EMPTY_INSTANCE", lambda d: d.update(tasks=[]))
    variant("DUPLICATE_TASK", lambda d: d["tasks"].append(d["tasks"][0]))
    variant(
        "DUPLICATE_SUBTASK",
        lambda d: d["tasks"][0]["subtasks"].__setitem__(
            1, dict(d["tasks"][0]["subtasks"][1], id="A1")
        ),
    )
    variant(
        "UNKNOWN_PREDECESSOR",
        lambda d: d["tasks"][0]["subtasks"][1].update(predecessors=["ghost"]),
    )
    variant(
        "PRECEDENCE_CYCLE",
        lambda d: d["tasks"][0]["subtasks"][0].update(predecessors=["A2"]),
    )
    variant(
        "UNKNOWN_WORKER_TYPE",
        lambda d: d["tasks"][0]["subtasks"][0].update(requirements={"nope": 1}),
    )
    variant(
        "BAD_DURATION",
        lambda d: d["tasks"][0]["subtasks"][0].update(duration=0),
    )
    variant(
        "BAD_REQUIREMENT",
        lambda d: d["tasks"][0]["subtasks"][0].update(requirements={"mech": 0}),
    )
    variant("BAD_HORIZON", lambda d: d.update(horizon_periods=0))
    variant("BAD_BAYS", lambda d: d.update(num_bays=-1))
    variant(
        "BAD_AVAILABILITY",
        lambda d: d["availability"].update(mech=[1] * 9),
    )
    variant(
        "BAD_WINDOW",
        lambda d: d["tasks"][0].update(ready_time=5, deadline=4),
    )
    variant(
        "NEGATIVE_WEIGHT",
        lambda d: d["tasks"][0].update(makespan_weight=-1.0),
    )
    variant("EMPTY_TASK", lambda d: d["tasks"][0].update(subtasks=[]))
    variant(
        "DUPLICATE_WORKER_TYPE",
        lambda d: d["worker_types"].append({"id": "mech", "label": "again"}),
    )
    variant(
        "BAD_PERIOD_MINUTES",
        lambda d: d.update(period_minutes=0),
    )
    return cases


@pytest.mark.parametrize(
    "code,document", invalid_documents(), ids=[c for c, _ in invalid_documents()]
)
def test_validation_flags_each_defect(code: str, document: dict) -> None:
    with pytest.raises(InvalidInstanceError) as err:
        instance_from_document(document)
    assert code in {issue.code for issue in err.value.issues}


def test_validation_is_pure(two_task: Instance) -> None:
    assert validate_instance(two_task) == validate_instance(two_task)


# --- topological order --------------------------------------------------


def test_topological_order_respects_predecessors() -> None:
    task = make_task(
        [
            ("d", 1, ["b", "c"]),
            ("b", 2, ["a"]),
            ("c", 3, ["a"]),
            ("a", 1, []),
        ]
    )
    order = [sub.id for sub in topological_subtask_order(task)]
    assert order.index("a") < order.index("b")
    assert order.index("a") < order.index("c")
    assert order.index("b") < order.index("d")
    assert order.index("c") < order.index("d")
    # input order breaks ties: b was declared before c
    assert order.index("b") < order.index("c")


def test_topological_order_keeps_input_order_when_independent() -> None:
    task = make_task([("x", 1, []), ("y", 1, []), ("z", 1, [])])
    assert [s.id for s in topological_subtask_order(task)] == ["x", "y", "z"]


# --- min_makespan vs path enumeration -----------------------------------


def longest_path_by_enumeration(task: Task) -> int:
    """Independent oracle: enumerate every path through the DAG."""
    by_id = {s.id: s for s in task.subtasks}
    best = 0

    def walk(sub: Subtask, acc: int) -> None:
        nonlocal best
        total = acc + sub.duration
        best = max(best, total)
        for other in task.subtasks:
            if sub.id in other.predecessors:
                walk(other, total)

    for sub in task.subtasks:
        if not sub.predecessors:
            walk(sub, 0)
    return best


def test_min_makespan_chain() -> None:
    task = make_task([("a", 1, []), ("b", 2, ["a"])])
    assert min_makespan(task) == 3


def test_min_makespan_parallel() -> None:
    task = make_task([("a", 2, []), ("b", 3, [])])
    assert min_makespan(task) == 3


def test_min_makespan_diamond() -> None:
    task = make_task(
        [
            ("a", 1, []),
            ("b", 2, ["a"]),
            ("c", 3, ["a"]),
            ("d", 1, ["b", "c"]),
        ]
    )
    assert min_makespan(task) == 5


def test_min_makespan_matches_path_enumeration_on_random_dags() -> None:
    rng = random.Random(1105)
    for _ in range(200):
        n = rng.randint(1, 7)
        subs = []
        for i in range(n):
            preds = [f"s{p}" for p in range(i) if rng.random() < 0.45]
            subs.append((f"s{i}", rng.randint(1, 5), preds))
        task = make_task(subs)
        assert min_makespan(task) == longest_path_by_enumeration(task)


def test_min_makespan_bounds_hold() -> None:
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randint(1, 6)
        subs = []
        for i in range(n):
            preds = [f"s{p}" for p in range(i) if rng.random() < 0.3]
            subs.append((f"s{i}", rng.randint(1, 4), preds))
        task = make_task(subs)
        value = min_makespan(task)
        assert value <= sum(s.duration for s in task.subtasks)
        assert value >= max(s.duration for s in task.subtasks)


# --- serialization ------------------------------------------------------


def test_document_round_trip(two_task: Instance) -> None:
    assert instance_from_document(instance_to_document(two_task)) == two_task


def test_save_load_round_trip_is_byte_stable(two_task: Instance) -> None:
    blob = save_instance(two_task)
    assert save_instance(load_instance(blob)) == blob


def test_fixture_file_loads_to_expected_shape() -> None:
    instance = load_two_task_from_disk()
    assert len(instance.tasks) == 2
    assert sum(len(t.subtasks) for t in instance.tasks) == 4


def test_canonical_json_ends_with_newline(two_task: Instance) -> None:
    blob = canonical_json_bytes(instance_to_document(two_task))
    assert blob.endswith(b"\n")


def test_load_rejects_malformed_syntax() -> None:
    with pytest.raises(ValueError) as err:
        load_instance(b"{not json")
    assert "line" in str(err.value)


def test_load_rejects_invalid_instance() -> None:
    doc = two_task_document()
    doc["tasks"] = []
    with pytest.raises(ValueError) as err:
        load_instance(canonical_json_bytes(doc))
    assert "EMPTY_INSTANCE" in str(err.value)


def test_instance_hash_tracks_content(two_task: Instance) -> None:
    base = instance_hash(two_task)
    assert base == instance_hash(two_task)
    doc = two_task_document()
    doc["tasks"][0]["ready_time"] = 1
    assert instance_hash(instance_from_document(doc)) != base


# --- property: permutation of declaration does not confuse validation ---


@settings(max_examples=30, deadline=None)
@given(st.randoms(use_true_random=False))
def test_random_instances_validate_cleanly(py_rng) -> None:
    from conftest import random_instance

    instance = random_instance(py_rng)
    assert validate_instance(instance) == []
