"""Domain types for weekly maintenance scheduling instances.

An instance describes one planning week split into discrete periods: the
task list (one task per piece of equipment, each a DAG of subtasks with
durations and worker head-counts), the worker availability roster per type
and period, and the number of maintenance bays. Includes validation,
critical-path minimum makespans, and canonical JSON file I/O.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from typing import Any, Iterable, Mapping


@dataclass(frozen=True)
class WorkerType:
    id: str
    label: str = ""


@dataclass(frozen=True)
class Subtask:
    """One work order: runs for `duration` contiguous periods and occupies
    `requirements[worker_type]` workers of each listed type in every period."""

    id: str
    duration: int
    requirements: Mapping[str, int] = field(default_factory=dict)
    predecessors: tuple[str, ...] = ()


@dataclass(frozen=True)
class Task:
    """One piece of equipment's maintenance job for the week."""

    id: str
    ready_time: int
    deadline: int
    requires_bay: bool
    makespan_weight: float
    lateness_weight: float
    subtasks: tuple[Subtask, ...]


@dataclass(frozen=True)
class Instance:
    """A full scheduling problem.

    Periods are indexed 0..horizon_periods-1. `availability[p][t]` is the
    worker head-count of type `p` on duty in period `t`. Instances are
    immutable after load and safe to share across workers.
    """

    horizon_periods: int
    period_minutes: int
    num_bays: int
    worker_types: tuple[WorkerType, ...]
    availability: Mapping[str, tuple[int, ...]]
    tasks: tuple[Task, ...]

    def task_by_id(self, task_id: str) -> Task:
        for task in self.tasks:
            if task.id == task_id:
                return task
        raise KeyError(task_id)

    def subtask_task(self) -> dict[str, str]:
        """Map every subtask id to its owning task id."""
        owner: dict[str, str] = {}
        for task in self.tasks:
            for sub in task.subtasks:
                owner[sub.id] = task.id
        return owner


@dataclass(frozen=True)
class ValidationIssue:
    code: str
    message: str
    subject: str = ""


class InstanceFormatError(ValueError):
    """Raised when instance text is not syntactically valid JSON."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class InvalidInstanceError(ValueError):
    """Raised when a parsed instance violates the schema or its invariants."""

    def __init__(self, issues: list[ValidationIssue]):
        super().__init__("; ".join(f"{i.code}: {i.message}" for i in issues))
        self.issues = issues


def validate_instance(instance: Instance) -> list[ValidationIssue]:
    """Check every instance invariant and return all violations.

    Pure and side-effect free; an empty list means the instance is valid.
    """
    issues: list[ValidationIssue] = []

    def bad(code: str, message: str, subject: str = "") -> None:
        issues.append(ValidationIssue(code, message, subject))

    if instance.horizon_periods < 1:
        bad("BAD_HORIZON", f"horizon_periods must be >= 1, got {instance.horizon_periods}")
    if instance.period_minutes < 1:
        bad("BAD_PERIOD_MINUTES", f"period_minutes must be >= 1, got {instance.period_minutes}")
    if instance.num_bays < 0:
        bad("BAD_BAYS", f"num_bays must be >= 0, got {instance.num_bays}")

    seen_types: set[str] = set()
    for wt in instance.worker_types:
        if wt.id in seen_types:
            bad("DUPLICATE_WORKER_TYPE", f"worker type {wt.id!r} declared twice", wt.id)
        seen_types.add(wt.id)

    declared = {wt.id for wt in instance.worker_types}
    for type_id in declared:
        row = instance.availability.get(type_id)
        if row is None:
            bad("BAD_AVAILABILITY", f"no availability row for worker type {type_id!r}", type_id)
        elif len(row) != instance.horizon_periods:
            bad(
                "BAD_AVAILABILITY",
                f"availability row for {type_id!r} has {len(row)} entries, "
                f"expected {instance.horizon_periods}",
                type_id,
            )
        elif any(v < 0 for v in row):
            bad("BAD_AVAILABILITY", f"availability row for {type_id!r} has negative entries", type_id)
    for type_id in instance.availability:
        if type_id not in declared:
            bad("BAD_AVAILABILITY", f"availability row for undeclared worker type {type_id!r}", type_id)

    if not instance.tasks:
        bad("EMPTY_INSTANCE", "instance has no tasks")

    seen_tasks: set[str] = set()
    subtask_owner: dict[str, str] = {}
    for task in instance.tasks:
        if task.id in seen_tasks:
            bad("DUPLICATE_TASK", f"task {task.id!r} declared twice", task.id)
        seen_tasks.add(task.id)

        if not (0 <= task.ready_time < instance.horizon_periods):
            bad(
                "BAD_WINDOW",
                f"task {task.id!r} ready_time {task.ready_time} outside horizon "
                f"[0, {instance.horizon_periods})",
                task.id,
            )
        if task.ready_time > task.deadline:
            bad(
                "BAD_WINDOW",
                f"task {task.id!r} ready_time {task.ready_time} > deadline {task.deadline}",
                task.id,
            )
        if task.makespan_weight < 0 or task.lateness_weight < 0:
            bad("NEGATIVE_WEIGHT", f"task {task.id!r} has a negative weight", task.id)
        if not task.subtasks:
            bad("EMPTY_TASK", f"task {task.id!r} has no subtasks", task.id)

        local_ids = {sub.id for sub in task.subtasks}
        for sub in task.subtasks:
            if sub.id in subtask_owner:
                bad(
                    "DUPLICATE_SUBTASK",
                    f"subtask {sub.id!r} listed under both {subtask_owner[sub.id]!r} "
                    f"and {task.id!r}",
                    sub.id,
                )
            else:
                subtask_owner[sub.id] = task.id
            if not (1 <= sub.duration <= instance.horizon_periods):
                bad(
                    "BAD_DURATION",
                    f"subtask {sub.id!r} duration {sub.duration} outside "
                    f"[1, {instance.horizon_periods}]",
                    sub.id,
                )
            for type_id, count in sub.requirements.items():
                if type_id not in declared:
                    bad(
                        "UNKNOWN_WORKER_TYPE",
                        f"subtask {sub.id!r} requires undeclared worker type {type_id!r}",
                        sub.id,
                    )
                elif count < 1:
                    bad(
                        "BAD_REQUIREMENT",
                        f"subtask {sub.id!r} requires {count} of {type_id!r}; counts must be >= 1",
                        sub.id,
                    )
            for pred in sub.predecessors:
                if pred not in local_ids:
                    bad(
                        "UNKNOWN_PREDECESSOR",
                        f"subtask {sub.id!r} lists predecessor {pred!r} outside task {task.id!r}",
                        sub.id,
                    )

        if _has_cycle(task):
            bad("PRECEDENCE_CYCLE", f"task {task.id!r} has a precedence cycle", task.id)

    return issues


def _has_cycle(task: Task) -> bool:
    local = {sub.id: sub for sub in task.subtasks}
    state: dict[str, int] = {}  # 0 visiting, 1 done

    def visit(sub_id: str) -> bool:
        mark = state.get(sub_id)
        if mark == 0:
            return True
        if mark == 1:
            return False
        state[sub_id] = 0
        for pred in local[sub_id].predecessors:
            if pred in local and visit(pred):
                return True
        state[sub_id] = 1
        return False

    return any(visit(sub.id) for sub in task.subtasks)


def topological_subtask_order(task: Task) -> list[Subtask]:
    """Subtasks in precedence order, ties broken by declaration order."""
    index = {sub.id: i for i, sub in enumerate(task.subtasks)}
    remaining_preds = {
        sub.id: {p for p in sub.predecessors if p in index} for sub in task.subtasks
    }
    dependents: dict[str, list[str]] = {sub.id: [] for sub in task.subtasks}
    for sub in task.subtasks:
        for pred in remaining_preds[sub.id]:
            dependents[pred].append(sub.id)

    ready = sorted((i for i, sub in enumerate(task.subtasks) if not remaining_preds[sub.id]))
    order: list[Subtask] = []
    pending = set(ready)
    while ready:
        i = min(ready)
        ready.remove(i)
        sub = task.subtasks[i]
        order.append(sub)
        for dep_id in dependents[sub.id]:
            preds = remaining_preds[dep_id]
            preds.discard(sub.id)
            if not preds and index[dep_id] not in pending:
                ready.append(index[dep_id])
                pending.add(index[dep_id])
    if len(order) != len(task.subtasks):
        raise ValueError(f"task {task.id!r} has a precedence cycle")
    return order


def min_makespan(task: Task) -> int:
    """Shortest possible makespan of a task: its critical-path length.

    The longest duration sum over any precedence chain, ignoring worker and
    bay limits. Raises ValueError on a precedence cycle.
    """
    finish: dict[str, int] = {}
    for sub in topological_subtask_order(task):
        earliest = max((finish[p] for p in sub.predecessors if p in finish), default=0)
        finish[sub.id] = earliest + sub.duration
    return max(finish.values())


# --- canonical JSON I/O ---------------------------------------------------


def canonical_json_bytes(document: Any) -> bytes:
    """Render a document as canonical JSON: 2-space indent, trailing newline."""
    return (json.dumps(document, indent=2) + "\n").encode("utf-8")


def instance_to_document(instance: Instance) -> dict[str, Any]:
    return {
        "period_minutes": instance.period_minutes,
        "horizon_periods": instance.horizon_periods,
        "num_bays": instance.num_bays,
        "worker_types": [{"id": wt.id, "label": wt.label} for wt in instance.worker_types],
        "availability": {wt.id: list(instance.availability.get(wt.id, ())) for wt in instance.worker_types},
        "tasks": [
            {
                "id": task.id,
                "ready_time": task.ready_time,
                "deadline": task.deadline,
                "requires_bay": task.requires_bay,
                "makespan_weight": task.makespan_weight,
                "lateness_weight": task.lateness_weight,
                "subtasks": [
                    {
                        "id": sub.id,
                        "duration": sub.duration,
                        "requirements": dict(sub.requirements),
                        "predecessors": list(sub.predecessors),
                    }
                    for sub in task.subtasks
                ],
            }
            for task in instance.tasks
        ],
    }


def instance_from_document(document: Mapping[str, Any]) -> Instance:
    """Build and validate an Instance from a parsed JSON document.

    Raises InvalidInstanceError listing every schema and invariant violation.
    """
    issues: list[ValidationIssue] = []

    def want(obj: Mapping[str, Any], key: str, kinds: tuple[type, ...], default: Any, where: str) -> Any:
        if key not in obj:
            issues.append(ValidationIssue("MISSING_FIELD", f"{where} is missing {key!r}", where))
            return default
        value = obj[key]
        if not isinstance(value, kinds) or isinstance(value, bool) and bool not in kinds:
            issues.append(
                ValidationIssue("BAD_TYPE", f"{where}.{key} has type {type(value).__name__}", where)
            )
            return default
        return value

    if not isinstance(document, Mapping):
        raise InvalidInstanceError([ValidationIssue("BAD_TYPE", "top level must be a JSON object")])

    horizon = want(document, "horizon_periods", (int,), 1, "instance")
    minutes = want(document, "period_minutes", (int,), 60, "instance")
    bays = want(document, "num_bays", (int,), 0, "instance")

    worker_types: list[WorkerType] = []
    for k, entry in enumerate(want(document, "worker_types", (list,), [], "instance")):
        if not isinstance(entry, Mapping):
            issues.append(ValidationIssue("BAD_TYPE", f"worker_types[{k}] is not an object"))
            continue
        wt_id = want(entry, "id", (str,), f"?worker{k}", f"worker_types[{k}]")
        label = entry.get("label", "")
        worker_types.append(WorkerType(id=wt_id, label=label if isinstance(label, str) else ""))

    availability: dict[str, tuple[int, ...]] = {}
    avail_doc = want(document, "availability", (Mapping,), {}, "instance")
    for type_id, row in avail_doc.items():
        if not isinstance(row, list) or any(not isinstance(v, int) or isinstance(v, bool) for v in row):
            issues.append(
                ValidationIssue("BAD_TYPE", f"availability[{type_id!r}] must be a list of integers", type_id)
            )
            availability[type_id] = ()
        else:
            availability[type_id] = tuple(row)

    tasks: list[Task] = []
    for k, tdoc in enumerate(want(document, "tasks", (list,), [], "instance")):
        if not isinstance(tdoc, Mapping):
            issues.append(ValidationIssue("BAD_TYPE", f"tasks[{k}] is not an object"))
            continue
        where = f"tasks[{k}]"
        task_id = want(tdoc, "id", (str,), f"?task{k}", where)
        subtasks: list[Subtask] = []
        for n, sdoc in enumerate(want(tdoc, "subtasks", (list,), [], where)):
            if not isinstance(sdoc, Mapping):
                issues.append(ValidationIssue("BAD_TYPE", f"{where}.subtasks[{n}] is not an object"))
                continue
            swhere = f"{where}.subtasks[{n}]"
            requirements = want(sdoc, "requirements", (Mapping,), {}, swhere)
            reqs: dict[str, int] = {}
            for type_id, count in requirements.items():
                if not isinstance(count, int) or isinstance(count, bool):
                    issues.append(
                        ValidationIssue("BAD_TYPE", f"{swhere}.requirements[{type_id!r}] must be an integer")
                    )
                else:
                    reqs[type_id] = count
            preds = want(sdoc, "predecessors", (list,), [], swhere)
            subtasks.append(
                Subtask(
                    id=want(sdoc, "id", (str,), f"?sub{k}.{n}", swhere),
                    duration=want(sdoc, "duration", (int,), 1, swhere),
                    requirements=reqs,
                    predecessors=tuple(p for p in preds if isinstance(p, str)),
                )
            )
        tasks.append(
            Task(
                id=task_id,
                ready_time=want(tdoc, "ready_time", (int,), 0, where),
                deadline=want(tdoc, "deadline", (int,), 0, where),
                requires_bay=bool(want(tdoc, "requires_bay", (bool, int), False, where)),
                makespan_weight=float(want(tdoc, "makespan_weight", (int, float), 0.0, where)),
                lateness_weight=float(want(tdoc, "lateness_weight", (int, float), 0.0, where)),
                subtasks=tuple(subtasks),
            )
        )

    instance = Instance(
        horizon_periods=horizon,
        period_minutes=minutes,
        num_bays=bays,
        worker_types=tuple(worker_types),
        availability=availability,
        tasks=tuple(tasks),
    )
    issues.extend(validate_instance(instance))
    if issues:
        raise InvalidInstanceError(issues)
    return instance


def load_instance(data: bytes | str) -> Instance:
    """Parse, build, and validate an instance from JSON text.

    Raises InstanceFormatError on malformed JSON (with line and column) and
    InvalidInstanceError when the document violates the schema or invariants.
    """
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceFormatError(exc.msg, exc.lineno, exc.colno) from exc
    return instance_from_document(document)


def save_instance(instance: Instance) -> bytes:
    """Serialize to canonical JSON. save(load(x)) is byte-identical for
    canonical x, and load(save(i)) reproduces i."""
    return canonical_json_bytes(instance_to_document(instance))


def instance_hash(instance: Instance) -> str:
    """Stable content hash of the canonical serialization."""
    return hashlib.sha256(save_instance(instance)).hexdigest()
