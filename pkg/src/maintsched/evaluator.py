"""Schedule representation, constraint checking, and objective computation.

Deliberately independent of the greedy decoder: the decoder promises
feasible output and this module verifies it, so each side tests the other.
All functions are pure over immutable inputs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Mapping

from .model import Instance, instance_hash, min_makespan


class ViolationKind(str, Enum):
    HORIZON = "HORIZON"
    PRECEDENCE = "PRECEDENCE"
    READY_TIME = "READY_TIME"
    BAYS = "BAYS"
    WORKERS = "WORKERS"


@dataclass(frozen=True)
class ConstraintViolation:
    kind: ViolationKind
    subject: str
    period: int
    detail: str


@dataclass(frozen=True)
class ScheduleAssignment:
    """Start period per subtask; task intervals are derived on demand."""

    starts: Mapping[str, int]

    def task_intervals(self, instance: Instance) -> dict[str, tuple[int, int]]:
        """Per task: (start, finish) where start is the earliest subtask
        start and finish the latest subtask end. The task is active over
        the half-open interval [start, finish), idle gaps included."""
        intervals: dict[str, tuple[int, int]] = {}
        for task in instance.tasks:
            start = min(self.starts[sub.id] for sub in task.subtasks)
            finish = max(self.starts[sub.id] + sub.duration for sub in task.subtasks)
            intervals[task.id] = (start, finish)
        return intervals


@dataclass(frozen=True)
class TaskMetrics:
    start: int
    finish: int
    makespan: int
    lateness: float


@dataclass(frozen=True)
class ScheduleMetrics:
    objective: float
    per_task: Mapping[str, TaskMetrics] = field(default_factory=dict)


class InfeasibleScheduleError(ValueError):
    """Raised when metrics are requested for an infeasible assignment."""

    def __init__(self, violations: list[ConstraintViolation]):
        super().__init__(
            "; ".join(f"{v.kind.value}@{v.period}:{v.detail}" for v in violations[:5])
            + (" ..." if len(violations) > 5 else "")
        )
        self.violations = violations


def _require_exact_cover(instance: Instance, assignment: ScheduleAssignment) -> None:
    expected = {sub.id for task in instance.tasks for sub in task.subtasks}
    got = set(assignment.starts)
    unknown = got - expected
    missing = expected - got
    if unknown:
        raise ValueError(f"assignment has unknown subtask ids: {sorted(unknown)}")
    if missing:
        raise ValueError(f"assignment is missing subtask starts: {sorted(missing)}")


def check_schedule(instance: Instance, assignment: ScheduleAssignment) -> list[ConstraintViolation]:
    """Return one violation per broken constraint; empty means feasible.

    Checks, in order: horizon containment of every subtask, precedence
    within each task, ready-time on every subtask start, bay capacity per
    period over whole task intervals, and worker capacity per period and
    type summed over running subtasks.
    """
    _require_exact_cover(instance, assignment)
    starts = assignment.starts
    horizon = instance.horizon_periods
    violations: list[ConstraintViolation] = []

    for task in instance.tasks:
        by_id = {sub.id: sub for sub in task.subtasks}
        for sub in task.subtasks:
            s = starts[sub.id]
            if s < 0 or s + sub.duration > horizon:
                violations.append(
                    ConstraintViolation(
                        ViolationKind.HORIZON,
                        sub.id,
                        s,
                        f"subtask {sub.id!r} occupies [{s}, {s + sub.duration}) outside "
                        f"[0, {horizon})",
                    )
                )
            for pred in sub.predecessors:
                pred_end = starts[pred] + by_id[pred].duration
                if s < pred_end:
                    violations.append(
                        ConstraintViolation(
                            ViolationKind.PRECEDENCE,
                            sub.id,
                            s,
                            f"subtask {sub.id!r} starts at {s} before predecessor "
                            f"{pred!r} ends at {pred_end}",
                        )
                    )
            if s < task.ready_time:
                violations.append(
                    ConstraintViolation(
                        ViolationKind.READY_TIME,
                        sub.id,
                        s,
                        f"subtask {sub.id!r} starts at {s} before task {task.id!r} "
                        f"ready time {task.ready_time}",
                    )
                )

    intervals = assignment.task_intervals(instance)

    bay_load = [0] * horizon
    for task in instance.tasks:
        if not task.requires_bay:
            continue
        start, finish = intervals[task.id]
        for t in range(max(start, 0), min(finish, horizon)):
            bay_load[t] += 1
    for t, used in enumerate(bay_load):
        if used > instance.num_bays:
            violations.append(
                ConstraintViolation(
                    ViolationKind.BAYS,
                    "bays",
                    t,
                    f"{used} bay tasks active in period {t}, only {instance.num_bays} bays",
                )
            )

    for wt in instance.worker_types:
        row = instance.availability[wt.id]
        demand = [0] * horizon
        for task in instance.tasks:
            for sub in task.subtasks:
                count = sub.requirements.get(wt.id, 0)
                if not count:
                    continue
                s = starts[sub.id]
                for t in range(max(s, 0), min(s + sub.duration, horizon)):
                    demand[t] += count
        for t in range(horizon):
            if demand[t] > row[t]:
                violations.append(
                    ConstraintViolation(
                        ViolationKind.WORKERS,
                        wt.id,
                        t,
                        f"{demand[t]} workers of {wt.id!r} needed in period {t}, "
                        f"only {row[t]} available",
                    )
                )

    return violations


def compute_metrics(
    instance: Instance,
    assignment: ScheduleAssignment,
    *,
    clamp_lateness: bool = True,
    verify: bool = True,
) -> ScheduleMetrics:
    """Weighted makespan-plus-lateness objective and per-task breakdown.

    makespan = finish - start over the task's whole interval (idle gaps
    count); lateness = finish - deadline, clamped at zero unless
    clamp_lateness is False (the unclamped variant mirrors the exported
    MILP's printed lateness bound, which permits earliness credit).

    Raises InfeasibleScheduleError when verify is set and the assignment
    breaks any constraint.
    """
    if verify:
        violations = check_schedule(instance, assignment)
        if violations:
            raise InfeasibleScheduleError(violations)
    else:
        _require_exact_cover(instance, assignment)

    per_task: dict[str, TaskMetrics] = {}
    objective = 0.0
    for task in instance.tasks:
        start = min(assignment.starts[sub.id] for sub in task.subtasks)
        finish = max(assignment.starts[sub.id] + sub.duration for sub in task.subtasks)
        makespan = finish - start
        lateness = float(finish - task.deadline)
        if clamp_lateness and lateness < 0:
            lateness = 0.0
        per_task[task.id] = TaskMetrics(start, finish, makespan, lateness)
        objective += task.makespan_weight * makespan + task.lateness_weight * lateness
    return ScheduleMetrics(objective=objective, per_task=per_task)


def makespan_cost_bound(instance: Instance) -> float:
    """Sum of weighted critical-path makespans: a lower bound on the
    objective of every feasible schedule (with clamped lateness)."""
    return sum(task.makespan_weight * min_makespan(task) for task in instance.tasks)


def schedule_document(
    instance: Instance, assignment: ScheduleAssignment, metrics: ScheduleMetrics
) -> dict[str, Any]:
    """Schedule JSON document: instance hash, starts, and metrics."""
    starts = {
        sub.id: assignment.starts[sub.id] for task in instance.tasks for sub in task.subtasks
    }
    return {
        "instance_hash": instance_hash(instance),
        "starts": starts,
        "metrics": {
            "objective": metrics.objective,
            "per_task": {
                task.id: {
                    "start": metrics.per_task[task.id].start,
                    "finish": metrics.per_task[task.id].finish,
                    "makespan": metrics.per_task[task.id].makespan,
                    "lateness": metrics.per_task[task.id].lateness,
                }
                for task in instance.tasks
            },
        },
    }
