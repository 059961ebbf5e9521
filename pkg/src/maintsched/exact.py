"""Exact branch-and-bound solver for small instances.

Depth-first search assigns a start period to every subtask, walking tasks in
input order and each task's subtasks in topological order, trying start
times ascending. Feasibility (precedence, ready times, worker capacity, bay
capacity, horizon) is enforced incrementally, and partial schedules are
pruned with an admissible lower bound, so a completed search is provably
optimal. Meant for desk-scale instances — roughly eight subtasks and a
horizon of twenty periods — not as a competitor to real MILP solvers.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .evaluator import (
    ScheduleAssignment,
    ScheduleMetrics,
    compute_metrics,
    makespan_cost_bound,
)
from .model import Instance, Task, min_makespan, topological_subtask_order

DEFAULT_NODE_BUDGET = 1_000_000

_PRUNE_EPS = 1e-9


class ExactStatus(str, Enum):
    OPTIMAL = "OPTIMAL"
    BUDGET_EXCEEDED = "BUDGET_EXCEEDED"
    INFEASIBLE_INSTANCE = "INFEASIBLE_INSTANCE"


@dataclass(frozen=True)
class ExactResult:
    status: ExactStatus
    assignment: Optional[ScheduleAssignment]
    metrics: Optional[ScheduleMetrics]
    nodes_expanded: int

    @property
    def objective(self) -> Optional[float]:
        return self.metrics.objective if self.metrics is not None else None


def lower_bound(instance: Instance) -> float:
    """Weighted minimum-makespan bound: sum of f_i * critical-path length.

    Never exceeds the optimal objective, since every task's makespan is at
    least its critical path and clamped lateness is non-negative.
    """
    return makespan_cost_bound(instance)


@dataclass(frozen=True)
class _SubNode:
    sub_id: str
    duration: int
    reqs: tuple[tuple[int, int], ...]  # (worker-type row index, count)
    pred_slots: tuple[int, ...]  # global slot indexes of predecessors
    task_index: int
    last_of_task: bool


class _Searcher:
    def __init__(self, instance: Instance, node_budget: int):
        self.horizon = instance.horizon_periods
        self.num_bays = instance.num_bays
        self.node_budget = node_budget
        self.nodes = 0

        type_index = {wt.id: k for k, wt in enumerate(instance.worker_types)}
        self.avail = [list(instance.availability[wt.id]) for wt in instance.worker_types]
        self.bay_load = [0] * self.horizon

        self.tasks: list[Task] = list(instance.tasks)
        self.min_makespans = [min_makespan(t) for t in self.tasks]

        self.sequence: list[_SubNode] = []
        slot_of: dict[str, int] = {}
        for ti, task in enumerate(self.tasks):
            ordered = topological_subtask_order(task)
            for pos, sub in enumerate(ordered):
                slot_of[sub.id] = len(self.sequence)
                self.sequence.append(
                    _SubNode(
                        sub_id=sub.id,
                        duration=sub.duration,
                        reqs=tuple(
                            (type_index[p], c) for p, c in sorted(sub.requirements.items())
                        ),
                        pred_slots=tuple(slot_of[p] for p in sub.predecessors),
                        task_index=ti,
                        last_of_task=pos == len(ordered) - 1,
                    )
                )

        # Per-task optimistic cost when no subtask is placed yet: critical
        # path for the makespan term plus unavoidable lateness when even the
        # earliest possible finish overshoots the deadline.
        untouched = [
            t.makespan_weight * mm + t.lateness_weight * max(0, t.ready_time + mm - t.deadline)
            for t, mm in zip(self.tasks, self.min_makespans)
        ]
        self.suffix_bound = [0.0] * (len(self.tasks) + 1)
        for i in range(len(self.tasks) - 1, -1, -1):
            self.suffix_bound[i] = untouched[i] + self.suffix_bound[i + 1]

        self.starts = [-1] * len(self.sequence)
        self.spans: list[Optional[tuple[int, int]]] = [None] * len(self.tasks)
        self.completed_costs: list[float] = []

        self.best_cost: Optional[float] = None
        self.best_starts: Optional[dict[str, int]] = None

    # -- resource bookkeeping -------------------------------------------

    def _workers_fit(self, node: _SubNode, s: int) -> bool:
        end = s + node.duration
        for row_index, count in node.reqs:
            row = self.avail[row_index]
            for t in range(s, end):
                if row[t] < count:
                    return False
        return True

    def _consume(self, node: _SubNode, s: int, sign: int) -> None:
        end = s + node.duration
        for row_index, count in node.reqs:
            row = self.avail[row_index]
            for t in range(s, end):
                row[t] -= sign * count

    def _bay_delta(self, task_index: int, s: int, end: int) -> tuple[range, range]:
        span = self.spans[task_index]
        if span is None:
            return range(s, end), range(0)
        lo, hi = span
        return range(min(s, lo), lo), range(hi, max(end, hi))

    # -- bounds ----------------------------------------------------------

    def _partial_bound(self, depth: int) -> float:
        """Admissible lower bound on any completion of the current node."""
        bound = sum(self.completed_costs)
        if depth < len(self.sequence):
            ti = self.sequence[depth].task_index
            span = self.spans[ti]
            if span is not None and not self.sequence[depth - 1].last_of_task:
                task = self.tasks[ti]
                lo, hi = span
                bound += task.makespan_weight * max(self.min_makespans[ti], hi - lo)
                bound += task.lateness_weight * max(0, hi - task.deadline)
                bound += self.suffix_bound[ti + 1]
            else:
                bound += self.suffix_bound[ti]
        return bound

    # -- search ----------------------------------------------------------

    def run(self) -> None:
        self._descend(0)

    def _descend(self, depth: int) -> None:
        if depth == len(self.sequence):
            cost = sum(self.completed_costs)
            if self.best_cost is None or cost < self.best_cost - _PRUNE_EPS:
                self.best_cost = cost
                self.best_starts = {
                    node.sub_id: self.starts[i] for i, node in enumerate(self.sequence)
                }
            return

        node = self.sequence[depth]
        task = self.tasks[node.task_index]
        lo = task.ready_time
        for pred in node.pred_slots:
            pred_end = self.starts[pred] + self.sequence[pred].duration
            if pred_end > lo:
                lo = pred_end

        for s in range(lo, self.horizon - node.duration + 1):
            if self.nodes >= self.node_budget:
                raise _BudgetExhausted
            self.nodes += 1
            end = s + node.duration
            if not self._workers_fit(node, s):
                continue
            grow_left, grow_right = range(0), range(0)
            if task.requires_bay:
                grow_left, grow_right = self._bay_delta(node.task_index, s, end)
                if any(self.bay_load[t] >= self.num_bays for t in grow_left) or any(
                    self.bay_load[t] >= self.num_bays for t in grow_right
                ):
                    continue

            self._consume(node, s, +1)
            for t in grow_left:
                self.bay_load[t] += 1
            for t in grow_right:
                self.bay_load[t] += 1
            old_span = self.spans[node.task_index]
            new_span = (
                (s, end)
                if old_span is None
                else (min(s, old_span[0]), max(end, old_span[1]))
            )
            self.spans[node.task_index] = new_span
            self.starts[depth] = s
            completed = node.last_of_task
            if completed:
                span_lo, span_hi = new_span
                self.completed_costs.append(
                    task.makespan_weight * (span_hi - span_lo)
                    + task.lateness_weight * max(0, span_hi - task.deadline)
                )

            if self.best_cost is None or self._partial_bound(depth + 1) < self.best_cost - _PRUNE_EPS:
                self._descend(depth + 1)

            if completed:
                self.completed_costs.pop()
            self.starts[depth] = -1
            self.spans[node.task_index] = old_span
            for t in grow_left:
                self.bay_load[t] -= 1
            for t in grow_right:
                self.bay_load[t] -= 1
            self._consume(node, s, -1)


class _BudgetExhausted(Exception):
    pass


def solve_exact(instance: Instance, node_budget: int = DEFAULT_NODE_BUDGET) -> ExactResult:
    """Prove an optimal schedule by exhaustive search with pruning.

    Returns OPTIMAL with the schedule when the search space is exhausted,
    BUDGET_EXCEEDED with the best incumbent found (possibly none) when the
    node budget runs out, and INFEASIBLE_INSTANCE when a completed search
    found no feasible schedule.
    """
    if node_budget <= 0:
        raise ValueError(f"node_budget must be positive, got {node_budget}")
    searcher = _Searcher(instance, node_budget)
    exhausted = False
    try:
        searcher.run()
    except _BudgetExhausted:
        exhausted = True

    if searcher.best_starts is None:
        status = ExactStatus.BUDGET_EXCEEDED if exhausted else ExactStatus.INFEASIBLE_INSTANCE
        return ExactResult(status, None, None, searcher.nodes)

    assignment = ScheduleAssignment(searcher.best_starts)
    metrics = compute_metrics(instance, assignment)
    status = ExactStatus.BUDGET_EXCEEDED if exhausted else ExactStatus.OPTIMAL
    return ExactResult(status, assignment, metrics, searcher.nodes)
