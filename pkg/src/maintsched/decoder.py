"""Greedy decoder: task permutation -> feasible schedule (or a marker).

Tasks are scheduled one at a time in chromosome order, never revisited.
Within a task, subtasks are placed in precedence order (declaration order
breaking ties), each at the earliest period where its workers fit for the
whole duration. Bay-requiring tasks additionally scan a candidate task
start upward until the task's full interval fits within bay capacity.
Worker and bay consumption of already-placed tasks is permanent, which is
exactly the greedy behaviour the genetic algorithm exploits by reordering.
"""

from __future__ import annotations

from bisect import bisect_left
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence

from .evaluator import ScheduleAssignment, ScheduleMetrics, compute_metrics
from .model import Instance, topological_subtask_order


@dataclass(frozen=True)
class Chromosome:
    """A permutation of all task ids; the genetic algorithm's genotype."""

    order: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.order)


@dataclass(frozen=True)
class DecodeOutcome:
    """Either a feasible schedule with its metrics, or an infeasibility
    marker naming the first subtask that could not be placed."""

    feasible: bool
    assignment: Optional[ScheduleAssignment] = None
    metrics: Optional[ScheduleMetrics] = None
    blocked_subtask: Optional[str] = None

    @property
    def objective(self) -> Optional[float]:
        return self.metrics.objective if self.metrics is not None else None


@dataclass(frozen=True)
class _SubPlan:
    id: str
    duration: int
    reqs: tuple[tuple[int, int], ...]  # (worker type index, head count)
    preds: tuple[str, ...]


@dataclass(frozen=True)
class _TaskPlan:
    id: str
    ready: int
    requires_bay: bool
    subs: tuple[_SubPlan, ...]  # topological order, declaration-order ties
    min_span: int  # longest predecessor-chain duration; no window is shorter


@dataclass(frozen=True)
class DecodeContext:
    """Precompiled instance data; build once, reuse across many decodes."""

    instance: Instance
    horizon: int
    num_bays: int
    base_avail: tuple[tuple[int, ...], ...]
    plans: dict[str, _TaskPlan]


def build_context(instance: Instance) -> DecodeContext:
    type_index = {wt.id: k for k, wt in enumerate(instance.worker_types)}
    base_avail = tuple(tuple(instance.availability[wt.id]) for wt in instance.worker_types)
    plans: dict[str, _TaskPlan] = {}
    for task in instance.tasks:
        subs = tuple(
            _SubPlan(
                id=sub.id,
                duration=sub.duration,
                reqs=tuple((type_index[p], c) for p, c in sub.requirements.items()),
                preds=sub.predecessors,
            )
            for sub in topological_subtask_order(task)
        )
        chain_finish: dict[str, int] = {}
        for sub in subs:
            chain_finish[sub.id] = sub.duration + max(
                (chain_finish[p] for p in sub.preds), default=0
            )
        span = max(chain_finish.values(), default=0)
        plans[task.id] = _TaskPlan(task.id, task.ready_time, task.requires_bay, subs, span)
    return DecodeContext(
        instance=instance,
        horizon=instance.horizon_periods,
        num_bays=instance.num_bays,
        base_avail=base_avail,
        plans=plans,
    )


def _earliest_start(
    avail: list[list[int]], reqs: Sequence[tuple[int, int]], lo: int, horizon: int, duration: int
) -> int:
    """Earliest s >= lo with avail[p][t] >= count for all t in [s, s+duration).

    On a shortfall at period t the candidate jumps straight to t+1, so the
    scan visits each period at most once per required type. Returns -1 when
    nothing fits before the horizon.
    """
    last = horizon - duration
    s = lo
    while s <= last:
        jump = -1
        end = s + duration
        for p, c in reqs:
            row = avail[p]
            if duration == 1:
                if row[s] < c:
                    jump = s + 1
                    break
            elif min(row[s:end]) < c:
                t = s
                while row[t] >= c:
                    t += 1
                jump = t + 1
                break
        if jump < 0:
            return s
        s = jump
    return -1


def _consume(avail: list[list[int]], reqs: Sequence[tuple[int, int]], s: int, end: int) -> None:
    for p, c in reqs:
        row = avail[p]
        for t in range(s, end):
            row[t] -= c


def _release(avail: list[list[int]], reqs: Sequence[tuple[int, int]], s: int, end: int) -> None:
    for p, c in reqs:
        row = avail[p]
        for t in range(s, end):
            row[t] += c


def _place_free_task(
    plan: _TaskPlan, avail: list[list[int]], horizon: int, starts: dict[str, int]
) -> Optional[str]:
    """Place a non-bay task as early as possible; returns the blocked
    subtask id on failure (placements up to it are already consumed but the
    whole decode is abandoned, so no rollback is needed)."""
    ends: dict[str, int] = {}
    for sub in plan.subs:
        lo = plan.ready
        for pred in sub.preds:
            pe = ends[pred]
            if pe > lo:
                lo = pe
        s = _earliest_start(avail, sub.reqs, lo, horizon, sub.duration)
        if s < 0:
            return sub.id
        end = s + sub.duration
        _consume(avail, sub.reqs, s, end)
        starts[sub.id] = s
        ends[sub.id] = end
    return None


def _next_bay_window(full: list[int], s: int, span: int, horizon: int) -> int:
    """Smallest g >= s such that no period of [g, g+span) appears in the
    sorted list of fully-loaded periods and the window fits the horizon;
    -1 when no such g exists. Each full period is stepped past at most
    once, so the walk is linear in the list length."""
    limit = horizon - span
    g = s
    i = bisect_left(full, g)
    while g <= limit:
        while i < len(full) and full[i] < g:
            i += 1
        if i == len(full) or full[i] >= g + span:
            return g
        g = full[i] + 1
        i += 1
    return -1


def _place_bay_task(
    plan: _TaskPlan,
    avail: list[list[int]],
    bay_load: list[int],
    horizon: int,
    num_bays: int,
    starts: dict[str, int],
) -> Optional[str]:
    """Place a bay task: try candidate task starts upward from the ready
    time, tentatively place all subtasks at or after the candidate, then
    verify bay capacity over the resulting task interval. On failure the
    candidate advances to the next period that keeps a bay free for the
    task's minimum span — skipped candidates cannot change the outcome,
    because a committed placement always covers such a window and the
    greedy per-subtask starts are unchanged by raising the candidate up
    to the placement's own task start. Returns the blocked subtask id on
    failure."""
    full = [t for t, load in enumerate(bay_load) if load >= num_bays]
    span = plan.min_span
    s0 = _next_bay_window(full, plan.ready, span, horizon)
    while s0 >= 0:
        tentative: dict[str, int] = {}
        ends: dict[str, int] = {}
        placed: list[tuple[_SubPlan, int, int]] = []
        blocked: Optional[str] = None
        for sub in plan.subs:
            lo = s0
            for pred in sub.preds:
                pe = ends[pred]
                if pe > lo:
                    lo = pe
            s = _earliest_start(avail, sub.reqs, lo, horizon, sub.duration)
            if s < 0:
                blocked = sub.id
                break
            end = s + sub.duration
            _consume(avail, sub.reqs, s, end)
            placed.append((sub, s, end))
            tentative[sub.id] = s
            ends[sub.id] = end

        if blocked is not None:
            for sub, s, end in placed:
                _release(avail, sub.reqs, s, end)
            s0 = _next_bay_window(full, s0 + 1, span, horizon)
            continue

        task_start = min(tentative.values())
        task_finish = max(ends.values())
        i = bisect_left(full, task_start)
        if i == len(full) or full[i] >= task_finish:
            for t in range(task_start, task_finish):
                bay_load[t] += 1
            starts.update(tentative)
            return None
        for sub, s, end in placed:
            _release(avail, sub.reqs, s, end)
        s0 = _next_bay_window(full, full[i] + 1, span, horizon)
    return plan.subs[0].id


def validate_chromosome(instance: Instance, chromosome: Chromosome) -> None:
    expected = [task.id for task in instance.tasks]
    if sorted(chromosome.order) != sorted(expected):
        raise ValueError(
            f"chromosome is not a permutation of the instance's task ids: {chromosome.order}"
        )


def decode(
    instance: Instance, chromosome: Chromosome, context: Optional[DecodeContext] = None
) -> DecodeOutcome:
    """Decode a task permutation into a schedule.

    Deterministic: identical inputs give identical outcomes. Never raises
    for a placement failure; infeasibility is reported in the outcome.
    """
    validate_chromosome(instance, chromosome)
    ctx = context if context is not None else build_context(instance)
    avail = [list(row) for row in ctx.base_avail]
    bay_load = [0] * ctx.horizon
    starts: dict[str, int] = {}

    for task_id in chromosome.order:
        plan = ctx.plans[task_id]
        if plan.requires_bay:
            blocked = _place_bay_task(plan, avail, bay_load, ctx.horizon, ctx.num_bays, starts)
        else:
            blocked = _place_free_task(plan, avail, ctx.horizon, starts)
        if blocked is not None:
            return DecodeOutcome(feasible=False, blocked_subtask=blocked)

    assignment = ScheduleAssignment(starts=starts)
    metrics = compute_metrics(instance, assignment, verify=False)
    return DecodeOutcome(feasible=True, assignment=assignment, metrics=metrics)


def decode_population(
    instance: Instance,
    chromosomes: Sequence[Chromosome],
    context: Optional[DecodeContext] = None,
    workers: int = 1,
) -> list[DecodeOutcome]:
    """Decode many chromosomes; element-wise equal to mapping decode.

    decode is pure, so evaluation may fan out over threads; results keep
    input order and are identical for any worker count.
    """
    ctx = context if context is not None else build_context(instance)
    if workers <= 1 or len(chromosomes) < 2:
        return [decode(instance, chrom, ctx) for chrom in chromosomes]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda chrom: decode(instance, chrom, ctx), chromosomes))
