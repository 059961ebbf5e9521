"""Random scenario generation for benchmark batches.

A scenario is the base template with resampled task windows and a swapped
availability regime: each task's ready time is drawn uniformly from a
window (by default the first six sevenths of the horizon), its deadline is
set to ready time plus a tightness multiple of the task's critical-path
makespan, and the worker roster is either kept from the template (tight) or
replaced with a flat head count (10 for medium, 15 for loose).

Scenario k is generated from its own stream seeded with "{seed}:{k}", so a
batch is reproducible per seed and scenario k never changes when the batch
grows (prefix stability).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, replace
from enum import Enum
from typing import Optional

from .model import (
    Instance,
    InvalidInstanceError,
    instance_from_document,
    min_makespan,
    validate_instance,
)

MEDIUM_HEADCOUNT = 10
LOOSE_HEADCOUNT = 15


class WorkerTightness(str, Enum):
    TIGHT = "tight"  # the template's own roster
    MEDIUM = "medium"  # flat 10 of every type, every period
    LOOSE = "loose"  # flat 15 of every type, every period


def default_ready_window(horizon_periods: int) -> tuple[int, int]:
    """Inclusive sampling window: the first six sevenths of the horizon,
    leaving the tail free so sampled tasks still have room to complete."""
    upper = max(0, (horizon_periods * 6) // 7 - 1)
    return (0, upper)


@dataclass(frozen=True, kw_only=True)
class ScenarioConfig:
    base_instance: Instance
    deadline_tightness: float = 1.0
    worker_tightness: WorkerTightness = WorkerTightness.TIGHT
    ready_time_window: Optional[tuple[int, int]] = None  # inclusive; None = default
    count: int = 1
    seed: int = 0

    def validate(self) -> None:
        if self.deadline_tightness < 1.0:
            raise ValueError(
                f"deadline_tightness must be >= 1, got {self.deadline_tightness}"
            )
        if self.count < 0:
            raise ValueError(f"count must be >= 0, got {self.count}")
        lo, hi = self.window()
        if not (0 <= lo <= hi < self.base_instance.horizon_periods):
            raise ValueError(
                f"ready_time_window ({lo}, {hi}) must lie inside periods "
                f"0..{self.base_instance.horizon_periods - 1}"
            )

    def window(self) -> tuple[int, int]:
        if self.ready_time_window is not None:
            return self.ready_time_window
        return default_ready_window(self.base_instance.horizon_periods)


def round_half_up(x: float) -> int:
    return math.floor(x + 0.5)


def _availability(config: ScenarioConfig) -> dict[str, tuple[int, ...]]:
    base = config.base_instance
    if config.worker_tightness is WorkerTightness.TIGHT:
        return {wt.id: tuple(base.availability[wt.id]) for wt in base.worker_types}
    level = MEDIUM_HEADCOUNT if config.worker_tightness is WorkerTightness.MEDIUM else LOOSE_HEADCOUNT
    return {wt.id: (level,) * base.horizon_periods for wt in base.worker_types}


def generate_scenario(config: ScenarioConfig, k: int) -> Instance:
    """Scenario k of the batch; independent of count, reproducible per seed.

    Draw order: one ready-time draw per task, in template declaration
    order, from random.Random(f"{seed}:{k}").
    """
    config.validate()
    base = config.base_instance
    issues = validate_instance(base)
    if issues:
        raise InvalidInstanceError(issues)
    rng = random.Random(f"{config.seed}:{k}")
    lo, hi = config.window()
    availability = _availability(config)
    tasks = []
    for task in base.tasks:
        ready = rng.randint(lo, hi)
        deadline = ready + round_half_up(config.deadline_tightness * min_makespan(task))
        tasks.append(replace(task, ready_time=ready, deadline=deadline))
    return replace(base, tasks=tuple(tasks), availability=availability)


def generate_scenarios(config: ScenarioConfig) -> list[Instance]:
    return [generate_scenario(config, k) for k in range(config.count)]


def scenario_filename(pi: float, tightness: WorkerTightness, k: int) -> str:
    pi_text = str(int(pi)) if pi == int(pi) else repr(float(pi))
    return f"scenario_{pi_text}_{tightness.value}_{k}.json"


# ---------------------------------------------------------------------------
# Templates


def _shift_roster(horizon: int, type_index: int) -> tuple[int, ...]:
    """Lean deterministic shift pattern: a single worker always on duty,
    a second on a staggered three-in-five beat (runs of three periods, so
    two-worker subtasks up to three periods long still have a home). The
    stagger offsets types from each other to spread the contention."""
    row = []
    for t in range(horizon):
        level = 1
        if (t + 2 * type_index) % 5 < 3:
            level += 1
        row.append(level)
    return tuple(row)


def desk_template() -> Instance:
    """Bench template at desk scale: 12 tasks, 2-6 subtasks each, 5 worker
    types, 2 bays, 42 four-hour periods (one week).

    Structure is a fixed literal: (bay flag, makespan weight, lateness
    weight, [(duration, {type: count}, [predecessor indexes]), ...]) per
    task. Every task's critical path is at most 5 periods so tasks sampled
    late in the default ready window can still finish inside the horizon.

    The roster keeps exactly one fitter on duty, and the five heavy-weight
    bay tasks each route their longest subtask through that single fitter.
    Under contention those tasks queue for the fitter, so schedule cost is
    dominated by queue order, and the cheapest order follows the (uneven)
    task weights rather than ready times. That keeps the template's search
    landscape genuinely permutation-sensitive. Ready times and deadlines
    here are placeholders; scenario generation resamples them.
    """
    types = ["fitter", "electrician", "boilermaker", "machinist", "technician"]
    horizon = 42
    specs: list[tuple[bool, float, float, list[tuple[int, dict[str, int], list[int]]]]] = [
        (True, 5.0, 6.0, [(1, {"technician": 1}, []), (3, {"fitter": 1}, [0]), (1, {"technician": 1}, [1])]),
        (False, 1.0, 1.0, [(2, {"electrician": 1}, []), (2, {"electrician": 2}, [0]), (1, {"fitter": 1}, [0])]),
        (True, 4.0, 2.0, [(3, {"fitter": 1}, []), (2, {"boilermaker": 2}, [0])]),
        (False, 1.0, 1.0, [(2, {"technician": 2}, []), (1, {"machinist": 1, "technician": 1}, [0]), (2, {"fitter": 1}, [0])]),
        (True, 3.0, 5.0, [(1, {"machinist": 1}, []), (3, {"fitter": 1}, [0]), (1, {"electrician": 1}, [1])]),
        (False, 1.0, 2.0, [(1, {"fitter": 1}, []), (2, {"electrician": 1}, []), (2, {"machinist": 1}, []), (1, {"electrician": 1, "machinist": 1}, [1, 2])]),
        (True, 2.0, 1.0, [(3, {"fitter": 1}, []), (2, {"machinist": 2}, [0])]),
        (False, 1.0, 3.0, [(1, {"technician": 1}, []), (1, {"technician": 1}, [0]), (2, {"boilermaker": 1}, [1]), (1, {"technician": 2}, [2]), (2, {"fitter": 1}, [0])]),
        (True, 5.0, 4.0, [(2, {"boilermaker": 2}, []), (3, {"fitter": 1}, [0])]),
        (False, 1.0, 1.0, [(2, {"boilermaker": 1}, []), (3, {"electrician": 2}, [0]), (2, {"fitter": 1}, [0])]),
        (True, 4.0, 6.0, [(1, {"machinist": 1}, []), (2, {"fitter": 1}, [0]), (1, {"boilermaker": 1}, [0]), (2, {"fitter": 1}, [1, 2])]),
        (False, 1.0, 2.0, [(2, {"boilermaker": 1}, []), (1, {"fitter": 1}, [0]), (1, {"technician": 1}, [0])]),
    ]
    document = {
        "period_minutes": 240,
        "horizon_periods": horizon,
        "num_bays": 2,
        "worker_types": [{"id": name, "label": name} for name in types],
        "availability": {
            name: [1] * horizon if k == 0 else list(_shift_roster(horizon, k))
            for k, name in enumerate(types)
        },
        "tasks": [],
    }
    for ti, (bay, f_weight, g_weight, subs) in enumerate(specs, start=1):
        task_id = f"task{ti:02d}"
        document["tasks"].append(
            {
                "id": task_id,
                "ready_time": 0,
                "deadline": horizon,
                "requires_bay": bay,
                "makespan_weight": f_weight,
                "lateness_weight": g_weight,
                "subtasks": [
                    {
                        "id": f"{task_id}s{si:02d}",
                        "duration": duration,
                        "requirements": reqs,
                        "predecessors": [f"{task_id}s{p + 1:02d}" for p in preds],
                    }
                    for si, (duration, reqs, preds) in enumerate(subs, start=1)
                ],
            }
        )
    return instance_from_document(document)


def full_scale_template(
    tasks: int = 100,
    mean_subtasks: int = 8,
    worker_types: int = 25,
    bays: int = 5,
    horizon_periods: int = 168,
    structure_seed: int = 20260819,
) -> Instance:
    """Synthetic full-scale template: by default 100 tasks averaging 8
    subtasks (roughly 800 total), 25 worker types, 5 bays, a week of
    one-hour periods.

    The structure itself is drawn deterministically from structure_seed;
    scenario generation then resamples windows and rosters as usual.
    """
    rng = random.Random(structure_seed)
    type_ids = [f"wt{k:02d}" for k in range(1, worker_types + 1)]
    document = {
        "period_minutes": 60,
        "horizon_periods": horizon_periods,
        "num_bays": bays,
        "worker_types": [{"id": tid, "label": f"trade {tid[2:]}"} for tid in type_ids],
        "availability": {
            tid: [4 + ((t + k) % 3) for t in range(horizon_periods)]
            for k, tid in enumerate(type_ids)
        },
        "tasks": [],
    }
    for ti in range(1, tasks + 1):
        task_id = f"task{ti:03d}"
        n_subs = rng.randint(max(2, mean_subtasks - 4), mean_subtasks + 4)
        subtasks = []
        for si in range(1, n_subs + 1):
            reqs = {rng.choice(type_ids): rng.randint(1, 2)}
            if rng.random() < 0.3:
                reqs.setdefault(rng.choice(type_ids), 1)
            preds = []
            if si > 1 and rng.random() < 0.8:
                preds.append(f"{task_id}s{rng.randint(1, si - 1):02d}")
            subtasks.append(
                {
                    "id": f"{task_id}s{si:02d}",
                    "duration": rng.randint(1, 6),
                    "requirements": reqs,
                    "predecessors": preds,
                }
            )
        document["tasks"].append(
            {
                "id": task_id,
                "ready_time": 0,
                "deadline": horizon_periods,
                "requires_bay": rng.random() < 0.4,
                "makespan_weight": 1.0,
                "lateness_weight": 1.0,
                "subtasks": subtasks,
            }
        )
    return instance_from_document(document)
