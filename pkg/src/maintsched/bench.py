"""Benchmark harness: run methods over scenario batches and report gaps.

For every (scenario, method) cell the harness records the objective, the
best available bound (the exact optimum when the exact solver proved one,
otherwise the weighted minimum-makespan lower bound), the optimality gap,
feasibility, and wall time. Aggregates per (tightness-multiplier, roster)
cell report the mean gap per method and the mean per-scenario cost deficit
relative to the linear-fitness GA.

Determinism: each scenario gets one derived seed shared by every method
(paired runs), and the clock is injectable so golden-file tests can pin
wall_ms. Rows are emitted in (scenario, method) order.
"""

from __future__ import annotations

import csv
import hashlib
import io
import time
from dataclasses import dataclass
from enum import Enum
from statistics import fmean
from typing import Callable, Optional, Sequence
from xml.sax.saxutils import escape

from .decoder import decode
from .evaluator import InfeasibleScheduleError, ScheduleAssignment, check_schedule
from .exact import ExactStatus, lower_bound, solve_exact
from .ga import FitnessKind, GaConfig, ready_time_chromosome, run_ga
from .model import Instance
from .scenario import WorkerTightness


class Method(str, Enum):
    GA_LINEAR = "GA_LINEAR"
    GA_INVERSE = "GA_INVERSE"
    HEURISTIC_READY_SORT = "HEURISTIC_READY_SORT"
    EXACT = "EXACT"


CSV_COLUMNS = (
    "scenario_id",
    "pi",
    "worker_tightness",
    "method",
    "objective",
    "bound",
    "bound_kind",
    "gap",
    "feasible",
    "wall_ms",
    "seed",
)

BOUND_EXACT = "exact_optimum"
BOUND_MAKESPAN_LB = "makespan_lb"


def optimality_gap(cost: float, bound: float) -> float:
    """Relative distance above the bound: cost / bound - 1.

    The bound must be positive and never above the cost; a cost below its
    own lower bound means the bound is invalid.
    """
    if bound <= 0:
        raise ValueError(f"bound must be positive, got {bound}")
    if cost < bound:
        raise ValueError(f"cost {cost} is below the claimed lower bound {bound}")
    return cost / bound - 1.0


@dataclass(frozen=True, kw_only=True)
class BenchCase:
    scenario_id: str
    instance: Instance
    pi: float
    worker_tightness: WorkerTightness


@dataclass(frozen=True, kw_only=True)
class BenchConfig:
    seed: int = 0
    ga_population: int = 100
    ga_generations: int = 60
    ga_mutation_rate: float = 0.001
    ga_elite_count: int = 1
    exact_node_budget: int = 1_000_000
    exact_subtask_limit: int = 10
    exact_horizon_limit: int = 24
    workers: int = 1
    timer: Callable[[], float] = time.perf_counter


@dataclass(frozen=True)
class BenchRow:
    scenario_id: str
    pi: float
    worker_tightness: str
    method: Method
    objective: Optional[float]
    bound: float
    bound_kind: str
    gap: Optional[float]
    feasible: bool
    wall_ms: int
    seed: int


@dataclass(frozen=True)
class CellAggregate:
    pi: float
    worker_tightness: str
    method: Method
    mean_gap: Optional[float]
    mean_deficit_vs_ga_linear: Optional[float]
    feasible: int
    total: int


@dataclass(frozen=True)
class BenchReport:
    rows: tuple[BenchRow, ...]
    aggregates: tuple[CellAggregate, ...]
    skipped: tuple[tuple[str, Method, str], ...] = ()

    def to_csv(self) -> str:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for row in self.rows:
            writer.writerow(
                [
                    row.scenario_id,
                    _fmt(row.pi),
                    row.worker_tightness,
                    row.method.value,
                    "" if row.objective is None else _fmt(row.objective),
                    _fmt(row.bound),
                    row.bound_kind,
                    "" if row.gap is None else _fmt(row.gap),
                    "true" if row.feasible else "false",
                    row.wall_ms,
                    row.seed,
                ]
            )
        return out.getvalue()

    def aggregates_csv(self) -> str:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(
            (
                "pi",
                "worker_tightness",
                "method",
                "mean_gap",
                "mean_deficit_vs_ga_linear",
                "feasible",
                "total",
            )
        )
        for cell in self.aggregates:
            writer.writerow(
                [
                    _fmt(cell.pi),
                    cell.worker_tightness,
                    cell.method.value,
                    "" if cell.mean_gap is None else _fmt(cell.mean_gap),
                    ""
                    if cell.mean_deficit_vs_ga_linear is None
                    else _fmt(cell.mean_deficit_vs_ga_linear),
                    cell.feasible,
                    cell.total,
                ]
            )
        return out.getvalue()


def _fmt(x: float) -> str:
    if x == int(x) and abs(x) < 1e15:
        return str(int(x))
    return repr(float(x))


def scenario_seed(base_seed: int, scenario_id: str) -> int:
    """Method-independent 63-bit seed for one scenario, derived by hashing
    so every method sees the same stream on the same scenario (paired
    comparisons) while scenarios stay decorrelated."""
    digest = hashlib.sha256(f"{base_seed}:{scenario_id}".encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big") >> 1


def _run_method(
    case: BenchCase, method: Method, config: BenchConfig, seed: int
) -> tuple[Optional[float], bool, Optional[float]]:
    """Returns (objective, feasible, proven_optimum)."""
    instance = case.instance
    if method in (Method.GA_LINEAR, Method.GA_INVERSE):
        kind = FitnessKind.LINEAR if method is Method.GA_LINEAR else FitnessKind.INVERSE
        result = run_ga(
            instance,
            GaConfig(
                seed=seed,
                population_size=config.ga_population,
                generations=config.ga_generations,
                mutation_rate=config.ga_mutation_rate,
                elite_count=config.ga_elite_count,
                fitness_kind=kind,
            ),
            workers=config.workers,
        )
        return result.best_objective, result.best_objective is not None, None
    if method is Method.HEURISTIC_READY_SORT:
        outcome = decode(instance, ready_time_chromosome(instance))
        return outcome.objective, outcome.feasible, None
    result = solve_exact(instance, config.exact_node_budget)
    proven = result.objective if result.status is ExactStatus.OPTIMAL else None
    return result.objective, result.objective is not None, proven


def exact_applicable(instance: Instance, config: BenchConfig) -> bool:
    n_subs = sum(len(task.subtasks) for task in instance.tasks)
    return (
        n_subs <= config.exact_subtask_limit
        and instance.horizon_periods <= config.exact_horizon_limit
    )


def run_benchmark(
    cases: Sequence[BenchCase],
    methods: Sequence[Method],
    config: BenchConfig = BenchConfig(),
) -> BenchReport:
    """Run every applicable method on every scenario.

    The exact solver is skipped (and noted in report.skipped) on scenarios
    beyond its size limits instead of burning its node budget pointlessly.
    Infeasible results become rows with empty objective/gap, are excluded
    from means, and count against the feasible column.
    """
    rows: list[BenchRow] = []
    skipped: list[tuple[str, Method, str]] = []

    for case in cases:
        seed = scenario_seed(config.seed, case.scenario_id)
        lb = lower_bound(case.instance)
        results: dict[Method, tuple[tuple[Optional[float], bool, Optional[float]], float]] = {}
        for method in methods:
            if method is Method.EXACT and not exact_applicable(case.instance, config):
                n_subs = sum(len(t.subtasks) for t in case.instance.tasks)
                skipped.append(
                    (
                        case.scenario_id,
                        method,
                        f"instance size ({n_subs} subtasks, horizon "
                        f"{case.instance.horizon_periods}) exceeds exact-solver limits",
                    )
                )
                continue
            t0 = config.timer()
            outcome = _run_method(case, method, config, seed)
            t1 = config.timer()
            results[method] = (outcome, t1 - t0)

        proven = next(
            (outcome[2] for outcome, _ in results.values() if outcome[2] is not None),
            None,
        )
        bound = proven if proven is not None else lb
        bound_kind = BOUND_EXACT if proven is not None else BOUND_MAKESPAN_LB

        for method in methods:
            if method not in results:
                continue
            (objective, feasible, _), wall = results[method]
            gap = None
            if feasible and objective is not None and bound > 0:
                gap = optimality_gap(objective, bound)
            rows.append(
                BenchRow(
                    scenario_id=case.scenario_id,
                    pi=case.pi,
                    worker_tightness=case.worker_tightness.value,
                    method=method,
                    objective=objective,
                    bound=bound,
                    bound_kind=bound_kind,
                    gap=gap,
                    feasible=feasible,
                    wall_ms=int(round(wall * 1000)),
                    seed=seed,
                )
            )

    aggregates = _aggregate(rows, methods)
    return BenchReport(tuple(rows), tuple(aggregates), tuple(skipped))


def _aggregate(rows: Sequence[BenchRow], methods: Sequence[Method]) -> list[CellAggregate]:
    cells: dict[tuple[float, str], list[BenchRow]] = {}
    for row in rows:
        cells.setdefault((row.pi, row.worker_tightness), []).append(row)

    aggregates: list[CellAggregate] = []
    for (pi, tightness), cell_rows in cells.items():
        linear_costs = {
            row.scenario_id: row.objective
            for row in cell_rows
            if row.method is Method.GA_LINEAR and row.objective is not None
        }
        for method in methods:
            mine = [row for row in cell_rows if row.method is method]
            if not mine:
                continue
            gaps = [row.gap for row in mine if row.gap is not None]
            deficits = [
                (row.objective - linear_costs[row.scenario_id]) / linear_costs[row.scenario_id]
                for row in mine
                if row.objective is not None
                and row.scenario_id in linear_costs
                and linear_costs[row.scenario_id] > 0
            ]
            aggregates.append(
                CellAggregate(
                    pi=pi,
                    worker_tightness=tightness,
                    method=method,
                    mean_gap=fmean(gaps) if gaps else None,
                    mean_deficit_vs_ga_linear=fmean(deficits) if deficits else None,
                    feasible=sum(1 for row in mine if row.feasible),
                    total=len(mine),
                )
            )
    return aggregates


# ---------------------------------------------------------------------------
# Gantt rendering


_PALETTE = (
    "#4e79a7",
    "#f28e2b",
    "#59a14f",
    "#e15759",
    "#b07aa1",
    "#76b7b2",
    "#edc948",
    "#ff9da7",
    "#9c755f",
    "#bab0ac",
)

_CELL_W = 26
_ROW_H = 30
_ROW_GAP = 8
_LEFT_MARGIN = 120
_TOP_MARGIN = 40


def render_gantt(instance: Instance, assignment: ScheduleAssignment) -> str:
    """Render a schedule as standalone SVG text.

    One row per task (bay tasks marked), one block per subtask spanning its
    periods, block fill keyed to the dominant worker type, head count as
    the block label. Output is deterministic for identical inputs. Raises
    InfeasibleScheduleError for infeasible assignments and ValueError
    (EMPTY_INSTANCE) when there is nothing to draw.
    """
    if not instance.tasks:
        raise ValueError("EMPTY_INSTANCE: no tasks to render")
    violations = check_schedule(instance, assignment)
    if violations:
        raise InfeasibleScheduleError(violations)

    color_of = {wt.id: _PALETTE[k % len(_PALETTE)] for k, wt in enumerate(instance.worker_types)}
    n_rows = len(instance.tasks)
    legend_h = 22 * len(instance.worker_types) + 10
    width = _LEFT_MARGIN + instance.horizon_periods * _CELL_W + 20
    height = _TOP_MARGIN + n_rows * (_ROW_H + _ROW_GAP) + legend_h + 20

    parts: list[str] = []
    parts.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="11">'
    )
    parts.append(f'<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>')

    label_step = 1 if instance.horizon_periods <= 40 else 8
    for t in range(instance.horizon_periods + 1):
        x = _LEFT_MARGIN + t * _CELL_W
        parts.append(
            f'<line x1="{x}" y1="{_TOP_MARGIN - 6}" x2="{x}" '
            f'y2="{height - legend_h - 10}" stroke="#dddddd" stroke-width="1"/>'
        )
        if t % label_step == 0:
            parts.append(
                f'<text x="{x}" y="{_TOP_MARGIN - 10}" text-anchor="middle" '
                f'fill="#555555">{t}</text>'
            )

    for row, task in enumerate(instance.tasks):
        y = _TOP_MARGIN + row * (_ROW_H + _ROW_GAP)
        name = escape(task.id) + (" (bay)" if task.requires_bay else "")
        parts.append(
            f'<text x="{_LEFT_MARGIN - 8}" y="{y + _ROW_H / 2 + 4:g}" '
            f'text-anchor="end" fill="#222222">{name}</text>'
        )
        for sub in task.subtasks:
            start = assignment.starts[sub.id]
            x = _LEFT_MARGIN + start * _CELL_W
            w = sub.duration * _CELL_W
            primary = max(sorted(sub.requirements), key=lambda p: sub.requirements[p])
            heads = sum(sub.requirements.values())
            detail = ", ".join(f"{p}:{n}" for p, n in sorted(sub.requirements.items()))
            parts.append(
                f'<g><title>{escape(sub.id)} [{start}, {start + sub.duration}) '
                f'{escape(detail)}</title>'
                f'<rect x="{x}" y="{y}" width="{w}" height="{_ROW_H}" '
                f'fill="{color_of[primary]}" stroke="#333333" stroke-width="1" rx="3"/>'
                f'<text x="{x + w / 2:g}" y="{y + _ROW_H / 2 + 4:g}" text-anchor="middle" '
                f'fill="#ffffff">{heads}</text></g>'
            )

    legend_y = height - legend_h
    for k, wt in enumerate(instance.worker_types):
        y = legend_y + k * 22
        parts.append(
            f'<rect x="{_LEFT_MARGIN}" y="{y}" width="16" height="14" '
            f'fill="{color_of[wt.id]}" stroke="#333333"/>'
        )
        parts.append(
            f'<text x="{_LEFT_MARGIN + 22}" y="{y + 11}" fill="#222222">'
            f"{escape(wt.id)} ({escape(wt.label)})</text>"
        )

    parts.append("</svg>")
    return "\n".join(parts) + "\n"
