"""Genetic algorithm over task-permutation chromosomes.

Population seeding mixes two heuristic chromosomes with uniform random
permutations; selection is roulette-wheel over feasible chromosomes only;
children come from two-point crossover with a randomly chosen dominant
parent, then per-gene swap mutation; elitism copies the best chromosomes
unchanged so the best cost never regresses.

Determinism contract: one seeded stream drives every stochastic choice, in
this order: the population-seeding shuffles first, then per child slot the
two parent draws, the dominance coin, the cut-point sample, and finally
the mutation checks with their partner draws. Decoding consumes no
randomness, so results are identical for any decode worker count.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from enum import Enum
from statistics import fmean
from typing import Any, Optional, Sequence

from .decoder import (
    Chromosome,
    DecodeContext,
    DecodeOutcome,
    build_context,
    decode_population,
)
from .evaluator import (
    ScheduleAssignment,
    ScheduleMetrics,
    makespan_cost_bound,
    schedule_document,
)
from .model import Instance, min_makespan

_PERFECT_EPS = 1e-9


class FitnessKind(str, Enum):
    LINEAR = "LINEAR"
    INVERSE = "INVERSE"


class TerminationReason(str, Enum):
    GENERATIONS_EXHAUSTED = "GENERATIONS_EXHAUSTED"
    PERFECT_SCHEDULE = "PERFECT_SCHEDULE"
    ALL_INFEASIBLE = "ALL_INFEASIBLE"


class AllInfeasibleError(RuntimeError):
    """No chromosome in the population decodes to a feasible schedule."""

    def __init__(self, blocked_subtasks: Sequence[str]):
        super().__init__(
            "no feasible chromosome; unplaceable subtasks: " + ", ".join(blocked_subtasks)
        )
        self.blocked_subtasks = tuple(blocked_subtasks)


@dataclass(frozen=True, kw_only=True)
class GaConfig:
    seed: int
    population_size: int = 100
    generations: int = 60
    mutation_rate: float = 0.001
    elite_count: int = 1
    fitness_kind: FitnessKind = FitnessKind.LINEAR

    def validate(self) -> None:
        if self.population_size < 2:
            raise ValueError(f"population_size must be >= 2, got {self.population_size}")
        if self.generations < 0:
            raise ValueError(f"generations must be >= 0, got {self.generations}")
        if not 0.0 <= self.mutation_rate <= 1.0:
            raise ValueError(f"mutation_rate must be in [0, 1], got {self.mutation_rate}")
        if not 0 <= self.elite_count < self.population_size:
            raise ValueError(
                f"elite_count must be in [0, population_size), got {self.elite_count}"
            )


@dataclass
class Population:
    chromosomes: list[Chromosome]
    outcomes: list[DecodeOutcome]
    fitness: list[Optional[float]]


@dataclass(frozen=True)
class GenerationStats:
    gen: int
    min: Optional[float]
    mean: Optional[float]
    max: Optional[float]
    feasible_count: int


@dataclass(frozen=True)
class GaResult:
    termination: TerminationReason
    trace: tuple[GenerationStats, ...]
    best_chromosome: Optional[Chromosome] = None
    best_assignment: Optional[ScheduleAssignment] = None
    best_metrics: Optional[ScheduleMetrics] = None
    diagnostics: tuple[str, ...] = ()

    @property
    def best_objective(self) -> Optional[float]:
        return self.best_metrics.objective if self.best_metrics is not None else None


def ready_time_chromosome(instance: Instance) -> Chromosome:
    """Heuristic seed 1: tasks ascending by ready time, declaration order
    breaking ties."""
    ordered = sorted(instance.tasks, key=lambda task: task.ready_time)
    return Chromosome(tuple(task.id for task in ordered))


def placement_slack_chromosome(instance: Instance) -> Chromosome:
    """Heuristic seed 2: tasks with the least placement room first.

    Slack of a task = number of periods in which every worker type its
    subtasks use has nonzero availability, minus the task's critical-path
    makespan. Tasks that can only run in a narrow window sort first so the
    greedy decoder gets to place them before the window is consumed.
    """

    def slack(task) -> int:
        types = {p for sub in task.subtasks for p in sub.requirements}
        if types:
            open_periods = sum(
                1
                for t in range(instance.horizon_periods)
                if all(instance.availability[p][t] > 0 for p in types)
            )
        else:
            open_periods = instance.horizon_periods
        return open_periods - min_makespan(task)

    ordered = sorted(instance.tasks, key=slack)
    return Chromosome(tuple(task.id for task in ordered))


def seed_population(
    instance: Instance,
    config: GaConfig,
    rng: Optional[random.Random] = None,
    context: Optional[DecodeContext] = None,
    workers: int = 1,
) -> Population:
    """Initial population: the two heuristic chromosomes, then uniform
    random permutations drawn from the seeded stream, all decoded."""
    config.validate()
    if rng is None:
        rng = random.Random(config.seed)
    base = [task.id for task in instance.tasks]
    chromosomes = [ready_time_chromosome(instance), placement_slack_chromosome(instance)]
    for _ in range(config.population_size - 2):
        perm = base[:]
        rng.shuffle(perm)
        chromosomes.append(Chromosome(tuple(perm)))
    outcomes = decode_population(instance, chromosomes, context=context, workers=workers)
    return Population(chromosomes, outcomes, [None] * len(chromosomes))


def fitness_linear(costs: Sequence[Optional[float]]) -> list[Optional[float]]:
    """Best-relative fitness: max feasible cost minus own cost.

    Infeasible entries (None) keep no fitness. Raises AllInfeasibleError
    when nothing is feasible.
    """
    feasible = [c for c in costs if c is not None]
    if not feasible:
        raise AllInfeasibleError(())
    top = max(feasible)
    return [None if c is None else top - c for c in costs]


def fitness_inverse(costs: Sequence[Optional[float]], instance: Instance) -> list[Optional[float]]:
    """Inverse fitness: 1 / (cost - weighted minimum-makespan bound).

    A zero denominator marks a perfect schedule and maps to infinity; the
    caller terminates with that schedule. A negative denominator is
    impossible for feasible schedules and indicates a broken evaluator.
    """
    feasible = [c for c in costs if c is not None]
    if not feasible:
        raise AllInfeasibleError(())
    bound = makespan_cost_bound(instance)
    out: list[Optional[float]] = []
    for c in costs:
        if c is None:
            out.append(None)
            continue
        denom = c - bound
        assert denom > -_PERFECT_EPS, f"feasible cost {c} below bound {bound}"
        out.append(math.inf if denom <= _PERFECT_EPS else 1.0 / denom)
    return out


def select_parents(population: Population, rng: random.Random) -> tuple[int, int]:
    """Roulette-wheel draw of two parent indices, each independently
    proportional to fitness among feasible chromosomes. All-zero fitness
    degenerates to a uniform draw over the feasible chromosomes."""
    candidates = [i for i, f in enumerate(population.fitness) if f is not None]
    if not candidates:
        raise AllInfeasibleError(())
    weights = [population.fitness[i] for i in candidates]
    if any(math.isinf(w) for w in weights):
        perfect = [i for i, w in zip(candidates, weights) if math.isinf(w)]
        return perfect[rng.randrange(len(perfect))], perfect[rng.randrange(len(perfect))]
    total = sum(weights)
    if total <= 0.0:
        return candidates[rng.randrange(len(candidates))], candidates[rng.randrange(len(candidates))]

    def spin() -> int:
        r = rng.random() * total
        acc = 0.0
        for i, w in zip(candidates, weights):
            acc += w
            if r < acc:
                return i
        return candidates[-1]

    return spin(), spin()


def crossover(dominant: Chromosome, other: Chromosome, cut1: int, cut2: int) -> Chromosome:
    """Two-point crossover with a dominant parent.

    Cuts are gene boundaries, 0 <= cut1 < cut2 <= n. The dominant parent
    contributes whichever side of the cuts holds at least half the genes
    (the inside segment wins ties); the remaining positions are filled
    left to right with the missing genes in the order they appear in the
    non-dominant parent.
    """
    n = len(dominant.order)
    if not (0 <= cut1 < cut2 <= n):
        raise ValueError(f"invalid cut points ({cut1}, {cut2}) for {n} genes")
    child: list[Optional[str]] = [None] * n
    inside_len = cut2 - cut1
    if inside_len >= n - inside_len:
        for i in range(cut1, cut2):
            child[i] = dominant.order[i]
    else:
        for i in range(cut1):
            child[i] = dominant.order[i]
        for i in range(cut2, n):
            child[i] = dominant.order[i]
    taken = {g for g in child if g is not None}
    fill = iter(g for g in other.order if g not in taken)
    for i in range(n):
        if child[i] is None:
            child[i] = next(fill)
    return Chromosome(tuple(child))  # type: ignore[arg-type]


def mutate(chromosome: Chromosome, rng: random.Random, rate: float) -> Chromosome:
    """Swap mutation: each gene passes a Bernoulli(rate) check and, on
    success, swaps with a uniformly chosen other position."""
    genes = list(chromosome.order)
    n = len(genes)
    for i in range(n):
        if rng.random() < rate and n > 1:
            j = rng.randrange(n - 1)
            if j >= i:
                j += 1
            genes[i], genes[j] = genes[j], genes[i]
    return Chromosome(tuple(genes))


def _compute_fitness(
    costs: Sequence[Optional[float]], kind: FitnessKind, instance: Instance
) -> list[Optional[float]]:
    if kind is FitnessKind.LINEAR:
        return fitness_linear(costs)
    return fitness_inverse(costs, instance)


def _stats(gen: int, costs: Sequence[Optional[float]]) -> GenerationStats:
    feasible = [c for c in costs if c is not None]
    if not feasible:
        return GenerationStats(gen, None, None, None, 0)
    return GenerationStats(gen, min(feasible), fmean(feasible), max(feasible), len(feasible))


def run_ga(instance: Instance, config: GaConfig, workers: int = 1) -> GaResult:
    """Run the full loop: seed, decode, fitness, elitism, breed, repeat.

    Fully deterministic given (instance, config.seed); the worker count
    only parallelizes decoding. Terminates early on a perfect schedule
    (cost equal to the weighted minimum-makespan bound) or when no
    feasible chromosome remains; otherwise runs config.generations
    breeding steps past the initial population.
    """
    config.validate()
    rng = random.Random(config.seed)
    context = build_context(instance)
    bound = makespan_cost_bound(instance)
    n_tasks = len(instance.tasks)

    population = seed_population(instance, config, rng=rng, context=context, workers=workers)
    trace: list[GenerationStats] = []
    best_cost: Optional[float] = None
    best_index: Optional[int] = None
    best: tuple[Chromosome, DecodeOutcome] | None = None

    for gen in range(config.generations + 1):
        costs = [o.objective for o in population.outcomes]
        feasible_idx = [i for i, c in enumerate(costs) if c is not None]

        if not feasible_idx:
            blocked: list[str] = []
            for outcome in population.outcomes:
                if outcome.blocked_subtask and outcome.blocked_subtask not in blocked:
                    blocked.append(outcome.blocked_subtask)
            trace.append(_stats(gen, costs))
            return GaResult(
                termination=TerminationReason.ALL_INFEASIBLE,
                trace=tuple(trace),
                best_chromosome=best[0] if best else None,
                best_assignment=best[1].assignment if best else None,
                best_metrics=best[1].metrics if best else None,
                diagnostics=tuple(blocked),
            )

        gen_best = min(feasible_idx, key=lambda i: (costs[i], i))
        if best_cost is None or costs[gen_best] < best_cost:
            best_cost = costs[gen_best]
            best = (population.chromosomes[gen_best], population.outcomes[gen_best])
        trace.append(_stats(gen, costs))

        if best_cost is not None and best_cost <= bound + _PERFECT_EPS:
            return _finish(TerminationReason.PERFECT_SCHEDULE, trace, best)
        if gen == config.generations:
            return _finish(TerminationReason.GENERATIONS_EXHAUSTED, trace, best)

        population.fitness = _compute_fitness(costs, config.fitness_kind, instance)

        elite_idx = sorted(feasible_idx, key=lambda i: (costs[i], i))[: config.elite_count]
        next_chromosomes = [population.chromosomes[i] for i in elite_idx]
        next_outcomes = [population.outcomes[i] for i in elite_idx]

        bred: list[Chromosome] = []
        for _ in range(config.population_size - len(elite_idx)):
            a, b = select_parents(population, rng)
            if rng.random() < 0.5:
                dominant_i, other_i = a, b
            else:
                dominant_i, other_i = b, a
            cut1, cut2 = sorted(rng.sample(range(n_tasks + 1), 2))
            child = crossover(
                population.chromosomes[dominant_i], population.chromosomes[other_i], cut1, cut2
            )
            bred.append(mutate(child, rng, config.mutation_rate))

        bred_outcomes = decode_population(instance, bred, context=context, workers=workers)
        population = Population(
            next_chromosomes + bred,
            next_outcomes + bred_outcomes,
            [None] * config.population_size,
        )

    raise AssertionError("unreachable")


def _finish(
    reason: TerminationReason,
    trace: list[GenerationStats],
    best: tuple[Chromosome, DecodeOutcome] | None,
) -> GaResult:
    assert best is not None
    chromosome, outcome = best
    return GaResult(
        termination=reason,
        trace=tuple(trace),
        best_chromosome=chromosome,
        best_assignment=outcome.assignment,
        best_metrics=outcome.metrics,
    )


def ga_result_document(instance: Instance, result: GaResult) -> dict[str, Any]:
    """GA result JSON: the best schedule in the evaluator's format merged
    with the per-generation trace and the termination reason."""
    document: dict[str, Any] = {}
    if result.best_assignment is not None and result.best_metrics is not None:
        document.update(schedule_document(instance, result.best_assignment, result.best_metrics))
    document["trace"] = [
        {
            "gen": stats.gen,
            "min": stats.min,
            "mean": stats.mean,
            "max": stats.max,
            "feasible_count": stats.feasible_count,
        }
        for stats in result.trace
    ]
    document["termination"] = result.termination.value
    if result.diagnostics:
        document["diagnostics"] = list(result.diagnostics)
    return document
