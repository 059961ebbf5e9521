"""Weekly maintenance scheduling toolkit.

Schedules equipment maintenance tasks (each a small DAG of subtasks with
worker-type requirements) over a discrete horizon under worker rosters and
maintenance-bay limits, minimizing weighted makespan plus lateness. Ships a
greedy order decoder, a genetic algorithm over task permutations, a small
exact solver, an LP-format model exporter/importer, scenario generation,
and a benchmark harness — usable as a library, a CLI, or an HTTP service.
"""

from .decoder import (
    Chromosome,
    DecodeContext,
    DecodeOutcome,
    build_context,
    decode,
    decode_population,
    validate_chromosome,
)
from .evaluator import (
    ConstraintViolation,
    InfeasibleScheduleError,
    ScheduleAssignment,
    ScheduleMetrics,
    TaskMetrics,
    ViolationKind,
    check_schedule,
    compute_metrics,
    makespan_cost_bound,
    schedule_document,
)
from .exact import ExactResult, ExactStatus, lower_bound, solve_exact
from .ga import (
    AllInfeasibleError,
    FitnessKind,
    GaConfig,
    GaResult,
    GenerationStats,
    Population,
    TerminationReason,
    crossover,
    fitness_inverse,
    fitness_linear,
    ga_result_document,
    mutate,
    placement_slack_chromosome,
    ready_time_chromosome,
    run_ga,
    seed_population,
    select_parents,
)
from .milp import (
    ImportedSolution,
    LpModel,
    LpRow,
    MilpMode,
    MilpSizeError,
    ParityReport,
    SolutionImportError,
    assignment_to_lp_values,
    emit_milp,
    import_solution,
    parse_lp,
    render_solution_text,
    variable_count,
)
from .model import (
    Instance,
    InstanceFormatError,
    InvalidInstanceError,
    Subtask,
    Task,
    ValidationIssue,
    WorkerType,
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
from .scenario import (
    ScenarioConfig,
    WorkerTightness,
    desk_template,
    full_scale_template,
    generate_scenario,
    generate_scenarios,
    scenario_filename,
)
from .bench import (
    BenchCase,
    BenchConfig,
    BenchReport,
    BenchRow,
    CellAggregate,
    Method,
    optimality_gap,
    render_gantt,
    run_benchmark,
)

__all__ = [
    "AllInfeasibleError",
    "BenchCase",
    "BenchConfig",
    "BenchReport",
    "BenchRow",
    "CellAggregate",
    "Chromosome",
    "ConstraintViolation",
    "DecodeContext",
    "DecodeOutcome",
    "ExactResult",
    "ExactStatus",
    "FitnessKind",
    "GaConfig",
    "GaResult",
    "GenerationStats",
    "ImportedSolution",
    "InfeasibleScheduleError",
    "Instance",
    "InstanceFormatError",
    "InvalidInstanceError",
    "LpModel",
    "LpRow",
    "Method",
    "MilpMode",
    "MilpSizeError",
    "ParityReport",
    "Population",
    "ScenarioConfig",
    "ScheduleAssignment",
    "ScheduleMetrics",
    "SolutionImportError",
    "Subtask",
    "Task",
    "TaskMetrics",
    "TerminationReason",
    "ValidationIssue",
    "ViolationKind",
    "WorkerTightness",
    "WorkerType",
    "assignment_to_lp_values",
    "build_context",
    "canonical_json_bytes",
    "check_schedule",
    "compute_metrics",
    "crossover",
    "decode",
    "decode_population",
    "desk_template",
    "emit_milp",
    "fitness_inverse",
    "fitness_linear",
    "full_scale_template",
    "ga_result_document",
    "generate_scenario",
    "generate_scenarios",
    "import_solution",
    "instance_from_document",
    "instance_hash",
    "instance_to_document",
    "load_instance",
    "lower_bound",
    "makespan_cost_bound",
    "min_makespan",
    "mutate",
    "optimality_gap",
    "parse_lp",
    "placement_slack_chromosome",
    "ready_time_chromosome",
    "render_gantt",
    "render_solution_text",
    "run_benchmark",
    "run_ga",
    "save_instance",
    "scenario_filename",
    "schedule_document",
    "seed_population",
    "select_parents",
    "solve_exact",
    "topological_subtask_order",
    "validate_chromosome",
    "validate_instance",
    "variable_count",
]
