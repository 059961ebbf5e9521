"""Transport-free request handlers.

Each handler takes a request model and returns a response model, raising
ServiceError for anything the caller did wrong. The HTTP app and the CLI's
in-process mode both call these, so behavior cannot drift between the two
front ends.
"""

from __future__ import annotations

from typing import NoReturn

from .. import bench as bench_mod
from ..decoder import Chromosome, decode, validate_chromosome
from ..evaluator import (
    ScheduleAssignment,
    check_schedule,
    makespan_cost_bound,
    schedule_document,
)
from ..exact import ExactStatus, solve_exact
from ..ga import FitnessKind, GaConfig, ga_result_document, run_ga
from ..milp import (
    DEFAULT_MAX_VARIABLES,
    MilpMode,
    MilpSizeError,
    SolutionImportError,
    emit_milp,
    import_solution,
    variable_count,
)
from ..model import (
    Instance,
    InvalidInstanceError,
    instance_from_document,
    instance_to_document,
    min_makespan,
)
from ..scenario import (
    ScenarioConfig,
    WorkerTightness,
    desk_template,
    generate_scenarios,
    scenario_filename,
)
from . import schemas


class ServiceError(Exception):
    """A request that cannot be served; maps to an HTTP error response.

    kind is "input" (caller's data is wrong; CLI exit 2, HTTP 400) or
    "infeasible" (well-formed input whose answer is that no schedule
    exists; CLI exit 1, HTTP 409).
    """

    def __init__(self, code: str, message: str, *, kind: str = "input", details: list | None = None):
        super().__init__(message)
        self.code = code
        self.kind = kind
        self.details = details or []

    @property
    def http_status(self) -> int:
        return 409 if self.kind == "infeasible" else 400

    def payload(self) -> dict:
        return {"code": self.code, "message": str(self), "details": self.details}


def _load_instance(document: dict) -> Instance:
    try:
        return instance_from_document(document)
    except InvalidInstanceError as exc:
        _raise_invalid(exc)


def _raise_invalid(exc: InvalidInstanceError) -> NoReturn:
    raise ServiceError(
        "INVALID_INSTANCE",
        "instance document failed validation",
        details=[
            {"code": issue.code, "message": issue.message, "subject": issue.subject}
            for issue in exc.issues
        ],
    ) from exc


_MODES = {"paper": MilpMode.PAPER_FAITHFUL, "amended": MilpMode.AMENDED}


def handle_validate(request: schemas.ValidateRequest) -> schemas.ValidateResponse:
    try:
        instance_from_document(request.instance)
    except InvalidInstanceError as exc:
        return schemas.ValidateResponse(
            valid=False,
            issues=[
                schemas.IssueModel(code=i.code, message=i.message, subject=i.subject)
                for i in exc.issues
            ],
        )
    return schemas.ValidateResponse(valid=True, issues=[])


def handle_min_makespan(request: schemas.MinMakespanRequest) -> schemas.MinMakespanResponse:
    instance = _load_instance(request.instance)
    return schemas.MinMakespanResponse(
        per_task={task.id: min_makespan(task) for task in instance.tasks},
        lower_bound=makespan_cost_bound(instance),
    )


def handle_decode(request: schemas.DecodeRequest) -> schemas.DecodeResponse:
    instance = _load_instance(request.instance)
    chromosome = Chromosome(tuple(request.order))
    try:
        validate_chromosome(instance, chromosome)
    except ValueError as exc:
        raise ServiceError("BAD_ORDER", str(exc)) from exc
    outcome = decode(instance, chromosome)
    if not outcome.feasible:
        return schemas.DecodeResponse(feasible=False, blocked_subtask=outcome.blocked_subtask)
    return schemas.DecodeResponse(
        feasible=True,
        schedule=schedule_document(instance, outcome.assignment, outcome.metrics),
    )


def handle_solve_ga(request: schemas.SolveGaRequest) -> schemas.SolveGaResponse:
    instance = _load_instance(request.instance)
    config = GaConfig(
        seed=request.seed,
        population_size=request.population_size,
        generations=request.generations,
        mutation_rate=request.mutation_rate,
        elite_count=request.elite_count,
        fitness_kind=FitnessKind.LINEAR if request.fitness == "linear" else FitnessKind.INVERSE,
    )
    try:
        config.validate()
    except ValueError as exc:
        raise ServiceError("BAD_CONFIG", str(exc)) from exc
    result = run_ga(instance, config, workers=request.workers)
    return schemas.SolveGaResponse(
        feasible=result.best_metrics is not None,
        termination=result.termination.value,
        result=ga_result_document(instance, result),
    )


def handle_solve_exact(request: schemas.SolveExactRequest) -> schemas.SolveExactResponse:
    instance = _load_instance(request.instance)
    try:
        result = solve_exact(instance, request.node_budget)
    except ValueError as exc:
        raise ServiceError("BAD_CONFIG", str(exc)) from exc
    schedule = None
    if result.assignment is not None and result.metrics is not None:
        schedule = schedule_document(instance, result.assignment, result.metrics)
    return schemas.SolveExactResponse(
        status=result.status.value,
        feasible=result.status is not ExactStatus.INFEASIBLE_INSTANCE
        and result.assignment is not None,
        nodes_expanded=result.nodes_expanded,
        schedule=schedule,
    )


def handle_export_milp(request: schemas.ExportMilpRequest) -> schemas.ExportMilpResponse:
    instance = _load_instance(request.instance)
    cap = request.max_variables if request.max_variables is not None else DEFAULT_MAX_VARIABLES
    try:
        text = emit_milp(instance, _MODES[request.mode], max_variables=cap)
    except MilpSizeError as exc:
        raise ServiceError("TOO_LARGE", str(exc)) from exc
    except ValueError as exc:
        raise ServiceError("BAD_INSTANCE_IDS", str(exc)) from exc
    return schemas.ExportMilpResponse(lp_text=text, variables=variable_count(instance))


def handle_import_solution(request: schemas.ImportSolutionRequest) -> schemas.ImportSolutionResponse:
    instance = _load_instance(request.instance)
    try:
        imported = import_solution(instance, request.solution_text)
    except SolutionImportError as exc:
        raise ServiceError(exc.code, str(exc)) from exc
    report = imported.report
    return schemas.ImportSolutionResponse(
        starts=dict(imported.assignment.starts),
        report=schemas.ParityReportModel(
            feasible=report.feasible,
            violations=[
                f"{v.kind.value}: {v.detail}" for v in report.violations
            ],
            internal_objective=report.internal_objective,
            external_objective=report.external_objective,
            difference=report.difference,
            within_tolerance=report.within_tolerance,
            tolerance=report.tolerance,
        ),
    )


def handle_gen_scenarios(request: schemas.GenScenariosRequest) -> schemas.GenScenariosResponse:
    template = desk_template() if request.template is None else _load_instance(request.template)
    config = ScenarioConfig(
        base_instance=template,
        deadline_tightness=request.pi,
        worker_tightness=WorkerTightness(request.tightness),
        ready_time_window=request.ready_window,
        count=request.count,
        seed=request.seed,
    )
    try:
        config.validate()
        scenarios = generate_scenarios(config)
    except ValueError as exc:
        raise ServiceError("BAD_CONFIG", str(exc)) from exc
    files = [
        schemas.ScenarioFile(
            filename=scenario_filename(request.pi, config.worker_tightness, k),
            instance=instance_to_document(scenario),
        )
        for k, scenario in enumerate(scenarios)
    ]
    return schemas.GenScenariosResponse(scenarios=files)


def handle_bench(request: schemas.BenchRequest) -> schemas.BenchResponse:
    if not request.cases:
        raise ServiceError("BAD_CONFIG", "bench needs at least one scenario case")
    if not request.methods:
        raise ServiceError("BAD_CONFIG", "bench needs at least one method")
    cases = [
        bench_mod.BenchCase(
            scenario_id=case.scenario_id,
            instance=_load_instance(case.instance),
            pi=case.pi,
            worker_tightness=WorkerTightness(case.tightness),
        )
        for case in request.cases
    ]
    methods = [bench_mod.Method(m) for m in request.methods]
    config = bench_mod.BenchConfig(
        seed=request.seed,
        ga_population=request.ga_population,
        ga_generations=request.ga_generations,
        ga_mutation_rate=request.ga_mutation_rate,
        ga_elite_count=request.ga_elite_count,
        exact_node_budget=request.exact_node_budget,
        workers=request.workers,
    )
    report = bench_mod.run_benchmark(cases, methods, config)
    return schemas.BenchResponse(
        csv=report.to_csv(),
        aggregates_csv=report.aggregates_csv(),
        skipped=[
            schemas.BenchSkipModel(scenario_id=sid, method=method.value, reason=reason)
            for sid, method, reason in report.skipped
        ],
    )


def handle_gantt(request: schemas.GanttRequest) -> schemas.GanttResponse:
    instance = _load_instance(request.instance)
    assignment = ScheduleAssignment(request.starts)
    try:
        violations = check_schedule(instance, assignment)
    except ValueError as exc:
        raise ServiceError("BAD_STARTS", str(exc)) from exc
    if violations:
        raise ServiceError(
            "INFEASIBLE_SCHEDULE",
            "assignment does not satisfy the instance constraints",
            kind="infeasible",
            details=[f"{v.kind.value}: {v.detail}" for v in violations],
        )
    return schemas.GanttResponse(svg=bench_mod.render_gantt(instance, assignment))
