"""Request/response models for the scheduling service.

Instances travel as their canonical JSON documents (plain objects), so the
single source of truth for instance structure stays in the model module;
these classes only shape the transport envelope.
"""

from __future__ import annotations

from typing import Any, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field


class _Strict(BaseModel):
    model_config = ConfigDict(extra="forbid")


class IssueModel(_Strict):
    code: str
    message: str
    subject: str = ""


class ValidateRequest(_Strict):
    instance: dict[str, Any]


class ValidateResponse(_Strict):
    valid: bool
    issues: list[IssueModel] = Field(default_factory=list)


class MinMakespanRequest(_Strict):
    instance: dict[str, Any]


class MinMakespanResponse(_Strict):
    per_task: dict[str, int]
    lower_bound: float


class DecodeRequest(_Strict):
    instance: dict[str, Any]
    order: list[str]


class DecodeResponse(_Strict):
    feasible: bool
    schedule: Optional[dict[str, Any]] = None
    blocked_subtask: Optional[str] = None


class SolveGaRequest(_Strict):
    instance: dict[str, Any]
    seed: int
    population_size: int = 100
    generations: int = 60
    mutation_rate: float = 0.001
    elite_count: int = 1
    fitness: Literal["linear", "inverse"] = "linear"
    workers: int = 1


class SolveGaResponse(_Strict):
    feasible: bool
    termination: str
    result: dict[str, Any]


class SolveExactRequest(_Strict):
    instance: dict[str, Any]
    node_budget: int = 1_000_000


class SolveExactResponse(_Strict):
    status: str
    feasible: bool
    nodes_expanded: int
    schedule: Optional[dict[str, Any]] = None


class ExportMilpRequest(_Strict):
    instance: dict[str, Any]
    mode: Literal["paper", "amended"] = "amended"
    max_variables: Optional[int] = None


class ExportMilpResponse(_Strict):
    lp_text: str
    variables: int


class ImportSolutionRequest(_Strict):
    instance: dict[str, Any]
    solution_text: str


class ParityReportModel(_Strict):
    feasible: bool
    violations: list[str] = Field(default_factory=list)
    internal_objective: float
    external_objective: Optional[float] = None
    difference: Optional[float] = None
    within_tolerance: Optional[bool] = None
    tolerance: float


class ImportSolutionResponse(_Strict):
    starts: dict[str, int]
    report: ParityReportModel


class GenScenariosRequest(_Strict):
    template: Optional[dict[str, Any]] = None  # None = built-in desk template
    pi: float = 1.0
    tightness: Literal["tight", "medium", "loose"] = "tight"
    count: int = 1
    seed: int
    ready_window: Optional[tuple[int, int]] = None


class ScenarioFile(_Strict):
    filename: str
    instance: dict[str, Any]


class GenScenariosResponse(_Strict):
    scenarios: list[ScenarioFile]


class BenchCaseModel(_Strict):
    scenario_id: str
    pi: float
    tightness: Literal["tight", "medium", "loose"]
    instance: dict[str, Any]


class BenchRequest(_Strict):
    cases: list[BenchCaseModel]
    methods: list[Literal["GA_LINEAR", "GA_INVERSE", "HEURISTIC_READY_SORT", "EXACT"]]
    seed: int
    ga_population: int = 100
    ga_generations: int = 60
    ga_mutation_rate: float = 0.001
    ga_elite_count: int = 1
    exact_node_budget: int = 1_000_000
    workers: int = 1


class BenchSkipModel(_Strict):
    scenario_id: str
    method: str
    reason: str


class BenchResponse(_Strict):
    csv: str
    aggregates_csv: str
    skipped: list[BenchSkipModel] = Field(default_factory=list)


class GanttRequest(_Strict):
    instance: dict[str, Any]
    starts: dict[str, int]


class GanttResponse(_Strict):
    svg: str


class HealthResponse(_Strict):
    status: Literal["ok"]
