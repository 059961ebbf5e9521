"""Time-indexed 0/1 formulation of the scheduling problem as LP-format text.

The emitter writes a complete model for an external solver: one start
indicator per (subtask, period), task activity/start/finish indicators, and
continuous makespan/lateness variables, tied together by the constraint
rows described on each row family below. Two modes are supported:

* PAPER_FAITHFUL — the formulation exactly as the row families define it:
  lateness variables are free (so negative "earliness" can offset cost) and
  task ready times are not enforced.
* AMENDED — adds per-subtask ready-time rows (rt_*) and clamps lateness
  variables at zero, which makes an optimal solution agree with the
  evaluator's metrics.

The module also imports solver output ("name value" lines) back into a
ScheduleAssignment with a parity report, and includes a small LP text
parser/row evaluator so round trips can be machine-checked without any
external solver.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping, Optional, Sequence

from .evaluator import (
    ConstraintViolation,
    ScheduleAssignment,
    check_schedule,
    compute_metrics,
)
from .model import Instance

DEFAULT_MAX_VARIABLES = 500_000

PARITY_TOLERANCE = 1e-6
INTEGRALITY_TOLERANCE = 1e-4

_LINE_WIDTH = 78
_ID_PATTERN = re.compile(r"[A-Za-z0-9_.]+")
_BINARY_PREFIXES = ("xistart_", "xifinish_", "xs_", "xi_")


class MilpMode(str, Enum):
    PAPER_FAITHFUL = "PAPER_FAITHFUL"
    AMENDED = "AMENDED"


class MilpSizeError(ValueError):
    """The instance would need more variables than the configured cap."""

    def __init__(self, variables: int, cap: int):
        super().__init__(
            f"instance needs {variables} MILP variables, exceeding the cap of {cap}; "
            "raise max_variables to emit anyway"
        )
        self.variables = variables
        self.cap = cap


class SolutionImportError(ValueError):
    """Solver output could not be turned into a schedule.

    code is "NOT_INTEGRAL" when a binary variable is fractional beyond the
    integrality tolerance, "PARSE_ERROR" for malformed or inconsistent text.
    """

    def __init__(self, code: str, message: str):
        super().__init__(f"{code}: {message}")
        self.code = code


def variable_count(instance: Instance) -> int:
    """Number of variables the emitted model will contain."""
    horizon = instance.horizon_periods
    n_tasks = len(instance.tasks)
    n_subs = sum(len(t.subtasks) for t in instance.tasks)
    # xs per (subtask, period); xi and xistart per (task, period); xifinish
    # additionally covers the period just past the horizon; ymk and ylt per
    # task.
    return n_subs * horizon + n_tasks * horizon + n_tasks * horizon + n_tasks * (horizon + 1) + 2 * n_tasks


def _num(x: float) -> str:
    if x == int(x) and abs(x) < 1e15:
        return str(int(x))
    return repr(float(x))


def _check_lp_ids(instance: Instance) -> None:
    names = [wt.id for wt in instance.worker_types]
    for task in instance.tasks:
        names.append(task.id)
        names.extend(sub.id for sub in task.subtasks)
    for name in names:
        if not _ID_PATTERN.fullmatch(name):
            raise ValueError(
                f"id {name!r} cannot name an LP variable; use letters, digits, '_' or '.'"
            )


class _Writer:
    def __init__(self) -> None:
        self.lines: list[str] = []

    def row(self, name: str, terms: Sequence[tuple[float, str]], sense: str, rhs: float) -> None:
        """Emit one constraint row, wrapping to keep lines short.

        Zero-coefficient terms are dropped. A row with no remaining terms is
        skipped when it is vacuously true and rejected when it is not, since
        silently dropping a false row would change the model.
        """
        kept = [(c, v) for c, v in terms if c != 0]
        if not kept:
            ok = {"=": rhs == 0, "<=": 0 <= rhs, ">=": 0 >= rhs}[sense]
            if not ok:
                raise ValueError(f"row {name} reduces to the false constant 0 {sense} {rhs}")
            return
        self._tokens(f" {name}:", self._term_tokens(kept) + [sense, _num(rhs)])

    def objective(self, terms: Sequence[tuple[float, str]]) -> None:
        # Zero-weight terms stay in the objective so every continuous
        # variable is visible to the solver and the auditor.
        self._tokens(" obj:", self._term_tokens(terms))

    @staticmethod
    def _term_tokens(terms: Sequence[tuple[float, str]]) -> list[str]:
        tokens: list[str] = []
        for k, (coef, var) in enumerate(terms):
            mag = abs(coef)
            if k == 0:
                head = "- " if coef < 0 else ""
                tokens.append(f"{head}{var}" if mag == 1 else f"{head}{_num(mag)} {var}")
            else:
                sign = "-" if coef < 0 else "+"
                tokens.append(f"{sign} {var}" if mag == 1 else f"{sign} {_num(mag)} {var}")
        return tokens

    def _tokens(self, head: str, tokens: Sequence[str]) -> None:
        line = head
        for token in tokens:
            if len(line) + 1 + len(token) > _LINE_WIDTH and line != head:
                self.lines.append(line)
                line = "  "
            line += " " + token
        self.lines.append(line)

    def names(self, names: Iterable[str]) -> None:
        line = ""
        for name in names:
            if line and len(line) + 1 + len(name) > _LINE_WIDTH:
                self.lines.append(line)
                line = ""
            line = f" {name}" if not line else f"{line} {name}"
        if line:
            self.lines.append(line)

    def raw(self, line: str) -> None:
        self.lines.append(line)


def emit_milp(
    instance: Instance,
    mode: MilpMode = MilpMode.AMENDED,
    *,
    max_variables: int = DEFAULT_MAX_VARIABLES,
) -> str:
    """Render the instance as deterministic LP text.

    Sections: Minimize / Subject To / Bounds / Binaries / End. Identical
    instances produce byte-identical output. Raises MilpSizeError when the
    variable count exceeds max_variables and ValueError when an id cannot
    serve as part of an LP variable name.
    """
    _check_lp_ids(instance)
    count = variable_count(instance)
    if count > max_variables:
        raise MilpSizeError(count, max_variables)

    horizon = instance.horizon_periods
    periods = range(horizon)
    finish_periods = range(horizon + 1)
    w = _Writer()

    w.raw(f"\\ mode: {mode.value}")
    w.raw("Minimize")
    objective: list[tuple[float, str]] = []
    for task in instance.tasks:
        objective.append((task.makespan_weight, f"ymk_{task.id}"))
        objective.append((task.lateness_weight, f"ylt_{task.id}"))
    w.objective(objective)

    w.raw("Subject To")

    # c2: every subtask starts exactly once.
    for task in instance.tasks:
        for sub in task.subtasks:
            w.row(f"c2_{sub.id}", [(1, f"xs_{sub.id}_{t}") for t in periods], "=", 1)

    # c3: a subtask finishes within the horizon.
    for task in instance.tasks:
        for sub in task.subtasks:
            w.row(
                f"c3_{sub.id}",
                [(t, f"xs_{sub.id}_{t}") for t in periods],
                "<=",
                horizon - sub.duration,
            )

    # c4: a subtask starts no earlier than each predecessor's end.
    for task in instance.tasks:
        durations = {s.id: s.duration for s in task.subtasks}
        for sub in task.subtasks:
            for pred in sub.predecessors:
                terms = [(t, f"xs_{sub.id}_{t}") for t in periods]
                terms += [(-t, f"xs_{pred}_{t}") for t in periods]
                w.row(f"c4_{sub.id}_{pred}", terms, ">=", durations[pred])

    # c5: every task starts exactly once.
    for task in instance.tasks:
        w.row(f"c5_{task.id}", [(1, f"xistart_{task.id}_{t}") for t in periods], "=", 1)

    # c6: the task start is no later than any of its subtask starts.
    for task in instance.tasks:
        for sub in task.subtasks:
            terms = [(t, f"xistart_{task.id}_{t}") for t in periods]
            terms += [(-t, f"xs_{sub.id}_{t}") for t in periods]
            w.row(f"c6_{task.id}_{sub.id}", terms, "<=", 0)

    # c7: the makespan reaches past every subtask's end.
    for task in instance.tasks:
        for sub in task.subtasks:
            terms = [(t, f"xistart_{task.id}_{t}") for t in periods]
            terms.append((1, f"ymk_{task.id}"))
            terms += [(-t, f"xs_{sub.id}_{t}") for t in periods]
            w.row(f"c7_{task.id}_{sub.id}", terms, ">=", sub.duration)

    # c8: every task finishes exactly once (possibly just past the horizon).
    for task in instance.tasks:
        w.row(
            f"c8_{task.id}", [(1, f"xifinish_{task.id}_{t}") for t in finish_periods], "=", 1
        )

    # c9: the finish period is no earlier than start plus makespan.
    for task in instance.tasks:
        terms = [(t, f"xifinish_{task.id}_{t}") for t in finish_periods]
        terms += [(-t, f"xistart_{task.id}_{t}") for t in periods]
        terms.append((-1, f"ymk_{task.id}"))
        w.row(f"c9_{task.id}", terms, ">=", 0)

    # c10: lateness is at least finish minus deadline.
    for task in instance.tasks:
        terms = [(1.0, f"ylt_{task.id}")]
        terms += [(-t, f"xifinish_{task.id}_{t}") for t in finish_periods]
        w.row(f"c10_{task.id}", terms, ">=", -task.deadline)

    # c11: activity recurrence — active now iff active before, just
    # started, and not just finished; the period -1 term is substituted
    # away as zero in the t=0 row.
    for task in instance.tasks:
        for t in periods:
            terms = [(1, f"xi_{task.id}_{t}")]
            if t > 0:
                terms.append((-1, f"xi_{task.id}_{t - 1}"))
            terms.append((-1, f"xistart_{task.id}_{t}"))
            terms.append((1, f"xifinish_{task.id}_{t}"))
            w.row(f"c11_{task.id}_{t}", terms, "=", 0)

    # c13: active bay tasks never exceed the bay count.
    bay_tasks = [task for task in instance.tasks if task.requires_bay]
    if bay_tasks:
        for t in periods:
            w.row(
                f"c13_{t}",
                [(1, f"xi_{task.id}_{t}") for task in bay_tasks],
                "<=",
                instance.num_bays,
            )

    # c14: per worker type and period, the demand of subtasks covering the
    # period stays within the roster; a subtask of duration d started at s
    # covers periods s..s+d-1.
    for wt in instance.worker_types:
        roster = instance.availability[wt.id]
        for t in periods:
            terms = []
            for task in instance.tasks:
                for sub in task.subtasks:
                    r = sub.requirements.get(wt.id, 0)
                    if r == 0:
                        continue
                    for s in range(max(0, t - sub.duration + 1), t + 1):
                        terms.append((r, f"xs_{sub.id}_{s}"))
            w.row(f"c14_{wt.id}_{t}", terms, "<=", roster[t])

    # rt: ready times, enforced per subtask (amended mode only).
    if mode is MilpMode.AMENDED:
        for task in instance.tasks:
            if task.ready_time == 0:
                continue
            for sub in task.subtasks:
                w.row(
                    f"rt_{sub.id}",
                    [(t, f"xs_{sub.id}_{t}") for t in periods],
                    ">=",
                    task.ready_time,
                )

    w.raw("Bounds")
    for task in instance.tasks:
        w.raw(f" ymk_{task.id} free")
    for task in instance.tasks:
        if mode is MilpMode.AMENDED:
            w.raw(f" 0 <= ylt_{task.id}")
        else:
            w.raw(f" ylt_{task.id} free")

    w.raw("Binaries")
    names: list[str] = []
    for task in instance.tasks:
        for sub in task.subtasks:
            names.extend(f"xs_{sub.id}_{t}" for t in periods)
    for task in instance.tasks:
        names.extend(f"xi_{task.id}_{t}" for t in periods)
        names.extend(f"xistart_{task.id}_{t}" for t in periods)
        names.extend(f"xifinish_{task.id}_{t}" for t in finish_periods)
    w.names(names)
    w.raw("End")
    return "\n".join(w.lines) + "\n"


# ---------------------------------------------------------------------------
# Implied variable values and solution text


def assignment_to_lp_values(
    instance: Instance, assignment: ScheduleAssignment, mode: MilpMode = MilpMode.AMENDED
) -> dict[str, float]:
    """All variable values implied by a schedule, keyed by LP name.

    Start indicators follow the subtask starts; task indicators derive from
    the half-open task interval; makespan variables equal the interval
    length; lateness is clamped at zero in AMENDED mode and signed in
    PAPER_FAITHFUL mode. Every model variable gets a value (zeros included)
    so the result can be checked against every emitted row.
    """
    horizon = instance.horizon_periods
    values: dict[str, float] = {}
    for task in instance.tasks:
        for sub in task.subtasks:
            for t in range(horizon):
                values[f"xs_{sub.id}_{t}"] = 0.0
        for t in range(horizon):
            values[f"xi_{task.id}_{t}"] = 0.0
            values[f"xistart_{task.id}_{t}"] = 0.0
        for t in range(horizon + 1):
            values[f"xifinish_{task.id}_{t}"] = 0.0

    intervals = assignment.task_intervals(instance)
    for task in instance.tasks:
        for sub in task.subtasks:
            values[f"xs_{sub.id}_{assignment.starts[sub.id]}"] = 1.0
        start, finish = intervals[task.id]
        values[f"xistart_{task.id}_{start}"] = 1.0
        values[f"xifinish_{task.id}_{finish}"] = 1.0
        for t in range(start, min(finish, horizon)):
            values[f"xi_{task.id}_{t}"] = 1.0
        values[f"ymk_{task.id}"] = float(finish - start)
        lateness = finish - task.deadline
        if mode is MilpMode.AMENDED:
            lateness = max(0, lateness)
        values[f"ylt_{task.id}"] = float(lateness)

    values["obj"] = sum(
        task.makespan_weight * values[f"ymk_{task.id}"]
        + task.lateness_weight * values[f"ylt_{task.id}"]
        for task in instance.tasks
    )
    return values


def render_solution_text(values: Mapping[str, float]) -> str:
    """Solver-output-shaped text: one "name value" line per variable."""
    return "".join(f"{name} {_num(value)}\n" for name, value in values.items())


# ---------------------------------------------------------------------------
# Solution import


@dataclass(frozen=True)
class ParityReport:
    """Comparison of an external solution against the evaluator.

    external_objective comes from the solution's own obj entry (or its
    makespan/lateness variables); internal_objective is the evaluator's
    clamped-lateness metric for the reconstructed starts. Parity is only
    meaningful for feasible schedules from the AMENDED model, so
    within_tolerance is None when the schedule is infeasible or no external
    objective was present.
    """

    feasible: bool
    violations: tuple[ConstraintViolation, ...]
    internal_objective: float
    external_objective: Optional[float]
    difference: Optional[float]
    within_tolerance: Optional[bool]
    tolerance: float = PARITY_TOLERANCE


@dataclass(frozen=True)
class ImportedSolution:
    assignment: ScheduleAssignment
    report: ParityReport


def parse_solution_text(text: str) -> dict[str, float]:
    """Parse "name value" lines; '#' starts a comment, blank lines skipped."""
    values: dict[str, float] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise SolutionImportError(
                "PARSE_ERROR", f"line {lineno}: expected 'name value', got {raw!r}"
            )
        name, value_text = parts
        try:
            value = float(value_text)
        except ValueError:
            raise SolutionImportError(
                "PARSE_ERROR", f"line {lineno}: bad numeric value {value_text!r}"
            ) from None
        values[name] = value
    return values


def import_solution(instance: Instance, text: str) -> ImportedSolution:
    """Reconstruct a schedule from solver output and report parity.

    Start indicators are read from xs_* entries (>= 0.5 counts as started);
    all binary families are checked for integrality first. Raises
    SolutionImportError with code NOT_INTEGRAL for fractional binaries and
    PARSE_ERROR for malformed text or a subtask without exactly one start.
    """
    values = parse_solution_text(text)

    for name, value in values.items():
        if name.startswith(_BINARY_PREFIXES):
            if min(abs(value), abs(value - 1.0)) > INTEGRALITY_TOLERANCE:
                raise SolutionImportError(
                    "NOT_INTEGRAL", f"binary variable {name} has fractional value {value}"
                )

    sub_tasks = {sub.id: task for task in instance.tasks for sub in task.subtasks}
    candidate_starts: dict[str, list[int]] = {sub_id: [] for sub_id in sub_tasks}
    for name, value in values.items():
        if not name.startswith("xs_"):
            continue
        body = name[len("xs_") :]
        sub_id, _, t_text = body.rpartition("_")
        if not sub_id or not t_text.isdigit():
            raise SolutionImportError("PARSE_ERROR", f"malformed start variable {name}")
        if sub_id not in sub_tasks:
            raise SolutionImportError("PARSE_ERROR", f"unknown subtask in variable {name}")
        t = int(t_text)
        if t >= instance.horizon_periods:
            raise SolutionImportError(
                "PARSE_ERROR", f"variable {name} addresses period {t} outside the horizon"
            )
        if value >= 0.5:
            candidate_starts[sub_id].append(t)

    starts: dict[str, int] = {}
    for sub_id, ts in candidate_starts.items():
        if len(ts) != 1:
            raise SolutionImportError(
                "PARSE_ERROR",
                f"subtask {sub_id} starts {len(ts)} times in the solution; expected exactly 1",
            )
        starts[sub_id] = ts[0]

    assignment = ScheduleAssignment(starts)
    violations = tuple(check_schedule(instance, assignment))
    feasible = not violations
    metrics = compute_metrics(instance, assignment, verify=False)

    external = values.get("obj")
    if external is None:
        ymk_names = [f"ymk_{task.id}" for task in instance.tasks]
        ylt_names = [f"ylt_{task.id}" for task in instance.tasks]
        if all(n in values for n in ymk_names + ylt_names):
            external = sum(
                task.makespan_weight * values[f"ymk_{task.id}"]
                + task.lateness_weight * values[f"ylt_{task.id}"]
                for task in instance.tasks
            )

    difference = None if external is None else abs(external - metrics.objective)
    within = None
    if feasible and difference is not None:
        within = difference <= PARITY_TOLERANCE
    report = ParityReport(
        feasible=feasible,
        violations=violations,
        internal_objective=metrics.objective,
        external_objective=external,
        difference=difference,
        within_tolerance=within,
    )
    return ImportedSolution(assignment, report)


# ---------------------------------------------------------------------------
# LP text parsing and row checking (for machine-checked round trips)


@dataclass(frozen=True)
class LpRow:
    name: str
    terms: tuple[tuple[float, str], ...]
    sense: str
    rhs: float

    def lhs_value(self, values: Mapping[str, float]) -> float:
        return sum(coef * values.get(var, 0.0) for coef, var in self.terms)

    def satisfied(self, values: Mapping[str, float], tol: float) -> bool:
        lhs = self.lhs_value(values)
        if self.sense == "=":
            return abs(lhs - self.rhs) <= tol
        if self.sense == "<=":
            return lhs <= self.rhs + tol
        return lhs >= self.rhs - tol


@dataclass(frozen=True)
class LpModel:
    objective: tuple[tuple[float, str], ...]
    rows: tuple[LpRow, ...]
    bounds: tuple[LpRow, ...]
    binaries: frozenset[str]

    def objective_value(self, values: Mapping[str, float]) -> float:
        return sum(coef * values.get(var, 0.0) for coef, var in self.objective)

    def violations(self, values: Mapping[str, float], tol: float = 1e-6) -> list[str]:
        """Names of all rows, bounds, and binary declarations the values
        violate; empty means the assignment satisfies the whole model."""
        bad = [row.name for row in self.rows if not row.satisfied(values, tol)]
        bad += [row.name for row in self.bounds if not row.satisfied(values, tol)]
        for name in sorted(self.binaries):
            value = values.get(name, 0.0)
            if min(abs(value), abs(value - 1.0)) > tol:
                bad.append(f"binary_{name}")
        return bad


_TOKEN = re.compile(
    r"(<=|>=|=)|([+-])|([A-Za-z][A-Za-z0-9_.]*)|((?:[0-9]+(?:\.[0-9]*)?|\.[0-9]+)(?:[eE][+-]?[0-9]+)?)"
)


def _scan_row(body: str, where: str) -> tuple[tuple[tuple[float, str], ...], Optional[str], Optional[float]]:
    terms: list[tuple[float, str]] = []
    sense: Optional[str] = None
    rhs: Optional[float] = None
    sign = 1.0
    coef: Optional[float] = None
    pos = 0
    while pos < len(body):
        if body[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(body, pos)
        if m is None:
            raise ValueError(f"{where}: cannot tokenize {body[pos:pos + 20]!r}")
        pos = m.end()
        sense_tok, sign_tok, name_tok, num_tok = m.groups()
        if sense_tok:
            sense = sense_tok
            sign, coef = 1.0, None
        elif sign_tok:
            sign = -sign if sign_tok == "-" else sign
        elif num_tok:
            value = sign * float(num_tok)
            if sense is not None:
                rhs = value
            else:
                coef = value
            sign = 1.0
        else:
            terms.append((coef if coef is not None else sign, name_tok))
            sign, coef = 1.0, None
    return tuple(terms), sense, rhs


def _parse_bound_line(line: str, index: int) -> Optional[LpRow]:
    tokens = line.split()
    if len(tokens) == 2 and tokens[1].lower() == "free":
        return None
    name = f"bound_{index}"
    if len(tokens) == 3 and tokens[1] in ("<=", ">=", "="):
        if tokens[0][0].isalpha():
            return LpRow(name, ((1.0, tokens[0]),), tokens[1], float(tokens[2]))
        flipped = {"<=": ">=", ">=": "<=", "=": "="}[tokens[1]]
        return LpRow(name, ((1.0, tokens[2]),), flipped, float(tokens[0]))
    if len(tokens) == 5 and tokens[1] == "<=" and tokens[3] == "<=":
        # lo <= name <= hi is represented by the tighter of the two rows it
        # implies; keep both as a pair under one name suffix.
        raise ValueError("two-sided bounds are not produced by this emitter")
    raise ValueError(f"unsupported bounds line: {line!r}")


def parse_lp(text: str) -> LpModel:
    """Parse the subset of LP format this module emits.

    Good enough to re-read our own files (and small hand-written ones) for
    row-by-row checking; not a general LP reader.
    """
    section = None
    objective: tuple[tuple[float, str], ...] = ()
    rows: list[LpRow] = []
    bounds: list[LpRow] = []
    binaries: set[str] = set()
    logical: list[tuple[str, str]] = []  # (name, body) in Subject To
    pending_obj: list[str] = []

    def flush_row(name: str, body: str) -> None:
        terms, sense, rhs = _scan_row(body, f"row {name}")
        if sense is None or rhs is None:
            raise ValueError(f"row {name} has no comparison")
        rows.append(LpRow(name, terms, sense, rhs))

    current_name: Optional[str] = None
    current_body: list[str] = []

    for raw in text.splitlines():
        if raw.startswith("\\"):
            continue
        stripped = raw.strip()
        lowered = stripped.lower()
        if lowered in ("minimize", "maximize", "subject to", "bounds", "binaries", "end"):
            if current_name is not None:
                logical.append((current_name, " ".join(current_body)))
                current_name, current_body = None, []
            section = lowered
            continue
        if not stripped:
            continue
        if section in ("minimize", "maximize"):
            pending_obj.append(stripped)
        elif section == "subject to":
            m = re.match(r"^([A-Za-z0-9_.]+):(.*)$", stripped)
            if m:
                if current_name is not None:
                    logical.append((current_name, " ".join(current_body)))
                current_name = m.group(1)
                current_body = [m.group(2)]
            else:
                if current_name is None:
                    raise ValueError(f"constraint continuation before any row: {raw!r}")
                current_body.append(stripped)
        elif section == "bounds":
            row = _parse_bound_line(stripped, len(bounds))
            if row is not None:
                bounds.append(row)
        elif section == "binaries":
            binaries.update(stripped.split())
        elif section == "end":
            raise ValueError(f"content after End: {raw!r}")
        else:
            raise ValueError(f"content before any section: {raw!r}")
    if current_name is not None:
        logical.append((current_name, " ".join(current_body)))

    obj_text = " ".join(pending_obj)
    obj_text = re.sub(r"^\s*[A-Za-z0-9_.]+:", "", obj_text)
    terms, sense, _ = _scan_row(obj_text, "objective")
    if sense is not None:
        raise ValueError("objective must not contain a comparison")
    objective = terms

    for name, body in logical:
        flush_row(name, body)

    return LpModel(objective, tuple(rows), tuple(bounds), frozenset(binaries))
