"""Command-line front end.

Every command builds a service request and sends it either to the
in-process handlers (default) or to a running HTTP server (--server URL),
so the CLI and the service cannot disagree about behavior. Results print
to standard output (or --out); diagnostics go to standard error.

Exit codes: 0 success, 1 no feasible schedule, 2 bad input or usage.
Commands that take --seed print the effective seed to standard error, and
draw one from system entropy when the flag is omitted, so any run can be
reproduced exactly.
"""

from __future__ import annotations

import json
import re
import secrets
import sys
from pathlib import Path
from typing import Any, Optional

import click
import httpx
from pydantic import BaseModel

from .model import canonical_json_bytes
from .service import handlers, schemas

EXIT_OK = 0
EXIT_INFEASIBLE = 1
EXIT_INPUT = 2

_SCENARIO_FILE = re.compile(
    r"^scenario_(?P<pi>[0-9]+(?:\.[0-9]+)?)_(?P<tightness>tight|medium|loose)_(?P<k>[0-9]+)\.json$"
)

_HANDLERS = {
    "/validate": (handlers.handle_validate, schemas.ValidateRequest),
    "/min-makespan": (handlers.handle_min_makespan, schemas.MinMakespanRequest),
    "/decode": (handlers.handle_decode, schemas.DecodeRequest),
    "/solve-ga": (handlers.handle_solve_ga, schemas.SolveGaRequest),
    "/solve-exact": (handlers.handle_solve_exact, schemas.SolveExactRequest),
    "/export-milp": (handlers.handle_export_milp, schemas.ExportMilpRequest),
    "/import-solution": (handlers.handle_import_solution, schemas.ImportSolutionRequest),
    "/gen-scenarios": (handlers.handle_gen_scenarios, schemas.GenScenariosRequest),
    "/bench": (handlers.handle_bench, schemas.BenchRequest),
    "/gantt": (handlers.handle_gantt, schemas.GanttRequest),
}


def _fail(message: str, code: int) -> "SystemExit":
    click.echo(message, err=True)
    raise SystemExit(code)


def _call(ctx: click.Context, path: str, request: BaseModel) -> dict[str, Any]:
    server: Optional[str] = ctx.obj.get("server")
    if server is None:
        handler, _ = _HANDLERS[path]
        try:
            response = handler(request)
        except handlers.ServiceError as exc:
            for item in exc.details:
                click.echo(f"  {item}", err=True)
            exit_code = EXIT_INFEASIBLE if exc.kind == "infeasible" else EXIT_INPUT
            raise _fail(f"error ({exc.code}): {exc}", exit_code)
        return response.model_dump(mode="json")

    url = server.rstrip("/") + path
    try:
        reply = httpx.post(url, json=request.model_dump(mode="json"), timeout=600.0)
    except httpx.HTTPError as exc:
        raise _fail(f"error contacting server {url}: {exc}", EXIT_INPUT)
    if reply.status_code >= 400:
        try:
            error = reply.json().get("error", reply.json())
        except ValueError:
            error = {"message": reply.text}
        for item in error.get("details", []):
            click.echo(f"  {item}", err=True)
        code = error.get("code", reply.status_code)
        exit_code = EXIT_INFEASIBLE if reply.status_code == 409 else EXIT_INPUT
        raise _fail(f"error ({code}): {error.get('message', '')}", exit_code)
    return reply.json()


def _read_json(path: str, what: str) -> dict[str, Any]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _fail(f"cannot read {what} {path}: {exc}", EXIT_INPUT)
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise _fail(
            f"{what} {path} is not valid JSON (line {exc.lineno}, column {exc.colno}): {exc.msg}",
            EXIT_INPUT,
        )
    if not isinstance(document, dict):
        raise _fail(f"{what} {path} must contain a JSON object", EXIT_INPUT)
    return document


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        click.echo(text, nl=False)
    else:
        Path(out).write_text(text, encoding="utf-8")
        click.echo(f"wrote {out}", err=True)


def _emit_json(document: dict[str, Any], out: Optional[str]) -> None:
    _emit(json.dumps(document, indent=2) + "\n", out)


def _effective_seed(seed: Optional[int]) -> int:
    if seed is None:
        seed = secrets.randbits(32)
    click.echo(f"seed: {seed}", err=True)
    return seed


@click.group()
@click.option("--server", metavar="URL", default=None, help="Send requests to a running maintsched server instead of executing in-process.")
@click.pass_context
def cli(ctx: click.Context, server: Optional[str]) -> None:
    """Weekly maintenance scheduling tools."""
    ctx.ensure_object(dict)
    ctx.obj["server"] = server


@cli.command()
@click.option("--instance", "instance_path", required=True, type=click.Path(), help="Instance JSON file.")
@click.pass_context
def validate(ctx: click.Context, instance_path: str) -> None:
    """Check an instance file; exit 2 with the issues when invalid."""
    document = _read_json(instance_path, "instance")
    response = _call(ctx, "/validate", schemas.ValidateRequest(instance=document))
    if not response["valid"]:
        for issue in response["issues"]:
            subject = f" [{issue['subject']}]" if issue["subject"] else ""
            click.echo(f"{issue['code']}{subject}: {issue['message']}", err=True)
        raise SystemExit(EXIT_INPUT)
    _emit_json({"valid": True}, None)


@cli.command("min-makespan")
@click.option("--instance", "instance_path", required=True, type=click.Path())
@click.pass_context
def min_makespan_cmd(ctx: click.Context, instance_path: str) -> None:
    """Critical-path length per task and the weighted cost lower bound."""
    document = _read_json(instance_path, "instance")
    response = _call(ctx, "/min-makespan", schemas.MinMakespanRequest(instance=document))
    _emit_json(response, None)


@cli.command()
@click.option("--instance", "instance_path", required=True, type=click.Path())
@click.option("--order", required=True, help="Comma-separated task ids, e.g. 'task2,task1'.")
@click.option("--out", default=None, type=click.Path(), help="Write the schedule JSON here instead of stdout.")
@click.pass_context
def decode(ctx: click.Context, instance_path: str, order: str, out: Optional[str]) -> None:
    """Greedy-decode a task order into a schedule."""
    document = _read_json(instance_path, "instance")
    ids = [token.strip() for token in order.split(",") if token.strip()]
    response = _call(ctx, "/decode", schemas.DecodeRequest(instance=document, order=ids))
    if not response["feasible"]:
        raise _fail(
            f"infeasible: could not place subtask {response['blocked_subtask']}",
            EXIT_INFEASIBLE,
        )
    _emit_json(response["schedule"], out)


@cli.command("solve-ga")
@click.option("--instance", "instance_path", required=True, type=click.Path())
@click.option("--seed", type=int, default=None, help="RNG seed; drawn from entropy when omitted.")
@click.option("--pop", "population", type=int, default=100, show_default=True)
@click.option("--gens", "generations", type=int, default=60, show_default=True)
@click.option("--mutation", type=float, default=0.001, show_default=True)
@click.option("--elite", type=int, default=1, show_default=True)
@click.option("--fitness", type=click.Choice(["linear", "inverse"]), default="linear", show_default=True)
@click.option("--workers", type=int, default=1, show_default=True, help="Decode worker threads; does not change results.")
@click.option("--out", default=None, type=click.Path())
@click.pass_context
def solve_ga(
    ctx: click.Context,
    instance_path: str,
    seed: Optional[int],
    population: int,
    generations: int,
    mutation: float,
    elite: int,
    fitness: str,
    workers: int,
    out: Optional[str],
) -> None:
    """Genetic search for a low-cost schedule."""
    document = _read_json(instance_path, "instance")
    effective = _effective_seed(seed)
    response = _call(
        ctx,
        "/solve-ga",
        schemas.SolveGaRequest(
            instance=document,
            seed=effective,
            population_size=population,
            generations=generations,
            mutation_rate=mutation,
            elite_count=elite,
            fitness=fitness,  # type: ignore[arg-type]
            workers=workers,
        ),
    )
    _emit_json(response["result"], out)
    if not response["feasible"]:
        raise _fail("no feasible schedule found by any chromosome", EXIT_INFEASIBLE)


@cli.command("solve-exact")
@click.option("--instance", "instance_path", required=True, type=click.Path())
@click.option("--node-budget", type=int, default=1_000_000, show_default=True)
@click.option("--out", default=None, type=click.Path())
@click.pass_context
def solve_exact_cmd(ctx: click.Context, instance_path: str, node_budget: int, out: Optional[str]) -> None:
    """Prove an optimal schedule by branch and bound (small instances)."""
    document = _read_json(instance_path, "instance")
    response = _call(
        ctx, "/solve-exact", schemas.SolveExactRequest(instance=document, node_budget=node_budget)
    )
    _emit_json(response, out)
    if not response["feasible"]:
        raise _fail(f"no schedule: {response['status']}", EXIT_INFEASIBLE)


@cli.command("export-milp")
@click.option("--instance", "instance_path", required=True, type=click.Path())
@click.option("--mode", type=click.Choice(["paper", "amended"]), default="amended", show_default=True)
@click.option("--max-variables", type=int, default=None, help="Override the model size cap.")
@click.option("--out", default=None, type=click.Path())
@click.pass_context
def export_milp(
    ctx: click.Context, instance_path: str, mode: str, max_variables: Optional[int], out: Optional[str]
) -> None:
    """Write the LP-format model for an external solver."""
    document = _read_json(instance_path, "instance")
    response = _call(
        ctx,
        "/export-milp",
        schemas.ExportMilpRequest(instance=document, mode=mode, max_variables=max_variables),  # type: ignore[arg-type]
    )
    click.echo(f"variables: {response['variables']}", err=True)
    _emit(response["lp_text"], out)


@cli.command("import-solution")
@click.option("--instance", "instance_path", required=True, type=click.Path())
@click.option("--solution", "solution_path", required=True, type=click.Path(), help="Solver output: 'name value' lines.")
@click.option("--out", default=None, type=click.Path())
@click.pass_context
def import_solution_cmd(
    ctx: click.Context, instance_path: str, solution_path: str, out: Optional[str]
) -> None:
    """Rebuild a schedule from solver output and report objective parity."""
    document = _read_json(instance_path, "instance")
    try:
        solution_text = Path(solution_path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _fail(f"cannot read solution {solution_path}: {exc}", EXIT_INPUT)
    response = _call(
        ctx,
        "/import-solution",
        schemas.ImportSolutionRequest(instance=document, solution_text=solution_text),
    )
    _emit_json(response, out)
    if not response["report"]["feasible"]:
        raise _fail("imported solution violates the instance constraints", EXIT_INFEASIBLE)


@cli.command("gen-scenarios")
@click.option("--template", "template_path", default=None, type=click.Path(), help="Template instance JSON; the built-in desk template when omitted.")
@click.option("--pi", type=float, default=1.0, show_default=True, help="Deadline tightness multiplier.")
@click.option("--tightness", type=click.Choice(["tight", "medium", "loose"]), default="tight", show_default=True)
@click.option("--count", type=int, default=1, show_default=True)
@click.option("--seed", type=int, default=None)
@click.option("--out", "out_dir", default=None, type=click.Path(), help="Directory for scenario files; JSON to stdout when omitted.")
@click.pass_context
def gen_scenarios(
    ctx: click.Context,
    template_path: Optional[str],
    pi: float,
    tightness: str,
    count: int,
    seed: Optional[int],
    out_dir: Optional[str],
) -> None:
    """Sample benchmark scenarios from a template."""
    template = None if template_path is None else _read_json(template_path, "template")
    effective = _effective_seed(seed)
    response = _call(
        ctx,
        "/gen-scenarios",
        schemas.GenScenariosRequest(
            template=template,
            pi=pi,
            tightness=tightness,  # type: ignore[arg-type]
            count=count,
            seed=effective,
        ),
    )
    if out_dir is None:
        _emit_json(response, None)
        return
    directory = Path(out_dir)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for item in response["scenarios"]:
        target = directory / item["filename"]
        target.write_bytes(canonical_json_bytes(item["instance"]))
        written.append(str(target))
    _emit_json({"written": written}, None)


@cli.command()
@click.option("--scenarios", "scenario_dir", required=True, type=click.Path(), help="Directory of scenario_*.json files from gen-scenarios.")
@click.option("--methods", default="GA_LINEAR,GA_INVERSE,HEURISTIC_READY_SORT", show_default=True, help="Comma-separated method list.")
@click.option("--seed", type=int, default=None)
@click.option("--pop", "population", type=int, default=100, show_default=True)
@click.option("--gens", "generations", type=int, default=60, show_default=True)
@click.option("--mutation", type=float, default=0.001, show_default=True)
@click.option("--elite", type=int, default=1, show_default=True)
@click.option("--workers", type=int, default=1, show_default=True)
@click.option("--out", "out_dir", default=None, type=click.Path(), help="Directory for report.csv and aggregates.csv; rows CSV to stdout when omitted.")
@click.pass_context
def bench(
    ctx: click.Context,
    scenario_dir: str,
    methods: str,
    seed: Optional[int],
    population: int,
    generations: int,
    mutation: float,
    elite: int,
    workers: int,
    out_dir: Optional[str],
) -> None:
    """Run scheduling methods over a scenario batch and report gaps."""
    directory = Path(scenario_dir)
    if not directory.is_dir():
        raise _fail(f"--scenarios {scenario_dir} is not a directory", EXIT_INPUT)
    cases = []
    for path in sorted(directory.glob("scenario_*.json")):
        match = _SCENARIO_FILE.match(path.name)
        if match is None:
            raise _fail(f"scenario file name not understood: {path.name}", EXIT_INPUT)
        cases.append(
            schemas.BenchCaseModel(
                scenario_id=path.stem,
                pi=float(match.group("pi")),
                tightness=match.group("tightness"),  # type: ignore[arg-type]
                instance=_read_json(str(path), "scenario"),
            )
        )
    if not cases:
        raise _fail(f"no scenario_*.json files in {scenario_dir}", EXIT_INPUT)
    method_list = [token.strip() for token in methods.split(",") if token.strip()]
    effective = _effective_seed(seed)
    response = _call(
        ctx,
        "/bench",
        schemas.BenchRequest(
            cases=cases,
            methods=method_list,  # type: ignore[arg-type]
            seed=effective,
            ga_population=population,
            ga_generations=generations,
            ga_mutation_rate=mutation,
            ga_elite_count=elite,
            workers=workers,
        ),
    )
    for skip in response["skipped"]:
        click.echo(
            f"skipped {skip['method']} on {skip['scenario_id']}: {skip['reason']}", err=True
        )
    if out_dir is None:
        _emit(response["csv"], None)
        return
    directory = Path(out_dir)
    directory.mkdir(parents=True, exist_ok=True)
    (directory / "report.csv").write_text(response["csv"], encoding="utf-8")
    (directory / "aggregates.csv").write_text(response["aggregates_csv"], encoding="utf-8")
    _emit_json({"written": [str(directory / "report.csv"), str(directory / "aggregates.csv")]}, None)


@cli.command()
@click.option("--instance", "instance_path", required=True, type=click.Path())
@click.option("--schedule", "schedule_path", required=True, type=click.Path(), help="Schedule JSON with a 'starts' object (decode/solve output).")
@click.option("--out", default=None, type=click.Path())
@click.pass_context
def gantt(ctx: click.Context, instance_path: str, schedule_path: str, out: Optional[str]) -> None:
    """Render a schedule as an SVG chart."""
    document = _read_json(instance_path, "instance")
    schedule = _read_json(schedule_path, "schedule")
    starts = schedule.get("starts")
    if not isinstance(starts, dict):
        raise _fail(f"schedule {schedule_path} has no 'starts' object", EXIT_INPUT)
    response = _call(ctx, "/gantt", schemas.GanttRequest(instance=document, starts=starts))
    _emit(response["svg"], out)


@cli.command()
@click.option("--host", default="127.0.0.1", show_default=True, help="Interface to bind.")
@click.option("--port", default=8000, show_default=True, type=int, help="Port to listen on.")
def serve(host: str, port: int) -> None:
    """Run the HTTP scheduling service."""
    import uvicorn

    from .service.app import create_app

    uvicorn.run(create_app(), host=host, port=port)


def main() -> None:
    cli(obj={})


if __name__ == "__main__":
    main()
