"""FastAPI application: thin HTTP routes over the handlers."""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import handlers, schemas
from .handlers import ServiceError


def create_app() -> FastAPI:
    app = FastAPI(
        title="maintsched",
        description="Weekly maintenance scheduling: greedy decoding, genetic "
        "search, exact solving, MILP export, scenario generation, and "
        "benchmarking over task/subtask instances.",
        version="1.0.0",
    )

    @app.exception_handler(ServiceError)
    async def service_error_handler(_: Request, exc: ServiceError) -> JSONResponse:
        return JSONResponse(status_code=exc.http_status, content={"error": exc.payload()})

    @app.get("/health", response_model=schemas.HealthResponse)
    def health() -> schemas.HealthResponse:
        return schemas.HealthResponse(status="ok")

    @app.post("/validate", response_model=schemas.ValidateResponse)
    def validate(request: schemas.ValidateRequest) -> schemas.ValidateResponse:
        return handlers.handle_validate(request)

    @app.post("/min-makespan", response_model=schemas.MinMakespanResponse)
    def min_makespan(request: schemas.MinMakespanRequest) -> schemas.MinMakespanResponse:
        return handlers.handle_min_makespan(request)

    @app.post("/decode", response_model=schemas.DecodeResponse)
    def decode(request: schemas.DecodeRequest) -> schemas.DecodeResponse:
        return handlers.handle_decode(request)

    @app.post("/solve-ga", response_model=schemas.SolveGaResponse)
    def solve_ga(request: schemas.SolveGaRequest) -> schemas.SolveGaResponse:
        return handlers.handle_solve_ga(request)

    @app.post("/solve-exact", response_model=schemas.SolveExactResponse)
    def solve_exact(request: schemas.SolveExactRequest) -> schemas.SolveExactResponse:
        return handlers.handle_solve_exact(request)

    @app.post("/export-milp", response_model=schemas.ExportMilpResponse)
    def export_milp(request: schemas.ExportMilpRequest) -> schemas.ExportMilpResponse:
        return handlers.handle_export_milp(request)

    @app.post("/import-solution", response_model=schemas.ImportSolutionResponse)
    def import_solution(request: schemas.ImportSolutionRequest) -> schemas.ImportSolutionResponse:
        return handlers.handle_import_solution(request)

    @app.post("/gen-scenarios", response_model=schemas.GenScenariosResponse)
    def gen_scenarios(request: schemas.GenScenariosRequest) -> schemas.GenScenariosResponse:
        return handlers.handle_gen_scenarios(request)

    @app.post("/bench", response_model=schemas.BenchResponse)
    def bench(request: schemas.BenchRequest) -> schemas.BenchResponse:
        return handlers.handle_bench(request)

    @app.post("/gantt", response_model=schemas.GanttResponse)
    def gantt(request: schemas.GanttRequest) -> schemas.GanttResponse:
        return handlers.handle_gantt(request)

    return app


app = create_app()
