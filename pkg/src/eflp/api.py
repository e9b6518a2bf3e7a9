"""HTTP front end: a thin FastAPI wrapper around the service handlers."""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import service
from .fixpoint import NonConvergenceError

app = FastAPI(
    title="eflp",
    description=(
        "Kripke-Kleene, well-founded, and stable semantics for extended fuzzy "
        "logic programs, with dialect translations and oracle equivalence checks."
    ),
    version="0.1.0",
)


@app.exception_handler(service.InputError)
async def _input_error(_: Request, exc: service.InputError) -> JSONResponse:
    return JSONResponse(
        status_code=400,
        content={"error_kind": "input", "detail": str(exc)},
    )


@app.exception_handler(NonConvergenceError)
async def _non_convergence(_: Request, exc: NonConvergenceError) -> JSONResponse:
    return JSONResponse(
        status_code=400,
        content={"error_kind": "non-convergence", "detail": str(exc)},
    )


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/solve", response_model=service.SolveResponse, response_model_exclude_none=True)
def solve(request: service.SolveRequest) -> service.SolveResponse:
    return service.solve(request)


@app.post(
    "/translate",
    response_model=service.TranslateResponse,
    response_model_exclude_none=True,
)
def translate(request: service.TranslateRequest) -> service.TranslateResponse:
    return service.translate(request)


@app.post(
    "/oracle-compare",
    response_model=service.OracleCompareResponse,
)
def oracle_compare(
    request: service.OracleCompareRequest,
) -> service.OracleCompareResponse:
    return service.oracle_compare(request)
