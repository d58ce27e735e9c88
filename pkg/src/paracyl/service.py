"""HTTP service wrapping the evaluator.

Endpoints mirror the CLI surface one to one: POST /eval for a single point,
POST /table for a cartesian grid, POST /selftest to replay the embedded
reference checks.  All evaluation is pure and stateless, so the service can
run any number of workers.  The CLI reuses these request/response models and
handlers in process; with --server it sends them over the wire instead.
"""

from __future__ import annotations

from typing import List, Literal, Optional

from fastapi import FastAPI
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from . import __version__
from .dispatch import dispatch
from .errors import ConvergenceError, DomainError, ParacylError, RangeError, RegimeError
from .reference_tables import selftest
from .results import Regime

FuncName = Literal["U", "V", "W"]
RegimeName = Literal["auto", "series", "asymptotic", "closed_form"]

_REGIMES = {
    "auto": None,
    "series": Regime.MODERATE_SERIES,
    "asymptotic": Regime.LARGE_ARG_ASYMPTOTIC,
    "closed_form": Regime.CLOSED_FORM,
}


class EvalRequest(BaseModel):
    func: FuncName
    a: float
    x: float
    regime: RegimeName = "auto"


class EvalResponse(BaseModel):
    func: FuncName
    a: float
    x: float
    value: float
    derivative: float
    accuracy_estimate: float
    regime: str


class TableRequest(BaseModel):
    func: FuncName
    a: List[float] = Field(min_length=1)
    x: List[float] = Field(min_length=1)
    regime: RegimeName = "auto"


class TableResponse(BaseModel):
    func: FuncName
    rows: List[EvalResponse]


class CheckReport(BaseModel):
    name: str
    passed: bool
    max_rel_error: float


class SelftestRequest(BaseModel):
    oracle_file: Optional[str] = None


class SelftestResponse(BaseModel):
    ok: bool
    fixture_count: int
    elapsed_seconds: float
    checks: List[CheckReport]
    errata_notes: List[str]


def eval_point(req: EvalRequest) -> EvalResponse:
    r = dispatch(req.func, req.a, req.x, _REGIMES[req.regime])
    return EvalResponse(
        func=req.func,
        a=req.a,
        x=req.x,
        value=r.value,
        derivative=r.derivative,
        accuracy_estimate=r.accuracy_estimate,
        regime=r.regime.value,
    )


def eval_table(req: TableRequest) -> TableResponse:
    rows = [
        eval_point(EvalRequest(func=req.func, a=a, x=x, regime=req.regime))
        for a in req.a
        for x in req.x
    ]
    return TableResponse(func=req.func, rows=rows)


def run_selftest(req: SelftestRequest) -> SelftestResponse:
    report = selftest(oracle_file=req.oracle_file)
    return SelftestResponse(
        ok=report.ok,
        fixture_count=report.fixture_count,
        elapsed_seconds=report.elapsed_seconds,
        checks=[
            CheckReport(name=c.name, passed=c.passed, max_rel_error=c.max_rel_error)
            for c in report.checks
        ],
        errata_notes=report.errata_notes,
    )


def create_app() -> FastAPI:
    app = FastAPI(title="paracyl", version=__version__)

    @app.exception_handler(ParacylError)
    async def _eval_error(_, exc: ParacylError):
        kind = {
            DomainError: "domain_error",
            RangeError: "range_error",
            RegimeError: "regime_error",
            ConvergenceError: "convergence_error",
        }.get(type(exc), "evaluation_error")
        return JSONResponse(
            status_code=400, content={"detail": {"type": kind, "message": str(exc)}}
        )

    @app.get("/health")
    async def health():
        return {"status": "ok", "version": __version__}

    @app.post("/eval", response_model=EvalResponse)
    def eval_endpoint(req: EvalRequest):
        return eval_point(req)

    @app.post("/table", response_model=TableResponse)
    def table_endpoint(req: TableRequest):
        return eval_table(req)

    @app.post("/selftest", response_model=SelftestResponse)
    def selftest_endpoint(req: SelftestRequest):
        return run_selftest(req)

    return app


app = create_app()
