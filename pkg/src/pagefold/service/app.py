"""FastAPI service exposing the fold toolkit.

Endpoints mirror the CLI one-to-one: /solve and /critical return JSON,
/curve returns CSV text, /render returns an SVG document, /verify runs the
self-check suite.  Invalid argument values map to HTTP 400 (bad request
shape to FastAPI's usual 422); internal solver inconsistencies surface as
500.
"""

from __future__ import annotations

import math

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, Response

from .. import __version__, checks, curves, optimize, render
from ..formulas import rect_case2_optimum
from ..geometry import FoldCase, FoldParams, PageSpec, apply_fold_params
from .schemas import (
    CheckOutcome,
    CriticalReport,
    CurveRequest,
    RenderRequest,
    ServiceInfo,
    SolveReport,
    SolveRequest,
    VerifyReport,
    VerifyRequest,
)


def solve(aspect: float, constrained: bool, with_oracle: bool = False,
          oracle_n: int = 500) -> SolveReport:
    """Compute the optimal fold report for one page."""
    if constrained:
        phase = optimize.rect_constrained_optimum(aspect)
        case, a, b = FoldCase.CASE2, phase.a_opt, phase.b_opt
        regime = phase.regime
    else:
        opt = rect_case2_optimum(aspect)
        case, a, b = opt.case, opt.a, opt.b
        regime = None
    outcome = apply_fold_params(PageSpec(aspect), FoldParams(case, a, b))
    oracle_excess = None
    if with_oracle:
        oracle_excess = optimize.grid_oracle(aspect, constrained, oracle_n).excess
    return SolveReport(
        aspect=aspect,
        constrained=constrained,
        case=int(case),
        a=a,
        b=b,
        excess=outcome.excess,
        x_e=outcome.x_e,
        y_e=outcome.y_e,
        regime=regime,
        oracle_excess=oracle_excess,
    )


def build_curve(req: CurveRequest) -> str:
    if req.kind == "eb":
        return curves.eb_csv(req.samples)
    if req.kind == "transition":
        aspects = req.aspects or list(curves.DEFAULT_TRANSITION_ASPECTS)
        return curves.transition_csv(aspects, req.samples)
    if req.kind == "phase":
        return curves.phase_csv(req.from_aspect, req.to_aspect, req.samples)
    a_values = req.a_values or list(curves.DEFAULT_SUMMARY_A_VALUES)
    return curves.summary_csv(a_values, req.constrained, req.samples)


def create_app() -> FastAPI:
    app = FastAPI(title="pagefold", version=__version__)

    @app.exception_handler(ValueError)
    async def _invalid_argument(request: Request, exc: ValueError) -> JSONResponse:
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.get("/", response_model=ServiceInfo)
    def info() -> ServiceInfo:
        return ServiceInfo(name="pagefold", version=__version__)

    @app.post("/solve", response_model=SolveReport)
    def solve_endpoint(req: SolveRequest) -> SolveReport:
        return solve(req.aspect, req.constrained, req.with_oracle, req.oracle_n)

    @app.post("/curve")
    def curve_endpoint(req: CurveRequest) -> Response:
        return Response(content=build_curve(req), media_type="text/csv")

    @app.post("/render")
    def render_endpoint(req: RenderRequest) -> Response:
        svg = render.render_fold_svg(req.aspect, FoldParams(FoldCase(req.case), req.a, req.b))
        return Response(content=svg, media_type="image/svg+xml")

    @app.post("/verify", response_model=VerifyReport)
    def verify_endpoint(req: VerifyRequest) -> VerifyReport:
        results = checks.run_checks(req.level)
        return VerifyReport(
            level=req.level,
            passed=all(r.passed for r in results),
            checks=[
                CheckOutcome(name=r.name, passed=r.passed, detail=r.detail)
                for r in results
            ],
        )

    @app.get("/critical", response_model=CriticalReport)
    def critical_endpoint(tol: float = 1e-6) -> CriticalReport:
        value = optimize.critical_aspect(tol)
        closed_form = (1.0 + math.sqrt(2.0)) / 2.0
        return CriticalReport(
            critical_aspect=value,
            tol=tol,
            closed_form_value=closed_form,
            matches_closed_form=abs(value - closed_form) <= 2.0 * tol,
        )

    return app


app = create_app()
