from __future__ import annotations

import logging
from typing import Any, Literal

from fastapi import APIRouter, Request
from pydantic import BaseModel

from symquad.config import settings
from symquad.engine import (
    InputError,
    alphas_half,
    closed_form_alphas,
    dedicated_family,
    family_names,
    fix_representation,
    implied_threshold,
    lift_function,
    lift_roundtrip,
    parity_3cube_degree_oracle,
    quadratize_family,
    quadratize_symmetric_fix,
    quadratize_symmetric_general,
    resolve_spec,
    solve_representation,
    verify_quadratization,
)
from symquad.engine.algebra import table_evaluator
from symquad.engine.families import THRESHOLD_FAMILIES
from symquad.engine.verify import parity_interpolant, top_coefficient
from symquad.models import MultilinearPoly, QuadForm, SymmetricSpec, format_rational

logger = logging.getLogger(__name__)

router = APIRouter()


# ── request bodies ────────────────────────────────────
# rationals arrive as "p/q" strings or integers; models are validated in the handlers


class TargetBody(BaseModel):
    family: str | None = None
    n: int | None = None
    t: int | None = None
    k: list[str | int] | None = None

    def spec(self) -> SymmetricSpec:
        return resolve_spec(self.family, self.n, self.t, self.k)


class RepresentBody(TargetBody):
    mode: Literal["general-eps", "closed-form", "half", "fix"] = "half"
    eps: list[str | int] | None = None


class QuadratizeBody(TargetBody):
    route: Literal["half", "fix"] = "half"


class VerifyBody(TargetBody):
    g: dict[str, Any]
    table: list[str | int] | None = None
    poly: dict[str, Any] | None = None


class LiftBody(BaseModel):
    f: dict[str, Any]
    roundtrip: bool = False


# ── routes ────────────────────────────────────────────


@router.get("/api/status")
async def get_status(request: Request) -> dict:
    catalog = getattr(request.app.state, "report_builder", None)
    return {
        "status": "running",
        "app": settings.app_name,
        "catalog_families": len(catalog.entries) if catalog else 0,
        "caps": {
            "max_sweep_vars": settings.max_sweep_vars,
            "max_table_vars": settings.max_table_vars,
            "max_lift_vars": settings.max_lift_vars,
            "max_construct_vars": settings.max_construct_vars,
        },
    }


@router.get("/api/families")
async def get_families() -> list[dict]:
    return [
        {
            "name": name,
            "needs_t": name in THRESHOLD_FAMILIES,
            "dedicated": dedicated_family(name) is not None,
        }
        for name in family_names()
    ]


# engine work is synchronous; plain def handlers run in the threadpool


@router.post("/api/represent")
def represent(body: RepresentBody) -> dict:
    spec = body.spec()
    if body.mode == "half":
        rep = alphas_half(spec)
    elif body.mode == "fix":
        rep = fix_representation(spec)
    elif body.eps is None:
        raise InputError(f"mode {body.mode} needs eps")
    elif body.mode == "closed-form":
        if len(body.eps) != 1:
            raise InputError("closed-form takes a single eps value")
        rep = closed_form_alphas(spec, body.eps[0])
    else:
        eps = body.eps * (spec.n + 1) if len(body.eps) == 1 else body.eps
        rep = solve_representation(spec, eps)
    return rep.model_dump(mode="json")


@router.post("/api/quadratize")
def quadratize(body: QuadratizeBody) -> dict:
    family = dedicated_family(body.family) if body.family is not None else None
    if family is not None:
        if body.n is None:
            raise InputError("a named family needs n")
        result = quadratize_family(family, n=body.n, t=implied_threshold(body.family, body.n, body.t))
    else:
        route = quadratize_symmetric_fix if body.route == "fix" else quadratize_symmetric_general
        result = route(body.spec())
    return result.model_dump(mode="json")


@router.post("/api/verify")
def verify(body: VerifyBody) -> dict:
    g = QuadForm.model_validate(body.g)
    if body.table is not None:
        if len(body.table) != 2**g.n:
            raise InputError(f"table needs 2^{g.n} = {2**g.n} values, got {len(body.table)}")
        target: Any = table_evaluator(body.table)
    elif body.poly is not None:
        target = MultilinearPoly.model_validate(body.poly)
    else:
        if body.family is not None and body.n is None:
            body = body.model_copy(update={"n": g.n})
        target = body.spec()
    return verify_quadratization(g, target).model_dump(mode="json")


@router.post("/api/lift")
def lift(body: LiftBody) -> dict:
    f = MultilinearPoly.model_validate(body.f)
    if body.roundtrip:
        return lift_roundtrip(f).model_dump(mode="json")
    return lift_function(f).model_dump(mode="json")


@router.get("/api/oracle/parity-degree")
def parity_degree() -> dict:
    p = parity_interpolant(3)
    return {
        "n": 3,
        "degree": parity_3cube_degree_oracle(),
        "top_coefficient": format_rational(top_coefficient(p)),
    }


@router.get("/api/report")
def get_report(request: Request, n_max: int | None = None) -> list[dict]:
    n_max = settings.report_n_max if n_max is None else n_max
    if not 1 <= n_max <= settings.max_sweep_vars:
        raise InputError(f"n_max must lie in 1..{settings.max_sweep_vars}")
    builder = request.app.state.report_builder
    return [row.model_dump(mode="json") for row in builder.run(n_max)]
