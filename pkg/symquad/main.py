from __future__ import annotations

import logging
from contextlib import asynccontextmanager

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from pydantic import ValidationError

from symquad.api.routes import router
from symquad.config import settings
from symquad.engine import ReportBuilder, ResourceError, SymquadError

logger = logging.getLogger(__name__)


@asynccontextmanager
async def lifespan(app: FastAPI):
    # ── startup ───────────────────────────────────────
    report_builder = ReportBuilder(settings.catalog_file, seed=settings.report_seed)
    app.state.report_builder = report_builder
    logger.info("symquad API started with %d catalogued families", len(report_builder.entries))

    yield

    # ── shutdown ──────────────────────────────────────
    logger.info("symquad API shut down")


app = FastAPI(title=settings.app_name, lifespan=lifespan)


@app.exception_handler(ResourceError)
async def _resource_error(request: Request, exc: ResourceError) -> JSONResponse:
    return JSONResponse(status_code=413, content={"detail": str(exc)})


@app.exception_handler(SymquadError)
async def _engine_error(request: Request, exc: SymquadError) -> JSONResponse:
    return JSONResponse(status_code=422, content={"detail": str(exc)})


@app.exception_handler(ValidationError)
async def _model_error(request: Request, exc: ValidationError) -> JSONResponse:
    return JSONResponse(status_code=422, content={"detail": str(exc)})


app.include_router(router)
