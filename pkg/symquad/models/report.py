from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field

from symquad.models.result import QuadratizationFamily


class CatalogEntry(BaseModel):
    """One family swept by the report, as declared in catalog/report.yaml."""

    family: QuadratizationFamily
    description: str = ""
    n_min: int = Field(default=1, ge=1)
    sweep_t: bool = False
    odd_n_only: bool = False


class ReportRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    family: QuadratizationFamily
    n: int
    t: int | None = None
    aux_count: int
    paper_bound: int
    verified: bool
