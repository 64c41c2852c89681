from __future__ import annotations

from enum import StrEnum

from pydantic import BaseModel, ConfigDict, Field, computed_field

from symquad.models.polynomial import QuadForm
from symquad.models.rational import Rational


class QuadratizationFamily(StrEnum):
    GENERAL_SYMMETRIC = "general_symmetric"
    GENERAL_SYMMETRIC_FIX = "general_symmetric_fix"
    POS_MONOMIAL = "pos_monomial"
    POS_MONOMIAL_SPLIT = "pos_monomial_split"
    NEG_MONOMIAL_STANDARD = "neg_monomial_standard"
    NEG_MONOMIAL_HALF = "neg_monomial_half"
    NEG_MONOMIAL_ASYMMETRIC = "neg_monomial_asymmetric"
    T_OUT_OF_N = "t_out_of_n"
    EXACT_T = "exact_t"
    PARITY = "parity"
    PARITY_COMPLEMENT = "parity_complement"
    FROM_REP = "from_rep"


class QuadratizationResult(BaseModel):
    """A quadratization plus the bookkeeping the constructions promise."""

    model_config = ConfigDict(frozen=True)

    g: QuadForm
    family: QuadratizationFamily
    aux_count: int = Field(ge=0)
    paper_bound: int = Field(ge=0)
    y_linear: bool
    x_symmetric: bool

    @computed_field
    @property
    def within_bound(self) -> bool:
        return self.aux_count <= self.paper_bound


class Counterexample(BaseModel):
    model_config = ConfigDict(frozen=True)

    x: tuple[int, ...]
    expected: Rational
    got: Rational


class VerifyReport(BaseModel):
    """Outcome of certifying g against f on every vertex of the cube."""

    model_config = ConfigDict(frozen=True)

    passed: bool
    counterexample: Counterexample | None = None
    checked_points: int = Field(ge=0)
    y_linear: bool
    x_symmetric: bool
    global_min_match: bool
