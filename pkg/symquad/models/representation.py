from __future__ import annotations

from enum import StrEnum
from fractions import Fraction

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from symquad.models.rational import Rational


class AlphaTerm(BaseModel):
    """One summand alpha * floor(i - eps - l)^- of a negative-part representation."""

    model_config = ConfigDict(frozen=True)

    i: int = Field(ge=0)
    alpha: Rational
    eps: Rational

    @field_validator("eps")
    @classmethod
    def _eps_range(cls, value: Fraction) -> Fraction:
        if not 0 < value <= 1:
            raise ValueError(f"eps must lie in (0, 1], got {value}")
        return value


class NegPartRep(BaseModel):
    """affine_const + affine_linear*l + affine_quadratic*l^2 + sum alpha_i*min(i - eps_i - l, 0)."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1)
    affine_const: Rational = Fraction(0)
    affine_linear: Rational = Fraction(0)
    affine_quadratic: Rational = Fraction(0)
    alphas: tuple[AlphaTerm, ...]

    @model_validator(mode="after")
    def _check_indices(self) -> NegPartRep:
        if [t.i for t in self.alphas] != list(range(self.n + 1)):
            raise ValueError(f"alphas must list i = 0..{self.n} in order")
        return self

    def alpha(self, i: int) -> Fraction:
        return self.alphas[i].alpha

    def eps(self, i: int) -> Fraction:
        return self.alphas[i].eps


class IdentityKind(StrEnum):
    E = "E"
    EPRIME = "Eprime"
    EDOUBLEPRIME = "Edoubleprime"


class ZeroIdentity(BaseModel):
    """c2*l^2 + c1*l + sum_i coef_i*min(i - eps - l, 0), identically zero on 0..n."""

    model_config = ConfigDict(frozen=True)

    kind: IdentityKind
    n: int = Field(ge=1)
    quadratic_in_l: tuple[Rational, Rational]
    eps: Rational
    negpart_coefs: dict[int, Rational]
