from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field, model_validator

from symquad.models.rational import Rational


class SymmetricSpec(BaseModel):
    """Symmetric pseudo-Boolean function given by its weight-value vector k_0..k_n."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1)
    k: tuple[Rational, ...]

    @model_validator(mode="after")
    def _check_length(self) -> SymmetricSpec:
        if len(self.k) != self.n + 1:
            raise ValueError(f"k must have n+1={self.n + 1} entries, got {len(self.k)}")
        return self


class LiftSpec(BaseModel):
    """Symmetric function on N = 2^n - 1 variables that encodes an arbitrary f on n."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1)
    N: int = Field(ge=1)
    k: tuple[Rational, ...]
    block_map: tuple[tuple[int, int], ...]

    @model_validator(mode="after")
    def _check_blocks(self) -> LiftSpec:
        if self.N != 2**self.n - 1:
            raise ValueError(f"N must be 2^n - 1 = {2**self.n - 1}")
        if len(self.k) != self.N + 1:
            raise ValueError(f"k must have N+1={self.N + 1} entries")
        expected = tuple((2 ** (j - 1), 2**j - 1) for j in range(1, self.n + 1))
        if self.block_map != expected:
            raise ValueError("block_map must be [2^(j-1), 2^j - 1] for j = 1..n")
        return self

    def to_symmetric(self) -> SymmetricSpec:
        return SymmetricSpec(n=self.N, k=self.k)
