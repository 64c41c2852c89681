from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Any, Iterable

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    FieldSerializationInfo,
    field_serializer,
    field_validator,
    model_validator,
)

from symquad.models.rational import Rational, to_rational

Monomial = tuple[str, ...]

_VAR_RE = re.compile(r"^([xy])([1-9]\d*)$")


# ── variable tokens ───────────────────────────────────


@lru_cache(maxsize=4096)
def parse_var(token: str) -> tuple[str, int]:
    """Split ``"x3"`` into ``("x", 3)``."""
    match = _VAR_RE.match(token)
    if match is None:
        raise ValueError(f"invalid variable token: {token!r}")
    return match.group(1), int(match.group(2))


def xvar(i: int) -> str:
    return f"x{i}"


def yvar(i: int) -> str:
    return f"y{i}"


def _var_order(token: str) -> tuple[int, int]:
    tag, idx = parse_var(token)
    return (0 if tag == "x" else 1, idx)


def monomial_order(mono: Monomial) -> tuple[int, tuple[tuple[int, int], ...]]:
    return len(mono), tuple(_var_order(v) for v in mono)


def normalize_monomial(tokens: Iterable[str]) -> Monomial:
    # v*v == v on {0,1}
    return tuple(sorted(set(tokens), key=_var_order))


def canonical_terms(items: Iterable[tuple[Iterable[str], Any]]) -> dict[Monomial, Fraction]:
    """Merge duplicate monomials, drop zero coefficients and sort by (degree, indices)."""
    merged: dict[Monomial, Fraction] = {}
    for tokens, coef in items:
        mono = normalize_monomial(tokens)
        merged[mono] = merged.get(mono, Fraction(0)) + to_rational(coef)
    return {
        mono: merged[mono]
        for mono in sorted(merged, key=monomial_order)
        if merged[mono] != 0
    }


def _term_items(value: Any) -> Iterable[tuple[Iterable[str], Any]]:
    if isinstance(value, dict):
        return list(value.items())
    items: list[tuple[Iterable[str], Any]] = []
    for entry in value:
        if isinstance(entry, dict):
            items.append((entry["vars"], entry["coef"]))
        else:
            vars_, coef = entry
            items.append((vars_, coef))
    return items


def _serialize_terms(terms: dict, info: FieldSerializationInfo, render) -> list[dict]:
    as_json = info.mode_is_json()
    return [
        {"vars": render(mono), "coef": str(coef) if as_json else coef}
        for mono, coef in terms.items()
    ]


# ── models ────────────────────────────────────────────


class MultilinearPoly(BaseModel):
    """Multilinear polynomial over x_1..x_n, keyed by sorted index tuples."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=0)
    terms: dict[tuple[int, ...], Rational] = Field(default_factory=dict)

    @field_validator("terms", mode="before")
    @classmethod
    def _canonical(cls, value: Any) -> dict[tuple[int, ...], Fraction]:
        items = []
        for key, coef in _term_items(value):
            tokens = [xvar(k) if isinstance(k, int) else k for k in key]
            for token in tokens:
                if parse_var(token)[0] != "x":
                    raise ValueError("multilinear polynomials range over x variables only")
            items.append((tokens, coef))
        return {
            tuple(parse_var(t)[1] for t in mono): coef
            for mono, coef in canonical_terms(items).items()
        }

    @model_validator(mode="after")
    def _check_indices(self) -> MultilinearPoly:
        for mono in self.terms:
            if any(i > self.n for i in mono):
                raise ValueError(f"monomial {mono} uses a variable beyond n={self.n}")
        return self

    @field_serializer("terms")
    def _dump_terms(self, terms: dict, info: FieldSerializationInfo) -> list[dict]:
        return _serialize_terms(terms, info, lambda mono: [xvar(i) for i in mono])

    @property
    def degree(self) -> int:
        return max((len(m) for m in self.terms), default=0)


class QuadForm(BaseModel):
    """Degree <= 2 polynomial over original variables x and auxiliaries y."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=0)
    m: int = Field(default=0, ge=0)
    terms: dict[Monomial, Rational] = Field(default_factory=dict)
    aux_labels: dict[int, int] = Field(default_factory=dict)

    @field_validator("terms", mode="before")
    @classmethod
    def _canonical(cls, value: Any) -> dict[Monomial, Fraction]:
        return canonical_terms(_term_items(value))

    @model_validator(mode="after")
    def _check_shape(self) -> QuadForm:
        for mono in self.terms:
            if len(mono) > 2:
                raise ValueError(f"monomial {'*'.join(mono)} has degree > 2")
            for token in mono:
                tag, idx = parse_var(token)
                limit = self.n if tag == "x" else self.m
                if idx > limit:
                    raise ValueError(f"variable {token} out of range (n={self.n}, m={self.m})")
        for aux in self.aux_labels:
            if not 1 <= aux <= self.m:
                raise ValueError(f"aux label for y{aux} but m={self.m}")
        return self

    @field_serializer("terms")
    def _dump_terms(self, terms: dict, info: FieldSerializationInfo) -> list[dict]:
        return _serialize_terms(terms, info, list)

    @property
    def degree(self) -> int:
        return max((len(m) for m in self.terms), default=0)
