from __future__ import annotations

from decimal import Decimal
from fractions import Fraction
from typing import Annotated, Any

from pydantic import PlainSerializer, PlainValidator, WithJsonSchema


def to_rational(value: Any) -> Fraction:
    """Coerce an exact scalar to a Fraction. Floats are rejected outright."""
    if isinstance(value, bool):
        raise ValueError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Decimal):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational literal: {value!r}") from exc
    if isinstance(value, float):
        raise ValueError("floating point values are not accepted; use 'p/q' strings")
    raise ValueError(f"cannot interpret {type(value).__name__} as a rational")


def format_rational(value: Fraction) -> str:
    return str(value)


Rational = Annotated[
    Fraction,
    PlainValidator(to_rational),
    PlainSerializer(format_rational, return_type=str, when_used="json"),
    WithJsonSchema({"type": "string", "pattern": r"^-?\d+(/\d+)?$"}),
]


def parse_rational_list(text: str) -> list[Fraction]:
    """Parse a comma-separated list such as ``"0,1/2,-3"``."""
    items = [part for part in text.split(",") if part.strip()]
    return [to_rational(part) for part in items]
