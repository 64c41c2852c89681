"""Named symmetric functions and the function each quadratization family targets."""

from __future__ import annotations

import logging
import math
from fractions import Fraction
from typing import Any, Callable, Sequence

from symquad.engine.errors import InputError
from symquad.models import QuadratizationFamily, SymmetricSpec

logger = logging.getLogger(__name__)

SpecBuilder = Callable[[int, int | None], SymmetricSpec]


def _spec(n: int, rule: Callable[[int], int | Fraction]) -> SymmetricSpec:
    if n < 1:
        raise InputError(f"n must be >= 1, got {n}")
    return SymmetricSpec(n=n, k=[rule(l) for l in range(n + 1)])


def _check_t(t: int | None, n: int, lo: int) -> int:
    if t is None:
        raise InputError("this family needs a threshold t")
    if not lo <= t <= n:
        raise InputError(f"t must lie in {lo}..{n}, got {t}")
    return t


def neg_monomial_spec(n: int) -> SymmetricSpec:
    """-x_1 x_2 ... x_n."""
    return _spec(n, lambda l: -1 if l == n else 0)


def pos_monomial_spec(n: int) -> SymmetricSpec:
    """x_1 x_2 ... x_n."""
    return _spec(n, lambda l: 1 if l == n else 0)


def or_spec(n: int) -> SymmetricSpec:
    return _spec(n, lambda l: 1 if l > 0 else 0)


def t_out_of_n_spec(t: int, n: int) -> SymmetricSpec:
    """1 when at least t of the n variables are set."""
    _check_t(t, n, 1)
    return _spec(n, lambda l: 1 if l >= t else 0)


def majority_spec(n: int) -> SymmetricSpec:
    # ties go to ones
    return t_out_of_n_spec(math.ceil(n / 2), n)


def exact_t_spec(t: int, n: int) -> SymmetricSpec:
    _check_t(t, n, 0)
    return _spec(n, lambda l: 1 if l == t else 0)


def parity_spec(n: int) -> SymmetricSpec:
    return _spec(n, lambda l: l % 2)


def parity_complement_spec(n: int) -> SymmetricSpec:
    return _spec(n, lambda l: 1 - l % 2)


def constant_spec(n: int) -> SymmetricSpec:
    return _spec(n, lambda l: 0)


FUNCTION_FAMILIES: dict[str, SpecBuilder] = {
    "neg-monomial": lambda n, t: neg_monomial_spec(n),
    "pos-monomial": lambda n, t: pos_monomial_spec(n),
    "and": lambda n, t: pos_monomial_spec(n),
    "or": lambda n, t: or_spec(n),
    "majority": lambda n, t: majority_spec(n),
    "t-out-of-n": lambda n, t: t_out_of_n_spec(_check_t(t, n, 1), n),
    "exact-t": lambda n, t: exact_t_spec(_check_t(t, n, 0), n),
    "parity": lambda n, t: parity_spec(n),
    "parity-complement": lambda n, t: parity_complement_spec(n),
    "constant": lambda n, t: constant_spec(n),
}

# families whose builder reads t
THRESHOLD_FAMILIES = frozenset({"t-out-of-n", "exact-t"})


def build_spec(name: str, n: int, t: int | None = None) -> SymmetricSpec:
    try:
        builder = FUNCTION_FAMILIES[name]
    except KeyError:
        raise InputError(f"unknown function family {name!r}; known: {', '.join(FUNCTION_FAMILIES)}") from None
    return builder(n, t)


_TARGETS: dict[QuadratizationFamily, SpecBuilder] = {
    QuadratizationFamily.POS_MONOMIAL: lambda n, t: pos_monomial_spec(n),
    QuadratizationFamily.POS_MONOMIAL_SPLIT: lambda n, t: pos_monomial_spec(n),
    QuadratizationFamily.NEG_MONOMIAL_STANDARD: lambda n, t: neg_monomial_spec(n),
    QuadratizationFamily.NEG_MONOMIAL_HALF: lambda n, t: neg_monomial_spec(n),
    QuadratizationFamily.NEG_MONOMIAL_ASYMMETRIC: lambda n, t: neg_monomial_spec(n),
    QuadratizationFamily.T_OUT_OF_N: lambda n, t: t_out_of_n_spec(_check_t(t, n, 1), n),
    QuadratizationFamily.EXACT_T: lambda n, t: exact_t_spec(_check_t(t, n, 0), n),
    QuadratizationFamily.PARITY: lambda n, t: parity_spec(n),
    QuadratizationFamily.PARITY_COMPLEMENT: lambda n, t: parity_complement_spec(n),
}


def target_spec(family: QuadratizationFamily | str, n: int, t: int | None = None) -> SymmetricSpec:
    """The symmetric function a fixed-function family quadratizes."""
    try:
        builder = _TARGETS[QuadratizationFamily(family)]
    except (KeyError, ValueError):
        raise InputError(f"family {family!r} does not quadratize a fixed function") from None
    return builder(n, t)


# ── name resolution shared by the CLI and the HTTP surface ──

# function names that have a dedicated construction besides the enum's own names
_DEDICATED = {
    "neg-monomial": QuadratizationFamily.NEG_MONOMIAL_STANDARD,
    "pos-monomial": QuadratizationFamily.POS_MONOMIAL,
    "and": QuadratizationFamily.POS_MONOMIAL,
    "or": QuadratizationFamily.T_OUT_OF_N,
    "majority": QuadratizationFamily.T_OUT_OF_N,
}
# thresholds fixed by the function name
_IMPLIED_T: dict[str, Callable[[int], int]] = {
    "or": lambda n: 1,
    "majority": lambda n: math.ceil(n / 2),
}
_SPEC_ONLY = frozenset(
    {
        QuadratizationFamily.GENERAL_SYMMETRIC,
        QuadratizationFamily.GENERAL_SYMMETRIC_FIX,
        QuadratizationFamily.FROM_REP,
    }
)


def dedicated_family(name: str) -> QuadratizationFamily | None:
    """The construction a dashed family name selects, or None for general-purpose functions."""
    if name in _DEDICATED:
        return _DEDICATED[name]
    try:
        family = QuadratizationFamily(name.replace("-", "_"))
    except ValueError:
        return None
    return None if family in _SPEC_ONLY else family


def implied_threshold(name: str, n: int | None, t: int | None) -> int | None:
    """t for names that fix it (or, majority); otherwise the caller's t."""
    rule = _IMPLIED_T.get(name)
    return t if rule is None or n is None else rule(n)


def family_names() -> list[str]:
    names = {f.value.replace("_", "-") for f in QuadratizationFamily if f not in _SPEC_ONLY}
    return sorted(names | set(FUNCTION_FAMILIES))


def resolve_spec(
    family: str | None = None,
    n: int | None = None,
    t: int | None = None,
    k: Sequence[Any] | None = None,
) -> SymmetricSpec:
    """Exactly one of a family name (with n and t) or an explicit weight vector."""
    if (family is None) == (k is None):
        raise InputError("give exactly one of a family name or explicit k values")
    if k is not None:
        if n is not None and n != len(k) - 1:
            raise InputError(f"n={n} does not match {len(k)} weight values")
        return SymmetricSpec(n=len(k) - 1, k=k)
    if n is None:
        raise InputError("a named family needs n")
    if family in FUNCTION_FAMILIES:
        return build_spec(family, n, t)
    dedicated = dedicated_family(family)
    if dedicated is not None:
        return target_spec(dedicated, n, t)
    raise InputError(f"unknown family {family!r}; known: {', '.join(family_names())}")
