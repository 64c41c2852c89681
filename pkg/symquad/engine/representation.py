"""Negative-part representations f(l) = sum_i alpha_i * min(i - eps_i - l, 0) of symmetric functions."""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Any, Sequence

from symquad.engine.errors import InputError
from symquad.models import AlphaTerm, NegPartRep, SymmetricSpec, to_rational

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)


def negative_part(a: Fraction) -> Fraction:
    return min(a, Fraction(0))


def _check_eps(value: Any) -> Fraction:
    try:
        eps = to_rational(value)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    if not 0 < eps <= 1:
        raise InputError(f"eps must lie in (0, 1], got {eps}")
    return eps


def _k(spec: SymmetricSpec, i: int) -> Fraction:
    # k_{-1} = 0
    return spec.k[i] if i >= 0 else Fraction(0)


def _rep(spec: SymmetricSpec, alphas: Sequence[Fraction], eps: Sequence[Fraction], **affine: Fraction) -> NegPartRep:
    return NegPartRep(
        n=spec.n,
        alphas=tuple(AlphaTerm(i=i, alpha=a, eps=e) for i, (a, e) in enumerate(zip(alphas, eps))),
        **affine,
    )


def solve_representation(spec: SymmetricSpec, eps: Sequence[Any]) -> NegPartRep:
    """Forward substitution on k_j = sum_{i<=j} alpha_i (i - eps_i - j)."""
    if len(eps) != spec.n + 1:
        raise InputError(f"need n+1={spec.n + 1} eps values, got {len(eps)}")
    epsilons = [_check_eps(e) for e in eps]

    alphas: list[Fraction] = []
    for j in range(spec.n + 1):
        partial = sum((alphas[i] * (i - epsilons[i] - j) for i in range(j)), Fraction(0))
        # diagonal entry is -eps_j
        alphas.append((spec.k[j] - partial) / -epsilons[j])
    return _rep(spec, alphas, epsilons)


def closed_form_alphas(spec: SymmetricSpec, eps: Any) -> NegPartRep:
    """Explicit coefficients for a constant eps."""
    e = _check_eps(eps)
    alphas: list[Fraction] = []
    for j in range(spec.n + 1):
        tail = sum(
            ((e - 1) ** (j - i - 2) / e ** (j - i + 1) * spec.k[i] for i in range(j - 1)),
            Fraction(0),
        )
        alphas.append(-tail + (1 / e + 1 / e**2) * _k(spec, j - 1) - _k(spec, j) / e)
    return _rep(spec, alphas, [e] * (spec.n + 1))


def alphas_half(spec: SymmetricSpec) -> NegPartRep:
    """eps = 1/2 coefficients: alpha_i = -8 sum_{j<=i} (-1)^(i-j) k_j - 2 k_{i-1} + 6 k_i."""
    alphas: list[Fraction] = []
    alternating = Fraction(0)
    for i in range(spec.n + 1):
        alternating = spec.k[i] - alternating
        alphas.append(-8 * alternating - 2 * _k(spec, i - 1) + 6 * spec.k[i])

    rep = _rep(spec, alphas, [HALF] * (spec.n + 1))
    reference = solve_representation(spec, [HALF] * (spec.n + 1))
    if reference.alphas != rep.alphas:
        logger.warning("eps=1/2 closed form disagrees with the triangular solve for k=%s; using the solve", spec.k)
        return reference
    return rep


def fix_representation(spec: SymmetricSpec) -> NegPartRep:
    """k_0 + (k_1 - k_0) l + sum_{i=1}^{n-1} (-k_{i-1} + 2k_i - k_{i+1}) min(i - l, 0).

    With eps = 1 the breakpoint at weight i is carried by index i + 1, so the
    coefficients occupy indices 2..n and indices 0 and 1 stay zero.
    """
    n = spec.n
    alphas = [Fraction(0)] * (n + 1)
    for j in range(2, n + 1):
        alphas[j] = -spec.k[j - 2] + 2 * spec.k[j - 1] - spec.k[j]
    return _rep(
        spec,
        alphas,
        [Fraction(1)] * (n + 1),
        affine_const=spec.k[0],
        affine_linear=spec.k[1] - spec.k[0],
    )


def eval_rep(rep: NegPartRep, l: int) -> Fraction:
    if not 0 <= l <= rep.n:
        raise InputError(f"l must lie in 0..{rep.n}, got {l}")
    value = rep.affine_const + rep.affine_linear * l + rep.affine_quadratic * l * l
    for term in rep.alphas:
        value += term.alpha * negative_part(term.i - term.eps - l)
    return value


def rep_values(rep: NegPartRep) -> list[Fraction]:
    return [eval_rep(rep, l) for l in range(rep.n + 1)]
