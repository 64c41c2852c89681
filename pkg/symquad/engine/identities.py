"""Identically-zero expressions in l used to cancel negative coefficients."""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Any

from symquad.engine.errors import InputError, StructuralError
from symquad.engine.representation import (
    HALF,
    alphas_half,
    fix_representation,
    negative_part,
)
from symquad.models import AlphaTerm, IdentityKind, NegPartRep, SymmetricSpec, ZeroIdentity, to_rational

logger = logging.getLogger(__name__)


def make_identity(kind: IdentityKind | str, n: int) -> ZeroIdentity:
    """
    E   = l(l-1)   + 2 sum_{i=2}^{n}        min(i - 1 - l, 0)
    E'  = l(l-1)/2 + 2 sum_{even i=2}^{n}    min(i - 1/2 - l, 0)
    E'' = l(l+1)/2 + 2 sum_{odd i=1}^{n}     min(i - 1/2 - l, 0)
    """
    try:
        kind = IdentityKind(kind)
    except ValueError as exc:
        raise InputError(f"unknown identity kind: {kind!r}") from exc
    if n < 1:
        raise InputError(f"n must be >= 1, got {n}")

    two = Fraction(2)
    if kind is IdentityKind.E:
        quadratic = (Fraction(1), Fraction(-1))
        eps = Fraction(1)
        # breakpoints at weights 1..n-1 sit at indices 2..n when eps = 1
        indices = range(2, n + 1)
    elif kind is IdentityKind.EPRIME:
        quadratic = (HALF, -HALF)
        eps = HALF
        indices = range(2, n + 1, 2)
    else:
        quadratic = (HALF, HALF)
        eps = HALF
        indices = range(1, n + 1, 2)

    return ZeroIdentity(
        kind=kind,
        n=n,
        quadratic_in_l=quadratic,
        eps=eps,
        negpart_coefs={i: two for i in indices},
    )


def eval_identity(identity: ZeroIdentity, l: int) -> Fraction:
    if not 0 <= l <= identity.n:
        raise InputError(f"l must lie in 0..{identity.n}, got {l}")
    c2, c1 = identity.quadratic_in_l
    value = c2 * l * l + c1 * l
    for i, coef in identity.negpart_coefs.items():
        value += coef * negative_part(i - identity.eps - l)
    return value


def add_scaled_identity(rep: NegPartRep, identity: ZeroIdentity, c: Any) -> NegPartRep:
    """rep + c * identity; the quadratic part lands in the rep's affine prefix."""
    scale = to_rational(c)
    if identity.n != rep.n:
        raise StructuralError(f"identity over n={identity.n} cannot combine with a rep over n={rep.n}")
    if scale == 0:
        return rep
    for i in identity.negpart_coefs:
        if rep.eps(i) != identity.eps:
            raise StructuralError(
                f"{identity.kind} uses eps={identity.eps} but the rep has eps_{i}={rep.eps(i)}"
            )

    c2, c1 = identity.quadratic_in_l
    alphas = tuple(
        AlphaTerm(
            i=term.i,
            alpha=term.alpha + scale * identity.negpart_coefs.get(term.i, Fraction(0)),
            eps=term.eps,
        )
        for term in rep.alphas
    )
    logger.debug("added %s * %s to rep over n=%d", scale, identity.kind, rep.n)
    return rep.model_copy(
        update={
            "alphas": alphas,
            "affine_linear": rep.affine_linear + scale * c1,
            "affine_quadratic": rep.affine_quadratic + scale * c2,
        }
    )


def derive_identity(kind: IdentityKind | str, n: int) -> dict[int, Fraction]:
    """Recover an identity's negative-part coefficients from the representation theorems.

    The ε=1 form of l(l-1) is -2 sum min(i - l, 0), the ε=1/2 form of l(l-1)/2 is
    -2 sum_even min(i - 1/2 - l, 0) and that of l(l+1)/2 is -2 sum_odd; negating gives
    the coefficients each identity must carry.
    """
    kind = IdentityKind(kind)
    if kind is IdentityKind.E:
        rep = fix_representation(SymmetricSpec(n=n, k=[l * (l - 1) for l in range(n + 1)]))
    elif kind is IdentityKind.EPRIME:
        rep = alphas_half(SymmetricSpec(n=n, k=[Fraction(l * (l - 1), 2) for l in range(n + 1)]))
    else:
        rep = alphas_half(SymmetricSpec(n=n, k=[Fraction(l * (l + 1), 2) for l in range(n + 1)]))
    return {term.i: -term.alpha for term in rep.alphas if term.alpha != 0}
