"""Quadratization constructions for symmetric functions.

Every construction follows the same route: a negative-part representation of the
target, zero identities added until each threshold term has a non-negative
coefficient, and one auxiliary variable per remaining positive term:

    alpha * min(c - l, 0) = min over y of alpha * y * (c - l)    (alpha >= 0)
"""

from __future__ import annotations

import logging
import math
from fractions import Fraction

from symquad.config import settings
from symquad.engine.algebra import (
    TermAccumulator,
    interpolate_symmetric,
    poly_to_quadform,
)
from symquad.engine.errors import InputError, PreconditionError, ResourceError
from symquad.engine.families import (
    exact_t_spec,
    neg_monomial_spec,
    parity_complement_spec,
    parity_spec,
    pos_monomial_spec,
    t_out_of_n_spec,
)
from symquad.engine.identities import add_scaled_identity, make_identity
from symquad.engine.representation import alphas_half, fix_representation
from symquad.engine.verify import is_x_symmetric, is_y_linear
from symquad.models import (
    IdentityKind,
    NegPartRep,
    QuadForm,
    QuadratizationFamily,
    QuadratizationResult,
    SymmetricSpec,
    xvar,
    yvar,
)

logger = logging.getLogger(__name__)


def _result(g: QuadForm, family: QuadratizationFamily, paper_bound: int) -> QuadratizationResult:
    result = QuadratizationResult(
        g=g,
        family=family,
        aux_count=g.m,
        paper_bound=paper_bound,
        y_linear=is_y_linear(g),
        x_symmetric=is_x_symmetric(g),
    )
    logger.debug("%s over n=%d: %d aux (bound %d)", family, g.n, g.m, paper_bound)
    if not result.within_bound:
        logger.warning("%s over n=%d uses %d aux, above the bound %d", family, g.n, g.m, paper_bound)
    return result


def _check_n(n: int, lo: int = 1) -> None:
    if n < lo:
        raise InputError(f"n must be >= {lo}, got {n}")
    if n > settings.max_construct_vars:
        raise ResourceError(f"n={n} exceeds the construction cap of {settings.max_construct_vars}")


# ── from representation ───────────────────────────────


def _positive_terms(rep: NegPartRep) -> int:
    return sum(1 for term in rep.alphas if term.alpha > 0 and term.i - term.eps > 0)


def from_nonneg_rep(
    rep: NegPartRep,
    family: QuadratizationFamily = QuadratizationFamily.FROM_REP,
    paper_bound: int | None = None,
) -> QuadratizationResult:
    """One auxiliary per positive threshold term; the rest is expanded in x."""
    const = rep.affine_const
    linear = rep.affine_linear
    threshold_terms = []
    for term in rep.alphas:
        if term.alpha == 0:
            continue
        threshold = term.i - term.eps
        if threshold <= 0:
            # min(threshold - l, 0) = threshold - l on every weight
            const += term.alpha * threshold
            linear -= term.alpha
            continue
        if term.alpha < 0:
            raise PreconditionError(f"alpha_{term.i} = {term.alpha} is negative; add zero identities first")
        threshold_terms.append(term)

    acc = TermAccumulator(rep.n)
    acc.add_weight_polynomial(const, linear, rep.affine_quadratic)
    for aux, term in enumerate(threshold_terms, start=1):
        threshold = term.i - term.eps
        acc.add_aux_threshold(aux, term.alpha, threshold, label=math.ceil(threshold))
    g = acc.build(m=len(threshold_terms))
    return _result(g, family, len(threshold_terms) if paper_bound is None else paper_bound)


def balance_half(rep: NegPartRep) -> NegPartRep:
    """Add the multiples of E' and E'' that lift the smallest even and odd coefficients to zero."""
    n = rep.n
    for kind, indices in (
        (IdentityKind.EPRIME, range(2, n + 1, 2)),
        (IdentityKind.EDOUBLEPRIME, range(1, n + 1, 2)),
    ):
        if not indices:
            continue
        low = min(rep.alpha(i) for i in indices)
        pick = next(i for i in indices if rep.alpha(i) == low)
        multiplier = -low / 2
        logger.debug("n=%d: %s index %d has the smallest coefficient %s; adding %s * %s", n, kind, pick, low, multiplier, kind)
        rep = add_scaled_identity(rep, make_identity(kind, n), multiplier)
    return rep


# ── general symmetric ─────────────────────────────────


def quadratize_symmetric_general(spec: SymmetricSpec) -> QuadratizationResult:
    """Any symmetric f with at most n - 2 auxiliaries."""
    family = QuadratizationFamily.GENERAL_SYMMETRIC
    _check_n(spec.n)
    if spec.n <= 2:
        return _result(poly_to_quadform(interpolate_symmetric(spec)), family, 0)
    rep = balance_half(alphas_half(spec))
    return from_nonneg_rep(rep, family, spec.n - 2)


def quadratize_symmetric_fix(spec: SymmetricSpec) -> QuadratizationResult:
    """Same bound through the eps = 1 representation and a single multiple of E."""
    _check_n(spec.n)
    rep = fix_representation(spec)
    indices = range(2, spec.n + 1)
    if indices:
        low = min(rep.alpha(i) for i in indices)
        rep = add_scaled_identity(rep, make_identity(IdentityKind.E, spec.n), -low / 2)
    return from_nonneg_rep(rep, QuadratizationFamily.GENERAL_SYMMETRIC_FIX, max(spec.n - 2, 0))


# ── monomials ─────────────────────────────────────────


def quadratize_pos_monomial(n: int) -> QuadratizationResult:
    """x_1...x_n with floor((n-1)/2) auxiliaries."""
    _check_n(n)
    kind = IdentityKind.EPRIME if n % 2 == 0 else IdentityKind.EDOUBLEPRIME
    rep = add_scaled_identity(alphas_half(pos_monomial_spec(n)), make_identity(kind, n), 1)
    return from_nonneg_rep(rep, QuadratizationFamily.POS_MONOMIAL, (n - 1) // 2)


def quadratize_pos_monomial_split(n: int) -> QuadratizationResult:
    """Odd n: x_1...x_{n-1} plus the standard form of -x_1...x_{n-1}(1 - x_n)."""
    if n < 3 or n % 2 == 0:
        raise InputError(f"the split construction needs odd n >= 3, got {n}")
    _check_n(n)
    head = quadratize_pos_monomial(n - 1).g

    acc = TermAccumulator(n)
    for mono, coef in head.terms.items():
        acc.add(mono, coef)
    for aux, label in head.aux_labels.items():
        acc.label_aux(aux, label)

    # y (n - 2 - sum_{i<n} x_i + x_n)
    y = yvar(head.m + 1)
    acc.add((y,), n - 2)
    for i in range(1, n):
        acc.add((xvar(i), y), -1)
    acc.add((xvar(n), y), 1)
    acc.label_aux(head.m + 1, n - 1)
    return _result(acc.build(m=head.m + 1), QuadratizationFamily.POS_MONOMIAL_SPLIT, (n - 1) // 2)


def quadratize_neg_monomial_standard(n: int) -> QuadratizationResult:
    """-x_1...x_n = min over y of y (n - 1 - sum x_i)."""
    _check_n(n)
    acc = TermAccumulator(n)
    acc.add_aux_threshold(1, Fraction(1), Fraction(n - 1), label=n - 1)
    return _result(acc.build(m=1), QuadratizationFamily.NEG_MONOMIAL_STANDARD, 1)


def quadratize_neg_monomial_half(n: int) -> QuadratizationResult:
    _check_n(n)
    return from_nonneg_rep(alphas_half(neg_monomial_spec(n)), QuadratizationFamily.NEG_MONOMIAL_HALF, 1)


def quadratize_neg_monomial_asymmetric(n: int) -> QuadratizationResult:
    """(n-2) x_n y - sum_{i<n} x_i y + sum_{i<n} x_i - sum_{i<n} x_i x_n; not symmetric in x."""
    _check_n(n, 2)
    acc = TermAccumulator(n)
    y = yvar(1)
    acc.add((xvar(n), y), n - 2)
    for i in range(1, n):
        acc.add((xvar(i), y), -1)
        acc.add((xvar(i),), 1)
        acc.add((xvar(i), xvar(n)), -1)
    return _result(acc.build(m=1), QuadratizationFamily.NEG_MONOMIAL_ASYMMETRIC, 1)


# ── threshold & parity families ───────────────────────


def quadratize_t_out_of_n(t: int, n: int) -> QuadratizationResult:
    _check_n(n)
    rep = balance_half(alphas_half(t_out_of_n_spec(t, n)))
    return from_nonneg_rep(rep, QuadratizationFamily.T_OUT_OF_N, math.ceil(n / 2))


def quadratize_exact_t(t: int, n: int) -> QuadratizationResult:
    _check_n(n)
    spec = exact_t_spec(t, n)
    if t == n:
        result = quadratize_pos_monomial(n)
        return result.model_copy(update={"family": QuadratizationFamily.EXACT_T})
    rep = balance_half(alphas_half(spec))
    return from_nonneg_rep(rep, QuadratizationFamily.EXACT_T, n // 2)


def quadratize_parity(n: int) -> QuadratizationResult:
    """floor(n/2) auxiliaries: the eps = 1 representation plus one copy of E."""
    _check_n(n)
    rep = add_scaled_identity(fix_representation(parity_spec(n)), make_identity(IdentityKind.E, n), 1)
    return from_nonneg_rep(rep, QuadratizationFamily.PARITY, n // 2)


def quadratize_parity_complement(n: int) -> QuadratizationResult:
    _check_n(n)
    rep = add_scaled_identity(fix_representation(parity_complement_spec(n)), make_identity(IdentityKind.E, n), 1)
    return from_nonneg_rep(rep, QuadratizationFamily.PARITY_COMPLEMENT, (n - 1) // 2)


# ── dispatch ──────────────────────────────────────────

_NEEDS_T = frozenset({QuadratizationFamily.T_OUT_OF_N, QuadratizationFamily.EXACT_T})


def quadratize_family(
    family: QuadratizationFamily | str,
    n: int | None = None,
    t: int | None = None,
    spec: SymmetricSpec | None = None,
) -> QuadratizationResult:
    """Run one construction by family name."""
    try:
        family = QuadratizationFamily(family)
    except ValueError:
        raise InputError(f"unknown quadratization family {family!r}") from None

    if family in (QuadratizationFamily.GENERAL_SYMMETRIC, QuadratizationFamily.GENERAL_SYMMETRIC_FIX):
        if spec is None:
            raise InputError(f"{family} needs an explicit spec")
        if family is QuadratizationFamily.GENERAL_SYMMETRIC:
            return quadratize_symmetric_general(spec)
        return quadratize_symmetric_fix(spec)
    if family is QuadratizationFamily.FROM_REP:
        raise InputError("from_rep is built from a representation, not by name")

    if n is None:
        raise InputError(f"{family} needs n")
    if family in _NEEDS_T:
        if t is None:
            raise InputError(f"{family} needs t")
        if family is QuadratizationFamily.T_OUT_OF_N:
            return quadratize_t_out_of_n(t, n)
        return quadratize_exact_t(t, n)

    builders = {
        QuadratizationFamily.POS_MONOMIAL: quadratize_pos_monomial,
        QuadratizationFamily.POS_MONOMIAL_SPLIT: quadratize_pos_monomial_split,
        QuadratizationFamily.NEG_MONOMIAL_STANDARD: quadratize_neg_monomial_standard,
        QuadratizationFamily.NEG_MONOMIAL_HALF: quadratize_neg_monomial_half,
        QuadratizationFamily.NEG_MONOMIAL_ASYMMETRIC: quadratize_neg_monomial_asymmetric,
        QuadratizationFamily.PARITY: quadratize_parity,
        QuadratizationFamily.PARITY_COMPLEMENT: quadratize_parity_complement,
    }
    return builders[family](n)
