"""Symmetric lift of an arbitrary function and projection of quadratizations back.

f on n variables becomes F(z) = k[|z|] on N = 2^n - 1 variables with k[w] = f(bits of w).
Variable x_j is spread over the block z_{2^(j-1)} .. z_{2^j - 1}, so the weight of the
embedded point is exactly w.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Sequence

from symquad.config import settings
from symquad.engine.algebra import check_bits, eval_poly, index_vertex
from symquad.engine.errors import InputError, ResourceError
from symquad.engine.quadratize import quadratize_symmetric_general
from symquad.engine.verify import verify_quadratization
from symquad.models import LiftSpec, MultilinearPoly, QuadForm, VerifyReport, parse_var, xvar

logger = logging.getLogger(__name__)


def block_map(n: int) -> tuple[tuple[int, int], ...]:
    return tuple((2 ** (j - 1), 2**j - 1) for j in range(1, n + 1))


def block_of(p: int) -> int:
    """The original variable that z_p stands for."""
    return p.bit_length()


def lift_function(f: MultilinearPoly) -> LiftSpec:
    n = f.n
    if n < 1:
        raise InputError("cannot lift a function of zero variables")
    if n > settings.max_lift_vars:
        raise ResourceError(f"n={n} exceeds the lift cap of {settings.max_lift_vars}")
    big_n = 2**n - 1
    k = [eval_poly(f, index_vertex(w, n)) for w in range(big_n + 1)]
    logger.debug("lifted a degree-%d polynomial on n=%d to N=%d", f.degree, n, big_n)
    return LiftSpec(n=n, N=big_n, k=k, block_map=block_map(n))


def embed(x: Sequence[int], lift: LiftSpec) -> tuple[int, ...]:
    bits = check_bits(x, lift.n)
    return tuple(bits[block_of(p) - 1] for p in range(1, lift.N + 1))


def eval_lifted(lift: LiftSpec, z: Sequence[int]) -> Fraction:
    return lift.k[sum(check_bits(z, lift.N, "z"))]


def project_quadratization(big_g: QuadForm, lift: LiftSpec) -> QuadForm:
    """Substitute z_p := x_j for every p in block j; auxiliaries are untouched."""
    if big_g.n != lift.N:
        raise InputError(f"form is over {big_g.n} variables but the lift has N={lift.N}")

    def rename(token: str) -> str:
        tag, idx = parse_var(token)
        return xvar(block_of(idx)) if tag == "x" else token

    # QuadForm canonicalisation merges x_j * x_j into x_j
    return QuadForm(
        n=lift.n,
        m=big_g.m,
        terms=[(tuple(rename(t) for t in mono), coef) for mono, coef in big_g.terms.items()],
        aux_labels=big_g.aux_labels,
    )


def lift_roundtrip(f: MultilinearPoly) -> VerifyReport:
    """Lift f, quadratize the symmetric lift, project back and verify against f."""
    if f.n > settings.max_roundtrip_vars:
        raise ResourceError(f"n={f.n} exceeds the roundtrip cap of {settings.max_roundtrip_vars}")
    lift = lift_function(f)
    big = quadratize_symmetric_general(lift.to_symmetric())
    g = project_quadratization(big.g, lift)
    report = verify_quadratization(g, f)
    logger.info("roundtrip on n=%d with %d aux: passed=%s", f.n, g.m, report.passed)
    return report
