"""Exhaustive certification of quadratizations plus structural predicates."""

from __future__ import annotations

import itertools
import logging
import math
from fractions import Fraction
from typing import Sequence

from symquad.config import settings
from symquad.engine.algebra import (
    Evaluator,
    check_bits,
    interpolate_symmetric,
    poly_evaluator,
    symmetric_evaluator,
    vertices,
)
from symquad.engine.errors import InputError, ResourceError
from symquad.models import (
    Counterexample,
    MultilinearPoly,
    QuadForm,
    SymmetricSpec,
    VerifyReport,
    canonical_terms,
    parse_var,
    to_rational,
    xvar,
)

logger = logging.getLogger(__name__)

Target = Evaluator | SymmetricSpec | MultilinearPoly


# ── structural predicates ─────────────────────────────


def is_y_linear(g: QuadForm) -> bool:
    """No term multiplies two auxiliary variables."""
    return all(sum(1 for t in mono if t.startswith("y")) <= 1 for mono in g.terms)


def is_x_symmetric(g: QuadForm) -> bool:
    for i in range(1, g.n):
        swap = {xvar(i): xvar(i + 1), xvar(i + 1): xvar(i)}
        permuted = canonical_terms(
            (tuple(swap.get(t, t) for t in mono), coef) for mono, coef in g.terms.items()
        )
        if permuted != g.terms:
            return False
    return True


# ── compiled evaluation ───────────────────────────────


class CompiledForm:
    """Integer-scaled view of a QuadForm grouped by auxiliary variable.

    g(x, y) = (q(x) + sum_j y_j a_j(x) + sum_{j<k} c_jk y_j y_k) / scale
    """

    def __init__(self, g: QuadForm) -> None:
        self.n = g.n
        self.m = g.m
        self.scale = math.lcm(1, *(coef.denominator for coef in g.terms.values()))

        self.const = 0
        self.x_linear = [0] * (g.n + 1)
        self.x_pairs: list[tuple[int, int, int]] = []
        self.y_const = [0] * (g.m + 1)
        self.y_x: list[list[tuple[int, int]]] = [[] for _ in range(g.m + 1)]
        self.y_pairs: list[tuple[int, int, int]] = []

        for mono, coef in g.terms.items():
            value = int(coef * self.scale)
            xs = [idx for tag, idx in map(parse_var, mono) if tag == "x"]
            ys = [idx for tag, idx in map(parse_var, mono) if tag == "y"]
            if not ys:
                if not xs:
                    self.const += value
                elif len(xs) == 1:
                    self.x_linear[xs[0]] += value
                else:
                    self.x_pairs.append((xs[0], xs[1], value))
            elif len(ys) == 1:
                if xs:
                    self.y_x[ys[0]].append((xs[0], value))
                else:
                    self.y_const[ys[0]] += value
            else:
                self.y_pairs.append((ys[0], ys[1], value))

    @property
    def y_linear(self) -> bool:
        return not self.y_pairs

    def x_part(self, x: Sequence[int]) -> int:
        total = self.const
        for i in range(1, self.n + 1):
            if x[i - 1]:
                total += self.x_linear[i]
        for i, j, value in self.x_pairs:
            if x[i - 1] and x[j - 1]:
                total += value
        return total

    def aux_slopes(self, x: Sequence[int]) -> list[int]:
        """a_j(x) for j = 1..m."""
        return [
            self.y_const[j] + sum(value for i, value in self.y_x[j] if x[i - 1])
            for j in range(1, self.m + 1)
        ]

    def minimum(self, x: Sequence[int]) -> Fraction:
        base = self.x_part(x)
        slopes = self.aux_slopes(x)
        if self.y_linear:
            # each y_j a_j(x) independently takes min(0, a_j(x))
            return Fraction(base + sum(min(0, a) for a in slopes), self.scale)

        best: int | None = None
        for y in itertools.product((0, 1), repeat=self.m):
            value = sum(a for a, bit in zip(slopes, y) if bit)
            value += sum(c for j, k, c in self.y_pairs if y[j - 1] and y[k - 1])
            if best is None or value < best:
                best = value
        return Fraction(base + (best or 0), self.scale)


# ── minimisation & verification ───────────────────────


def minimize_over_y(g: QuadForm, x: Sequence[int]) -> Fraction:
    bits = check_bits(x, g.n)
    compiled = CompiledForm(g)
    if not compiled.y_linear and g.m > settings.max_brute_aux:
        raise ResourceError(f"m={g.m} exceeds the brute-force cap of {settings.max_brute_aux}")
    return compiled.minimum(bits)


def _as_evaluator(f: Target, n: int) -> Evaluator:
    if isinstance(f, SymmetricSpec):
        if f.n != n:
            raise InputError(f"target is over n={f.n} but g is over n={n}")
        return symmetric_evaluator(f)
    if isinstance(f, MultilinearPoly):
        if f.n != n:
            raise InputError(f"target is over n={f.n} but g is over n={n}")
        return poly_evaluator(f)
    return f


def verify_quadratization(g: QuadForm, f: Target) -> VerifyReport:
    """Check min_y g(x, y) == f(x) on every x, stopping at the first failure."""
    if g.n > settings.max_sweep_vars:
        raise ResourceError(f"n={g.n} exceeds the sweep cap of {settings.max_sweep_vars}")
    compiled = CompiledForm(g)
    if not compiled.y_linear:
        if g.m > settings.max_brute_aux:
            raise ResourceError(f"m={g.m} exceeds the brute-force cap of {settings.max_brute_aux}")
        if g.n + g.m > settings.max_enum_bits:
            raise ResourceError(f"n+m={g.n + g.m} exceeds the enumeration cap of {settings.max_enum_bits}")
    evaluate = _as_evaluator(f, g.n)

    logger.debug("verifying form over n=%d m=%d (y_linear=%s)", g.n, g.m, compiled.y_linear)
    counterexample: Counterexample | None = None
    checked = 0
    min_f: Fraction | None = None
    min_g: Fraction | None = None
    for x in vertices(g.n):
        expected = to_rational(evaluate(x))
        got = compiled.minimum(x)
        checked += 1
        min_f = expected if min_f is None else min(min_f, expected)
        min_g = got if min_g is None else min(min_g, got)
        if got != expected:
            counterexample = Counterexample(x=x, expected=expected, got=got)
            break

    if counterexample is not None:
        logger.info("verification failed at x=%s: expected %s, got %s", counterexample.x, counterexample.expected, counterexample.got)
        # finish the global minimum comparison over the remaining points
        for x in itertools.islice(vertices(g.n), checked, None):
            min_f = min(min_f, to_rational(evaluate(x)))
            min_g = min(min_g, compiled.minimum(x))

    return VerifyReport(
        passed=counterexample is None,
        counterexample=counterexample,
        checked_points=checked,
        y_linear=compiled.y_linear,
        x_symmetric=is_x_symmetric(g),
        global_min_match=min_f == min_g,
    )


# ── degree oracle ─────────────────────────────────────


def parity_interpolant(n: int) -> MultilinearPoly:
    return interpolate_symmetric(SymmetricSpec(n=n, k=[l % 2 for l in range(n + 1)]))


def top_coefficient(p: MultilinearPoly) -> Fraction:
    """Coefficient of x_1 x_2 ... x_n."""
    return p.terms.get(tuple(range(1, p.n + 1)), Fraction(0))


def parity_3cube_degree_oracle() -> int:
    """Degree of parity on three variables; 3 means no quadratic polynomial agrees with it."""
    p = parity_interpolant(3)
    logger.debug("parity on the 3-cube: degree %d, top coefficient %s", p.degree, top_coefficient(p))
    return p.degree
