"""Core pseudo-Boolean algebra: evaluation, interpolation and canonical forms."""

from __future__ import annotations

import itertools
import logging
from collections import defaultdict
from fractions import Fraction
from typing import Any, Callable, Iterable, Iterator, Sequence

from symquad.config import settings
from symquad.engine.errors import InputError, ResourceError
from symquad.models import (
    Monomial,
    MultilinearPoly,
    QuadForm,
    SymmetricSpec,
    canonical_terms,
    parse_var,
    to_rational,
    xvar,
    yvar,
)

logger = logging.getLogger(__name__)

Evaluator = Callable[[tuple[int, ...]], Fraction]


# ── points ────────────────────────────────────────────


def check_bits(bits: Sequence[int], length: int, name: str = "x") -> tuple[int, ...]:
    if len(bits) != length:
        raise InputError(f"{name} must have {length} bits, got {len(bits)}")
    if any(b not in (0, 1) for b in bits):
        raise InputError(f"{name} must be a 0/1 vector")
    return tuple(int(b) for b in bits)


def vertices(n: int) -> Iterator[tuple[int, ...]]:
    """All x in {0,1}^n, lexicographic in (x_1, ..., x_n)."""
    return itertools.product((0, 1), repeat=n)


def vertex_index(x: Sequence[int]) -> int:
    """w = sum 2^(i-1) x_i, with x_1 the least significant bit."""
    return sum(bit << i for i, bit in enumerate(x))


def index_vertex(w: int, n: int) -> tuple[int, ...]:
    return tuple((w >> i) & 1 for i in range(n))


def check_table_cap(n: int) -> None:
    if n > settings.max_table_vars:
        raise ResourceError(f"n={n} exceeds the full-table cap of {settings.max_table_vars}")


# ── evaluation ────────────────────────────────────────


def eval_symmetric(spec: SymmetricSpec, x: Sequence[int]) -> Fraction:
    bits = check_bits(x, spec.n)
    return spec.k[sum(bits)]


def eval_poly(p: MultilinearPoly, x: Sequence[int]) -> Fraction:
    bits = check_bits(x, p.n)
    return sum(
        (coef for mono, coef in p.terms.items() if all(bits[i - 1] for i in mono)),
        Fraction(0),
    )


def eval_quadform(g: QuadForm, x: Sequence[int], y: Sequence[int]) -> Fraction:
    values = {"x": check_bits(x, g.n, "x"), "y": check_bits(y, g.m, "y")}
    total = Fraction(0)
    for mono, coef in g.terms.items():
        if all(values[tag][idx - 1] for tag, idx in map(parse_var, mono)):
            total += coef
    return total


def symmetric_evaluator(spec: SymmetricSpec) -> Evaluator:
    return lambda x: spec.k[sum(x)]


def poly_evaluator(p: MultilinearPoly) -> Evaluator:
    return lambda x: eval_poly(p, x)


def exact_values(values: Sequence[Any]) -> list[Fraction]:
    try:
        return [to_rational(v) for v in values]
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def table_evaluator(values: Sequence[Any]) -> Evaluator:
    table = exact_values(values)
    return lambda x: table[vertex_index(x)]


# ── tables & interpolation ────────────────────────────


def truth_table(f: Evaluator, n: int) -> list[Fraction]:
    """Values of f indexed by vertex_index."""
    check_table_cap(n)
    return [to_rational(f(index_vertex(w, n))) for w in range(1 << n)]


def interpolate_multilinear(values: Sequence[Any]) -> MultilinearPoly:
    """Unique multilinear interpolant of a table indexed by vertex_index (Moebius transform)."""
    size = len(values)
    if size == 0 or size & (size - 1):
        raise InputError(f"table size must be a power of two, got {size}")
    n = size.bit_length() - 1
    check_table_cap(n)

    coefs = exact_values(values)
    for bit in range(n):
        step = 1 << bit
        for w in range(size):
            if w & step:
                coefs[w] -= coefs[w ^ step]

    terms = {
        tuple(i + 1 for i in range(n) if (w >> i) & 1): c
        for w, c in enumerate(coefs)
        if c != 0
    }
    return MultilinearPoly(n=n, terms=terms)


def interpolate_symmetric(spec: SymmetricSpec) -> MultilinearPoly:
    return interpolate_multilinear(truth_table(symmetric_evaluator(spec), spec.n))


def poly_to_quadform(p: MultilinearPoly) -> QuadForm:
    if p.degree > 2:
        raise InputError(f"polynomial has degree {p.degree}; only degree <= 2 converts without auxiliaries")
    return QuadForm(n=p.n, m=0, terms={tuple(xvar(i) for i in mono): c for mono, c in p.terms.items()})


# ── canonical forms & arithmetic ──────────────────────


def canonicalize(g: QuadForm) -> QuadForm:
    return g.model_copy(update={"terms": canonical_terms(g.terms.items())})


def add_quadforms(a: QuadForm, b: QuadForm) -> QuadForm:
    """Coefficient-wise sum; auxiliaries with the same index are shared."""
    if a.n != b.n:
        raise InputError(f"cannot add forms over n={a.n} and n={b.n}")
    labels = {**b.aux_labels, **a.aux_labels}
    return QuadForm(
        n=a.n,
        m=max(a.m, b.m),
        terms=[*a.terms.items(), *b.terms.items()],
        aux_labels=labels,
    )


def scale_quadform(g: QuadForm, c: Any) -> QuadForm:
    factor = to_rational(c)
    return g.model_copy(update={"terms": canonical_terms((mono, coef * factor) for mono, coef in g.terms.items())})


def shift_aux(g: QuadForm, offset: int, m: int) -> QuadForm:
    """Renumber y_j to y_{j+offset} and widen the aux space to m."""

    def rename(token: str) -> str:
        tag, idx = parse_var(token)
        return yvar(idx + offset) if tag == "y" else token

    return QuadForm(
        n=g.n,
        m=m,
        terms=[(tuple(rename(t) for t in mono), coef) for mono, coef in g.terms.items()],
        aux_labels={j + offset: label for j, label in g.aux_labels.items()},
    )


class TermAccumulator:
    """Mutable scratch space for building a QuadForm term by term."""

    def __init__(self, n: int) -> None:
        self.n = n
        self._terms: dict[Monomial, Fraction] = defaultdict(Fraction)
        self._aux_labels: dict[int, int] = {}

    def add(self, tokens: Iterable[str], coef: Any) -> None:
        self._terms[tuple(tokens)] += to_rational(coef)

    def add_weight_polynomial(self, const: Fraction, linear: Fraction, quadratic: Fraction) -> None:
        """const + linear*l + quadratic*l^2 with l = sum x_j, expanded on binary x."""
        # l^2 = sum x_j + 2 sum_{i<j} x_i x_j
        self.add((), const)
        for j in range(1, self.n + 1):
            self.add((xvar(j),), linear + quadratic)
        if quadratic:
            for i, j in itertools.combinations(range(1, self.n + 1), 2):
                self.add((xvar(i), xvar(j)), 2 * quadratic)

    def add_aux_threshold(self, aux: int, coef: Fraction, threshold: Fraction, label: int) -> None:
        """coef * y_aux * (threshold - sum x_j)."""
        y = yvar(aux)
        self.add((y,), coef * threshold)
        for j in range(1, self.n + 1):
            self.add((xvar(j), y), -coef)
        self._aux_labels[aux] = label

    def label_aux(self, aux: int, label: int) -> None:
        self._aux_labels[aux] = label

    def build(self, m: int) -> QuadForm:
        return QuadForm(n=self.n, m=m, terms=list(self._terms.items()), aux_labels=self._aux_labels)
