"""Tests for symquad.engine.algebra: evaluation, interpolation and canonical forms."""

from __future__ import annotations

from fractions import Fraction
from unittest.mock import patch

import pytest
from hypothesis import given, settings as hyp_settings, strategies as st

from symquad.config import settings
from symquad.engine.algebra import (
    TermAccumulator,
    add_quadforms,
    canonicalize,
    eval_poly,
    eval_quadform,
    eval_symmetric,
    index_vertex,
    interpolate_multilinear,
    interpolate_symmetric,
    scale_quadform,
    shift_aux,
    table_evaluator,
    truth_table,
    vertex_index,
    vertices,
)
from symquad.engine.errors import InputError, ResourceError
from symquad.models import QuadForm, SymmetricSpec

small_fractions = st.fractions(min_value=-10, max_value=10, max_denominator=12)


def _s3() -> QuadForm:
    """y (2 - x1 - x2 - x3)."""
    return QuadForm(n=3, m=1, terms={("y1",): 2, ("x1", "y1"): -1, ("x2", "y1"): -1, ("x3", "y1"): -1})


@st.composite
def quad_forms(draw, max_n: int = 3, max_m: int = 2) -> QuadForm:
    n = draw(st.integers(min_value=1, max_value=max_n))
    m = draw(st.integers(min_value=0, max_value=max_m))
    tokens = [f"x{i}" for i in range(1, n + 1)] + [f"y{j}" for j in range(1, m + 1)]
    monos = [()] + [(a,) for a in tokens] + [(a, b) for i, a in enumerate(tokens) for b in tokens[i + 1:]]
    terms = draw(st.dictionaries(st.sampled_from(monos), small_fractions, max_size=8))
    return QuadForm(n=n, m=m, terms=terms)


# ── points ────────────────────────────────────────────


class TestVertices:
    def test_lexicographic_order(self):
        assert list(vertices(2)) == [(0, 0), (0, 1), (1, 0), (1, 1)]

    def test_index_roundtrip(self):
        for w in range(16):
            assert vertex_index(index_vertex(w, 4)) == w

    def test_x1_is_least_significant(self):
        assert vertex_index((1, 0, 0)) == 1
        assert vertex_index((0, 0, 1)) == 4


# ── evaluation ────────────────────────────────────────


class TestEvaluation:
    def test_eval_symmetric(self):
        spec = SymmetricSpec(n=3, k=[0, 0, 0, -1])
        assert eval_symmetric(spec, (1, 1, 1)) == -1
        assert eval_symmetric(spec, (1, 0, 1)) == 0
        parity = SymmetricSpec(n=4, k=[0, 1, 0, 1, 0])
        assert eval_symmetric(parity, (1, 1, 1, 0)) == 1

    def test_eval_symmetric_length_mismatch(self):
        with pytest.raises(InputError):
            eval_symmetric(SymmetricSpec(n=2, k=[0, 0, 1]), (1, 1, 1))

    def test_eval_quadform(self):
        g = _s3()
        assert eval_quadform(g, (1, 1, 1), (1,)) == -1
        assert eval_quadform(g, (1, 0, 0), (0,)) == 0
        assert eval_quadform(g, (1, 0, 0), (1,)) == 1

    def test_eval_quadform_bad_bits(self):
        with pytest.raises(InputError):
            eval_quadform(_s3(), (1, 1), (1,))
        with pytest.raises(InputError):
            eval_quadform(_s3(), (1, 1, 1), ())
        with pytest.raises(InputError):
            eval_quadform(_s3(), (1, 2, 1), (1,))

    @given(quad_forms(), quad_forms(), st.data())
    @hyp_settings(max_examples=50, deadline=None)
    def test_eval_is_linear(self, a, b, data):
        b = QuadForm(n=a.n, m=a.m, terms={
            mono: c for mono, c in b.terms.items()
            if all(int(t[1:]) <= (a.n if t[0] == "x" else a.m) for t in mono)
        })
        x = data.draw(st.tuples(*[st.integers(0, 1)] * a.n))
        y = data.draw(st.tuples(*[st.integers(0, 1)] * a.m))
        assert eval_quadform(add_quadforms(a, b), x, y) == eval_quadform(a, x, y) + eval_quadform(b, x, y)


# ── interpolation ─────────────────────────────────────


class TestInterpolation:
    def test_parity_three(self):
        p = interpolate_symmetric(SymmetricSpec(n=3, k=[0, 1, 0, 1]))
        assert p.terms == {
            (1,): 1, (2,): 1, (3,): 1,
            (1, 2): -2, (1, 3): -2, (2, 3): -2,
            (1, 2, 3): 4,
        }

    def test_zero_table(self):
        assert interpolate_multilinear([0] * 8).terms == {}

    def test_and_two(self):
        assert interpolate_multilinear([0, 0, 0, 1]).terms == {(1, 2): Fraction(1)}

    def test_wrong_size(self):
        with pytest.raises(InputError):
            interpolate_multilinear([0, 1, 0])
        with pytest.raises(InputError):
            interpolate_multilinear([])

    def test_bad_literals(self):
        with pytest.raises(InputError):
            interpolate_multilinear(["0", "abc"])
        with pytest.raises(InputError):
            table_evaluator(["0", 0.5])
        assert table_evaluator(["0", "3/4"])((1,)) == Fraction(3, 4)

    def test_table_cap(self):
        with patch.object(settings, "max_table_vars", 2):
            with pytest.raises(ResourceError):
                interpolate_multilinear([0] * 8)
            with pytest.raises(ResourceError):
                truth_table(lambda x: 0, 3)

    def test_exhaustive_small_tables(self):
        for n in range(0, 4):
            for w in range(1 << (1 << n)):
                table = [(w >> i) & 1 for i in range(1 << n)]
                p = interpolate_multilinear(table)
                assert [eval_poly(p, index_vertex(v, n)) for v in range(1 << n)] == table

    @given(st.integers(min_value=0, max_value=6).flatmap(
        lambda n: st.lists(small_fractions, min_size=1 << n, max_size=1 << n)
    ))
    @hyp_settings(max_examples=60, deadline=None)
    def test_reproduces_random_tables(self, table):
        p = interpolate_multilinear(table)
        n = p.n
        assert [eval_poly(p, index_vertex(v, n)) for v in range(1 << n)] == table


# ── canonical forms & accumulation ────────────────────


class TestCanonicalForms:
    def test_merges_and_drops(self):
        g = QuadForm(n=2, m=1, terms=[(("x2", "x1"), 1), (("x1", "x2"), 2), (("y1",), 0)])
        assert canonicalize(g).terms == {("x1", "x2"): Fraction(3)}

    @given(quad_forms())
    @hyp_settings(max_examples=40, deadline=None)
    def test_idempotent(self, g):
        once = canonicalize(g)
        assert canonicalize(once) == once == g

    def test_scale(self):
        assert scale_quadform(_s3(), 0).terms == {}
        assert scale_quadform(_s3(), "1/2").terms[("y1",)] == 1

    def test_shift_aux(self):
        shifted = shift_aux(QuadForm(n=1, m=1, terms={("x1", "y1"): 1}, aux_labels={1: 4}), 2, 3)
        assert shifted.terms == {("x1", "y3"): Fraction(1)}
        assert shifted.aux_labels == {3: 4}
        assert shifted.m == 3

    def test_add_dimension_mismatch(self):
        with pytest.raises(InputError):
            add_quadforms(QuadForm(n=1), QuadForm(n=2))


class TestTermAccumulator:
    def test_weight_polynomial(self):
        acc = TermAccumulator(3)
        acc.add_weight_polynomial(Fraction(2), Fraction(-3), Fraction(1, 2))
        g = acc.build(m=0)
        for x in vertices(3):
            l = sum(x)
            assert eval_quadform(g, x, ()) == 2 - 3 * l + Fraction(1, 2) * l * l

    def test_aux_threshold(self):
        acc = TermAccumulator(3)
        acc.add_aux_threshold(1, Fraction(1), Fraction(2), label=2)
        g = acc.build(m=1)
        assert g == _s3().model_copy(update={"aux_labels": {1: 2}})
