"""Tests for symquad.engine.representation."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings as hyp_settings, strategies as st

from symquad.engine.errors import InputError
from symquad.engine.representation import (
    HALF,
    alphas_half,
    closed_form_alphas,
    eval_rep,
    fix_representation,
    rep_values,
    solve_representation,
)
from symquad.models import AlphaTerm, SymmetricSpec

small_fractions = st.fractions(min_value=-20, max_value=20, max_denominator=10)
epsilons = st.fractions(min_value=0, max_value=1, max_denominator=16).filter(lambda e: e > 0)


@st.composite
def specs(draw, max_n: int = 8) -> SymmetricSpec:
    n = draw(st.integers(min_value=1, max_value=max_n))
    k = draw(st.lists(small_fractions, min_size=n + 1, max_size=n + 1))
    return SymmetricSpec(n=n, k=k)


def _alphas(rep) -> list[Fraction]:
    return [t.alpha for t in rep.alphas]


# ── triangular solve ──────────────────────────────────


class TestSolveRepresentation:
    def test_negative_monomial(self):
        rep = solve_representation(SymmetricSpec(n=3, k=[0, 0, 0, -1]), [HALF] * 4)
        assert _alphas(rep) == [0, 0, 0, 2]

    def test_mixed_eps(self):
        spec = SymmetricSpec(n=3, k=[1, -2, "1/2", 4])
        eps = [Fraction(1, 3), 1, Fraction(1, 2), Fraction(7, 8)]
        rep = solve_representation(spec, eps)
        assert [t.eps for t in rep.alphas] == eps
        assert rep_values(rep) == list(spec.k)

    def test_wrong_length(self):
        with pytest.raises(InputError):
            solve_representation(SymmetricSpec(n=2, k=[0, 0, 1]), [HALF] * 2)

    def test_eps_out_of_range(self):
        with pytest.raises(InputError):
            solve_representation(SymmetricSpec(n=1, k=[0, 1]), [0, HALF])


# ── closed forms ──────────────────────────────────────


class TestClosedForm:
    def test_eps_out_of_range(self):
        spec = SymmetricSpec(n=1, k=[0, 1])
        with pytest.raises(InputError):
            closed_form_alphas(spec, 0)
        with pytest.raises(InputError):
            closed_form_alphas(spec, "3/2")

    @given(specs(), epsilons)
    @hyp_settings(max_examples=200, deadline=None)
    def test_matches_solve_and_reproduces_k(self, spec, eps):
        rep = closed_form_alphas(spec, eps)
        assert rep == solve_representation(spec, [eps] * (spec.n + 1))
        assert rep_values(rep) == list(spec.k)

    def test_eps_one_collapses_to_second_differences(self):
        spec = SymmetricSpec(n=3, k=[0, 0, 0, 1])
        rep = closed_form_alphas(spec, 1)
        # alpha_j = -k_{j-2} + 2 k_{j-1} - k_j
        assert _alphas(rep) == [0, 0, 0, -1]


class TestAlphasHalf:
    def test_negative_monomial(self):
        assert _alphas(alphas_half(SymmetricSpec(n=3, k=[0, 0, 0, -1]))) == [0, 0, 0, 2]

    def test_parity_four(self):
        spec = SymmetricSpec(n=4, k=[0, 1, 0, 1, 0])
        rep = alphas_half(spec)
        assert _alphas(rep) == [0, -2, 6, -10, 14]
        assert rep == solve_representation(spec, [HALF] * 5)

    def test_positive_monomial_top_coefficient(self):
        for n in range(1, 9):
            rep = alphas_half(SymmetricSpec(n=n, k=[0] * n + [1]))
            assert _alphas(rep) == [0] * n + [-2]

    @given(specs())
    @hyp_settings(max_examples=200, deadline=None)
    def test_equals_closed_form(self, spec):
        rep = alphas_half(spec)
        assert rep == closed_form_alphas(spec, HALF)
        assert [eval_rep(rep, l) for l in range(spec.n + 1)] == list(spec.k)


class TestFixRepresentation:
    def test_parity_four(self):
        rep = fix_representation(SymmetricSpec(n=4, k=[0, 1, 0, 1, 0]))
        # breakpoints at weights 1, 2, 3 carried by indices 2, 3, 4
        assert _alphas(rep) == [0, 0, 2, -2, 2]
        assert all(t.eps == 1 for t in rep.alphas)
        assert rep.affine_const == 0
        assert rep.affine_linear == 1

    def test_all_zero(self):
        rep = fix_representation(SymmetricSpec(n=2, k=[0, 0, 0]))
        assert _alphas(rep) == [0, 0, 0]
        assert rep.affine_const == rep.affine_linear == rep.affine_quadratic == 0

    def test_constant(self):
        rep = fix_representation(SymmetricSpec(n=3, k=[5] * 4))
        assert rep.affine_const == 5
        assert rep.affine_linear == 0
        assert _alphas(rep) == [0] * 4

    @given(specs())
    @hyp_settings(max_examples=200, deadline=None)
    def test_reproduces_k(self, spec):
        assert rep_values(fix_representation(spec)) == list(spec.k)

    @given(specs())
    @hyp_settings(max_examples=100, deadline=None)
    def test_agrees_with_closed_form_at_eps_one(self, spec):
        fixed = fix_representation(spec)
        closed = closed_form_alphas(spec, 1)
        assert _alphas(fixed)[2:] == _alphas(closed)[2:]


class TestEvalRep:
    def test_weight_out_of_range(self):
        rep = alphas_half(SymmetricSpec(n=2, k=[0, 0, 1]))
        with pytest.raises(InputError):
            eval_rep(rep, 3)
        with pytest.raises(InputError):
            eval_rep(rep, -1)


# ── uniqueness ────────────────────────────────────────


class TestUniqueness:
    @given(specs(max_n=6), st.data())
    @hyp_settings(max_examples=100, deadline=None)
    def test_perturbing_any_alpha_changes_some_value(self, spec, data):
        eps = data.draw(st.lists(epsilons, min_size=spec.n + 1, max_size=spec.n + 1))
        i = data.draw(st.integers(min_value=0, max_value=spec.n))
        delta = data.draw(small_fractions.filter(lambda d: d != 0))
        rep = solve_representation(spec, eps)
        alphas = [
            AlphaTerm(i=t.i, alpha=t.alpha + delta if t.i == i else t.alpha, eps=t.eps) for t in rep.alphas
        ]
        perturbed = rep.model_copy(update={"alphas": tuple(alphas)})
        assert rep_values(rep) == list(spec.k)
        assert any(eval_rep(perturbed, l) != spec.k[l] for l in range(spec.n + 1))
