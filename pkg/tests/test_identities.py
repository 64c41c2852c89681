"""Tests for symquad.engine.identities."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings as hyp_settings, strategies as st

from symquad.engine.errors import InputError, StructuralError
from symquad.engine.identities import (
    add_scaled_identity,
    derive_identity,
    eval_identity,
    make_identity,
)
from symquad.engine.representation import alphas_half, fix_representation, rep_values
from symquad.models import IdentityKind, SymmetricSpec

KINDS = list(IdentityKind)


class TestMakeIdentity:
    @pytest.mark.parametrize("kind", KINDS)
    def test_vanishes_everywhere(self, kind):
        for n in range(1, 17):
            identity = make_identity(kind, n)
            assert all(eval_identity(identity, l) == 0 for l in range(n + 1))

    def test_coefficients(self):
        e = make_identity("E", 4)
        assert e.negpart_coefs == {2: 2, 3: 2, 4: 2}
        assert e.eps == 1
        assert e.quadratic_in_l == (1, -1)
        assert make_identity(IdentityKind.EPRIME, 5).negpart_coefs == {2: 2, 4: 2}
        assert make_identity(IdentityKind.EDOUBLEPRIME, 5).negpart_coefs == {1: 2, 3: 2, 5: 2}
        assert make_identity(IdentityKind.EDOUBLEPRIME, 5).eps == Fraction(1, 2)

    def test_unknown_kind(self):
        with pytest.raises(InputError):
            make_identity("F", 3)

    def test_bad_n(self):
        with pytest.raises(InputError):
            make_identity("E", 0)

    def test_eval_weight_out_of_range(self):
        with pytest.raises(InputError):
            eval_identity(make_identity("E", 2), 3)


class TestDeriveIdentity:
    @pytest.mark.parametrize("kind", KINDS)
    def test_matches_construction(self, kind):
        for n in range(1, 11):
            assert derive_identity(kind, n) == make_identity(kind, n).negpart_coefs


class TestAddScaledIdentity:
    def test_parity_plus_e(self):
        spec = SymmetricSpec(n=5, k=[l % 2 for l in range(6)])
        rep = add_scaled_identity(fix_representation(spec), make_identity("E", 5), 1)
        assert [t.alpha for t in rep.alphas] == [0, 0, 4, 0, 4, 0]
        assert rep_values(rep) == list(spec.k)

    def test_half_family_with_eprime(self):
        spec = SymmetricSpec(n=4, k=[0, 0, 0, 0, 1])
        rep = add_scaled_identity(alphas_half(spec), make_identity("Eprime", 4), 1)
        assert [t.alpha for t in rep.alphas] == [0, 0, 2, 0, 0]
        assert rep.affine_quadratic == Fraction(1, 2)
        assert rep_values(rep) == list(spec.k)

    def test_zero_multiplier_is_noop(self):
        rep = alphas_half(SymmetricSpec(n=3, k=[1, 2, 3, 4]))
        assert add_scaled_identity(rep, make_identity("E", 3), 0) is rep

    def test_eps_family_mismatch(self):
        rep = alphas_half(SymmetricSpec(n=3, k=[0, 1, 0, 1]))
        with pytest.raises(StructuralError):
            add_scaled_identity(rep, make_identity("E", 3), 1)

    def test_dimension_mismatch(self):
        rep = alphas_half(SymmetricSpec(n=3, k=[0, 1, 0, 1]))
        with pytest.raises(StructuralError):
            add_scaled_identity(rep, make_identity("Eprime", 4), 1)

    def test_rational_multiplier(self):
        spec = SymmetricSpec(n=3, k=[2, -1, 0, 5])
        rep = add_scaled_identity(alphas_half(spec), make_identity("Edoubleprime", 3), "-7/3")
        assert rep_values(rep) == list(spec.k)


class TestIdentityPreservesValues:
    @given(
        st.integers(min_value=1, max_value=8).flatmap(
            lambda n: st.lists(st.fractions(min_value=-20, max_value=20, max_denominator=10), min_size=n + 1, max_size=n + 1)
        ),
        st.sampled_from(KINDS),
        st.fractions(min_value=-50, max_value=50, max_denominator=12),
    )
    @hyp_settings(max_examples=150, deadline=None)
    def test_random_rep_identity_and_scalar(self, k, kind, c):
        spec = SymmetricSpec(n=len(k) - 1, k=k)
        rep = fix_representation(spec) if kind is IdentityKind.E else alphas_half(spec)
        shifted = add_scaled_identity(rep, make_identity(kind, spec.n), c)
        assert rep_values(shifted) == rep_values(rep) == list(spec.k)
