"""Multi-indices, total derivatives and contact derivations."""

import random

import pytest

from gvc import (
    ContactDerivation,
    EVEN,
    GvcError,
    MultiIndex,
    ODD,
    ParityError,
    iterated_derivative,
    prolong_apply,
    superbracket,
    total_derivative,
)

from util import make_context, random_poly, random_vertical


class TestMultiIndex:
    def test_order_insensitive(self):
        assert MultiIndex(0, 1) == MultiIndex(1, 0)
        assert hash(MultiIndex(2, 0, 2)) == hash(MultiIndex(0, 2, 2))

    def test_counts_and_length(self):
        mi = MultiIndex(1, 0, 1)
        assert len(mi) == 3
        assert mi.counts == {0: 1, 1: 2}

    def test_append(self):
        assert MultiIndex(1) + MultiIndex(0) == MultiIndex(0, 1)

    def test_empty(self):
        assert len(MultiIndex()) == 0


class TestTotalDerivative:
    def test_coordinate_delta(self):
        ctx = make_context(2)
        x0 = ctx.var("x0")
        assert total_derivative(0, x0) == ctx.one()
        assert total_derivative(1, x0).is_zero()

    def test_field_raises_to_jet(self):
        ctx = make_context(2)
        assert total_derivative(0, ctx.var("s1")) == ctx.var("s1", 0)
        assert total_derivative(1, ctx.var("q1", 0)) == ctx.var("q1", 0, 1)

    def test_even_derivation_leibniz(self):
        ctx = make_context(2)
        rng = random.Random(21)
        for _ in range(40):
            p = random_poly(rng, ctx)
            q = random_poly(rng, ctx)
            lam = rng.randrange(2)
            lhs = total_derivative(lam, p * q)
            rhs = total_derivative(lam, p) * q + p * total_derivative(lam, q)
            assert (lhs - rhs).is_zero()

    def test_totals_commute(self):
        ctx = make_context(2)
        rng = random.Random(22)
        for _ in range(30):
            f = random_poly(rng, ctx)
            d01 = total_derivative(0, total_derivative(1, f))
            d10 = total_derivative(1, total_derivative(0, f))
            assert (d01 - d10).is_zero()


class TestIterated:
    def test_empty_is_identity(self):
        ctx = make_context(2)
        p = ctx.var("s1") * ctx.var("q1")
        assert iterated_derivative((), p) == p

    def test_repeated_index(self):
        ctx = make_context(2)
        assert iterated_derivative((1, 1), ctx.var("s1")) == ctx.var("s1", 1, 1)

    def test_matches_two_single_steps(self):
        ctx = make_context(2)
        rng = random.Random(23)
        for _ in range(20):
            p = random_poly(rng, ctx) * random_poly(rng, ctx)
            two = iterated_derivative(MultiIndex(0, 1), p)
            steps = total_derivative(0, total_derivative(1, p))
            assert (two - steps).is_zero()


class TestContactDerivation:
    def test_constant_shift(self):
        ctx = make_context(1, evens=1, odds=0)
        shift = ContactDerivation(ctx, {"s1": ctx.one()}, EVEN)
        p = ctx.var("s1", 0) * ctx.var("s1")
        assert prolong_apply(shift, p) == ctx.var("s1", 0)

    def test_component_parity_enforced(self):
        ctx = make_context(1)
        with pytest.raises(ParityError):
            ContactDerivation(ctx, {"s1": ctx.var("q1")}, EVEN)

    def test_no_horizontal_components(self):
        ctx = make_context(1)
        with pytest.raises(GvcError):
            ContactDerivation(ctx, {"x0": ctx.one()}, EVEN)

    def test_prolongation_commutes_with_totals(self):
        ctx = make_context(2)
        rng = random.Random(24)
        for _ in range(20):
            for parity in (EVEN, ODD):
                theta = random_vertical(rng, ctx, parity)
                f = random_poly(rng, ctx, max_order=2)
                lam = rng.randrange(2)
                lhs = prolong_apply(theta, total_derivative(lam, f))
                rhs = total_derivative(lam, prolong_apply(theta, f))
                assert (lhs - rhs).is_zero()

    def test_gauge_style_component(self):
        # derivative-of-parameter plus field-twist component on one field
        ctx = make_context(2, evens=2, odds=0)
        xi, a = "s1", "s2"
        comp = ctx.var(xi, 1) + ctx.var(a) * ctx.var(xi)
        theta = ContactDerivation(ctx, {a: comp}, EVEN)
        got = prolong_apply(theta, ctx.var(a, 0))
        want = ctx.var(xi, 0, 1) + ctx.var(a, 0) * ctx.var(xi) + ctx.var(a) * ctx.var(xi, 0)
        assert (got - want).is_zero()


class TestSuperbracket:
    def test_even_constant_self_bracket(self):
        ctx = make_context(1, evens=1, odds=0)
        theta = ContactDerivation(ctx, {"s1": ctx.one()}, EVEN)
        assert superbracket(theta, theta).is_zero()

    def test_odd_self_bracket_is_twice_square(self):
        ctx = make_context(2)
        rng = random.Random(25)
        for _ in range(15):
            theta = random_vertical(rng, ctx, ODD)
            sq = superbracket(theta, theta)
            p = random_poly(rng, ctx)
            lhs = prolong_apply(theta, prolong_apply(theta, p))
            rhs = prolong_apply(sq, p)
            assert (2 * lhs - rhs).is_zero()

    def test_nilpotency_criterion(self):
        # an odd derivation squares to zero exactly when it annihilates
        # its own components
        ctx = make_context(1, evens=1, odds=2)
        rng = random.Random(27)
        nil = ContactDerivation(ctx, {"q1": ctx.var("s1")}, ODD)
        assert prolong_apply(nil, nil.component("q1")).is_zero()
        for _ in range(10):
            p = random_poly(rng, ctx)
            assert prolong_apply(nil, prolong_apply(nil, p)).is_zero()
        broken = ContactDerivation(ctx, {"q1": ctx.var("s1"), "s1": ctx.var("q2")},
                                   ODD)
        assert not prolong_apply(broken, broken.component("q1")).is_zero()
        q1 = ctx.var("q1")
        assert not prolong_apply(broken, prolong_apply(broken, q1)).is_zero()

    def test_bracket_parity_and_leibniz(self):
        ctx = make_context(2)
        rng = random.Random(26)
        for _ in range(10):
            t1 = random_vertical(rng, ctx, ODD)
            t2 = random_vertical(rng, ctx, EVEN)
            br = superbracket(t1, t2)
            assert br.parity == ODD
            p = random_poly(rng, ctx)
            lhs = prolong_apply(t1, prolong_apply(t2, p)) - \
                prolong_apply(t2, prolong_apply(t1, p))
            assert (lhs - prolong_apply(br, p)).is_zero()
