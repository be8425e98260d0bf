"""Wedge algebra, the two differentials, projections, variational
operators, Lepage forms, Lie derivatives and currents."""

import random
from fractions import Fraction

import pytest

from gvc import (
    ContactDerivation,
    EVEN,
    GvcError,
    Lagrangian,
    ODD,
    d_h,
    d_v,
    euler_lagrange,
    exterior_d,
    first_variational_residual,
    interior,
    interior_dx,
    is_variationally_trivial,
    lepage_equivalent,
    lie_derivative,
    noether_current,
    omega_lambda,
    omega_pair,
    project_rho,
    superpotential_residual,
    variational_delta,
    volume,
)
from gvc.bicomplex import Form

from util import make_context, random_form, random_poly, random_vertical


class TestWedge:
    def test_horizontal_one_forms_anticommute(self):
        ctx = make_context(2)
        dx0, dx1 = Form.dx(ctx, 0), Form.dx(ctx, 1)
        assert dx0.wedge(dx1) == -(dx1.wedge(dx0))
        assert dx0.wedge(dx0).is_zero()

    def test_odd_contact_forms_commute_and_square(self):
        ctx = make_context(2)
        th = Form.theta(ctx, "q1")
        other = Form.theta(ctx, "q2")
        assert th.wedge(other) == other.wedge(th)
        assert not th.wedge(th).is_zero()

    def test_even_contact_forms_anticommute(self):
        ctx = make_context(2)
        th = Form.theta(ctx, "s1")
        assert th.wedge(th).is_zero()

    def test_volume_overflow(self):
        ctx = make_context(2)
        assert volume(ctx).wedge(Form.dx(ctx, 0)).is_zero()

    def test_associativity_random(self):
        ctx = make_context(2)
        rng = random.Random(41)
        for _ in range(25):
            a = random_form(rng, ctx, rng.randint(0, 1), rng.randint(0, 1))
            b = random_form(rng, ctx, rng.randint(0, 1), rng.randint(0, 1))
            c = random_form(rng, ctx, rng.randint(0, 1), rng.randint(0, 1))
            assert (a.wedge(b)).wedge(c) == a.wedge(b.wedge(c))

    def test_sign_rule_on_homogeneous_pairs(self):
        ctx = make_context(2)
        rng = random.Random(42)
        for _ in range(30):
            k1, h1 = rng.randint(0, 1), rng.randint(0, 1)
            k2, h2 = rng.randint(0, 1), rng.randint(0, 1)
            for p1 in (EVEN, ODD):
                for p2 in (EVEN, ODD):
                    a = random_form(rng, ctx, k1, h1, terms=1)
                    b = random_form(rng, ctx, k2, h2, terms=1)
                    a = Form(ctx, {w: f.even_part() if p1 == EVEN else f.odd_part()
                                   for w, f in a.terms.items()})
                    b = Form(ctx, {w: f.even_part() if p2 == EVEN else f.odd_part()
                                   for w, f in b.terms.items()})
                    # parities of the full terms include the contact legs
                    def total_parity(form):
                        ps = set()
                        for w, f in form.terms.items():
                            fp = f.parity()
                            wp = sum(1 for ell in w if ell[0] == 1
                                     and ell[1].parity == ODD) % 2
                            ps.add((fp + wp) % 2)
                        return ps.pop() if len(ps) == 1 else None

                    pa, pb = total_parity(a), total_parity(b)
                    if pa is None or pb is None:
                        continue
                    deg_sign = (-1) ** ((k1 + h1) * (k2 + h2))
                    par_sign = (-1) ** (pa * pb)
                    lhs = a.wedge(b)
                    rhs = (b.wedge(a)).scale(deg_sign * par_sign)
                    assert lhs == rhs


class TestDifferentials:
    def test_dh_on_field(self):
        ctx = make_context(2)
        got = d_h(Form.from_poly(ctx.var("s1")))
        want = Form.dx(ctx, 0).times_poly(ctx.var("s1", 0)) + \
            Form.dx(ctx, 1).times_poly(ctx.var("s1", 1))
        assert got == want

    def test_dh_on_contact_leg(self):
        ctx = make_context(2)
        got = d_h(Form.theta(ctx, "s1"))
        want = Form.dx(ctx, 0).wedge(Form.theta(ctx, "s1", (0,))) + \
            Form.dx(ctx, 1).wedge(Form.theta(ctx, "s1", (1,)))
        assert got == want

    def test_dv_on_field(self):
        ctx = make_context(2)
        assert d_v(Form.from_poly(ctx.var("s1"))) == Form.theta(ctx, "s1")

    def test_dv_leibniz_with_parity_sign(self):
        ctx = make_context(2)
        p = ctx.var("s1", 0) * ctx.var("s2")
        got = d_v(Form.from_poly(p))
        want = Form.theta(ctx, "s1", (0,)).times_poly(ctx.var("s2")) + \
            Form.theta(ctx, "s2").times_poly(ctx.var("s1", 0))
        assert got == want

    def test_nilpotency_random(self):
        rng = random.Random(43)
        for dim in (2, 3):
            ctx = make_context(dim)
            for _ in range(20):
                phi = random_form(rng, ctx, rng.randint(0, 2), rng.randint(0, dim - 1),
                                  max_order=2)
                assert d_h(d_h(phi)).is_zero()
                assert d_v(d_v(phi)).is_zero()
                assert (d_h(d_v(phi)) + d_v(d_h(phi))).is_zero()
                assert exterior_d(exterior_d(phi)).is_zero()


class TestProjection:
    def test_fixed_point(self):
        ctx = make_context(1)
        phi = Form.theta(ctx, "s1").wedge(volume(ctx).times_poly(ctx.var("s1", 0)))
        assert project_rho(phi) == phi

    def test_one_integration_by_parts(self):
        ctx = make_context(1)
        f = ctx.var("s1") * ctx.var("s1", 0)
        phi = Form.theta(ctx, "s1", (0,)).wedge(volume(ctx).times_poly(f))
        from gvc.jets import total_derivative
        want = -Form.theta(ctx, "s1").wedge(
            volume(ctx).times_poly(total_derivative(0, f)))
        assert project_rho(phi) == want

    def test_annihilates_horizontal_differentials(self):
        rng = random.Random(44)
        ctx = make_context(2)
        for _ in range(20):
            psi = random_form(rng, ctx, 1, ctx.dim - 1, max_order=2)
            assert project_rho(d_h(psi)).is_zero() or d_h(psi).is_zero()

    def test_wrong_bidegree_rejected(self):
        ctx = make_context(2)
        with pytest.raises(GvcError):
            project_rho(Form.theta(ctx, "s1"))
        with pytest.raises(GvcError):
            project_rho(volume(ctx))


class TestVariationalOperator:
    def test_matches_euler_lagrange_assembly(self):
        ctx = make_context(1)
        L = Lagrangian(Fraction(1, 2) * ctx.var("s1", 0) * ctx.var("s1", 0)
                       + ctx.var("q1") * ctx.var("q1", 0))
        assert variational_delta(L.form) == euler_lagrange(L).as_form()

    def test_delta_squared_zero(self):
        rng = random.Random(45)
        ctx = make_context(2)
        for _ in range(12):
            phi = random_form(rng, ctx, rng.randint(0, 1), ctx.dim, max_order=1)
            assert variational_delta(variational_delta(phi)).is_zero()

    def test_delta_kills_horizontal_exact(self):
        rng = random.Random(46)
        ctx = make_context(2)
        for _ in range(12):
            xi = random_form(rng, ctx, 0, ctx.dim - 1, max_order=1)
            assert variational_delta(d_h(xi)).is_zero()


class TestEulerLagrange:
    def test_free_field(self):
        ctx = make_context(1, evens=1, odds=0)
        L = Lagrangian(Fraction(1, 2) * ctx.var("s1", 0) * ctx.var("s1", 0))
        el = euler_lagrange(L)
        assert el.component("s1") == -ctx.var("s1", 0, 0)

    def test_horizontal_exact_is_trivial(self):
        rng = random.Random(47)
        ctx = make_context(2)
        for _ in range(10):
            xi = random_form(rng, ctx, 0, ctx.dim - 1, max_order=1)
            density = d_h(xi).terms.get(tuple(volume(ctx).terms)[0])
            if density is None:
                continue
            assert is_variationally_trivial(Lagrangian(density))

    def test_single_exact_density(self):
        ctx = make_context(2, evens=1, odds=0)
        from gvc.jets import total_derivative
        L = Lagrangian(total_derivative(0, ctx.var("s1") * ctx.var("s1")))
        assert is_variationally_trivial(L)

    def test_nonzero_field_equation_not_trivial(self):
        ctx = make_context(1, evens=1, odds=0)
        L = Lagrangian(Fraction(1, 2) * ctx.var("s1", 0) * ctx.var("s1", 0))
        assert not is_variationally_trivial(L)

    def test_zero_density_trivial(self):
        ctx = make_context(1)
        assert is_variationally_trivial(Lagrangian(ctx.zero()))


class TestLepage:
    def test_free_field_form(self):
        ctx = make_context(1, evens=1, odds=0)
        L = Lagrangian(Fraction(1, 2) * ctx.var("s1", 0) * ctx.var("s1", 0))
        xi = lepage_equivalent(L)
        want = L.form + Form.theta(ctx, "s1").wedge(
            omega_lambda(ctx, 0).times_poly(ctx.var("s1", 0)))
        assert xi == want

    def test_jetless_density_unchanged(self):
        ctx = make_context(2)
        L = Lagrangian(ctx.var("s1") * ctx.var("s1"))
        assert lepage_equivalent(L) == L.form

    def test_second_order_rejected(self):
        ctx = make_context(1, evens=1, odds=0)
        L = Lagrangian(ctx.var("s1", 0, 0))
        with pytest.raises(GvcError):
            lepage_equivalent(L)


class TestLieDerivative:
    def test_density_rule_for_vertical(self):
        rng = random.Random(48)
        ctx = make_context(2)
        from gvc.jets import prolong_apply
        for _ in range(10):
            for parity in (EVEN, ODD):
                theta = random_vertical(rng, ctx, parity)
                f = random_poly(rng, ctx, max_order=1)
                got = lie_derivative(theta, volume(ctx).times_poly(f))
                want = volume(ctx).times_poly(prolong_apply(theta, f))
                assert got == want

    def test_product_rule_with_parity_sign(self):
        rng = random.Random(49)
        ctx = make_context(2)
        for _ in range(10):
            for parity in (EVEN, ODD):
                theta = random_vertical(rng, ctx, parity)
                a = random_form(rng, ctx, 1, 0, terms=1, max_order=1)
                ap = _form_parity(a)
                if ap is None:
                    continue
                b = random_form(rng, ctx, 0, 1, terms=1, max_order=1)
                lhs = lie_derivative(theta, a.wedge(b))
                sign = -1 if (parity and ap) else 1
                rhs = lie_derivative(theta, a).wedge(b) + \
                    (a.wedge(lie_derivative(theta, b))).scale(sign)
                assert lhs == rhs

    def test_zero_derivation(self):
        ctx = make_context(2)
        theta = ContactDerivation(ctx, {}, EVEN)
        phi = volume(ctx).times_poly(ctx.var("s1"))
        assert lie_derivative(theta, phi).is_zero()


def _form_parity(form):
    ps = set()
    for w, f in form.terms.items():
        fp = f.parity()
        if fp is None:
            return None
        wp = sum(1 for ell in w if ell[0] == 1 and ell[1].parity == ODD) % 2
        ps.add((fp + wp) % 2)
    if not ps:
        return EVEN
    return ps.pop() if len(ps) == 1 else None


class TestVariationalFormula:
    def test_constant_shift_on_free_field(self):
        ctx = make_context(1, evens=1, odds=0)
        L = Lagrangian(Fraction(1, 2) * ctx.var("s1", 0) * ctx.var("s1", 0))
        shift = ContactDerivation(ctx, {"s1": ctx.one()}, EVEN)
        assert first_variational_residual(shift, L).is_zero()

    def test_zero_derivation(self):
        ctx = make_context(1)
        L = Lagrangian(ctx.var("s1") * ctx.var("q1") * ctx.var("q1", 0))
        theta = ContactDerivation(ctx, {}, EVEN)
        assert first_variational_residual(theta, L).is_zero()

    def test_random_first_order(self):
        rng = random.Random(50)
        ctx = make_context(2)
        for _ in range(10):
            for parity in (EVEN, ODD):
                L = Lagrangian(random_poly(rng, ctx, terms=3, max_order=1))
                theta = random_vertical(rng, ctx, parity)
                assert first_variational_residual(theta, L).is_zero()


class TestNoetherCurrent:
    def test_shift_current_free_field(self):
        ctx = make_context(1, evens=1, odds=0)
        L = Lagrangian(Fraction(1, 2) * ctx.var("s1", 0) * ctx.var("s1", 0))
        shift = ContactDerivation(ctx, {"s1": ctx.one()}, EVEN)
        J = noether_current(shift, L)
        assert J == Form.from_poly(-ctx.var("s1", 0))

    def test_requires_exact_symmetry(self):
        ctx = make_context(1, evens=1, odds=0)
        L = Lagrangian(ctx.var("s1") * ctx.var("s1"))
        shift = ContactDerivation(ctx, {"s1": ctx.one()}, EVEN)
        with pytest.raises(GvcError):
            noether_current(shift, L)

    def test_off_shell_identity(self):
        ctx = make_context(1, evens=1, odds=0)
        L = Lagrangian(Fraction(1, 2) * ctx.var("s1", 0) * ctx.var("s1", 0))
        shift = ContactDerivation(ctx, {"s1": ctx.one()}, EVEN)
        J = noether_current(shift, L)
        assert d_h(J) == interior(shift, variational_delta(L.form))

    def test_zero_derivation_zero_current(self):
        ctx = make_context(1)
        L = Lagrangian(ctx.var("s1", 0) * ctx.var("s1", 0))
        theta = ContactDerivation(ctx, {}, EVEN)
        assert noether_current(theta, L).is_zero()


class TestSuperpotential:
    def test_zero_everything(self):
        ctx = make_context(2)
        el = euler_lagrange(Lagrangian(ctx.zero()))
        res = superpotential_residual(Form.zero(ctx), el, [], Form.zero(ctx))
        assert res.is_zero()

    def test_wrong_degree_rejected(self):
        ctx = make_context(2)
        el = euler_lagrange(Lagrangian(ctx.zero()))
        with pytest.raises(GvcError):
            superpotential_residual(Form.zero(ctx), el, [], volume(ctx))

    def test_horizontal_interior_products(self):
        ctx = make_context(3)
        w = volume(ctx)
        assert interior_dx(0, w) == omega_lambda(ctx, 0)
        assert interior_dx(1, omega_lambda(ctx, 0)) == omega_pair(ctx, 1, 0)
        assert omega_pair(ctx, 1, 0) == -omega_pair(ctx, 0, 1)
        # dx^lam ^ omega_lam = volume for every lam
        for lam in range(3):
            assert Form.dx(ctx, lam).wedge(omega_lambda(ctx, lam)) == w
