"""Shared helpers for the test suite: deterministic random polynomials
and forms over small field contents."""

import random
from fractions import Fraction

from gvc import Context, EVEN, ODD
from gvc.bicomplex import Form, dx_letter, theta_letter, letter_wedge_left


def make_context(dim, evens=2, odds=2, max_jet_order=None):
    ctx = Context(dim, max_jet_order=max_jet_order)
    for i in range(evens):
        ctx.add_generator("s%d" % (i + 1), "even-field", EVEN)
    for i in range(odds):
        ctx.add_generator("q%d" % (i + 1), "odd-field", ODD)
    return ctx


def field_generators(ctx):
    return [g for g in ctx.generators.values() if g.kind != "coordinate"]


def random_jet(rng, ctx, gen, max_order):
    order = rng.randint(0, max_order)
    index = tuple(rng.randrange(ctx.dim) for _ in range(order))
    return ctx.jet(gen, index)


def random_monomial(rng, ctx, max_order=2, allow_coords=True):
    """One normal monomial as (coefficient, factor list)."""
    coeff = Fraction(rng.choice([1, -1]) * rng.randint(1, 3), rng.randint(1, 2))
    factors = []
    gens = field_generators(ctx)
    evens = [g for g in gens if g.parity == EVEN]
    odds = [g for g in gens if g.parity == ODD]
    if allow_coords and rng.random() < 0.3:
        factors.append(ctx.coordinate(rng.randrange(ctx.dim)))
    for _ in range(rng.randint(0, 2)):
        if evens:
            factors.append(random_jet(rng, ctx, rng.choice(evens), max_order))
    odd_vars = set()
    for _ in range(rng.randint(0, 2)):
        if odds:
            v = random_jet(rng, ctx, rng.choice(odds), max_order)
            odd_vars.add(v)
    factors.extend(sorted(odd_vars, key=lambda v: v.key))
    return coeff, factors


def random_poly(rng, ctx, terms=3, max_order=2, parity=None, allow_coords=True):
    out = ctx.zero()
    for _ in range(terms):
        coeff, factors = random_monomial(rng, ctx, max_order, allow_coords)
        mono = ctx.product(coeff, factors)
        if parity is not None:
            mono = mono.even_part() if parity == EVEN else mono.odd_part()
        out = out + mono
    return out


def random_form(rng, ctx, contact, horizontal, terms=2, max_order=2,
                coeff_order=2):
    """Random form of the requested bidegree (zero is possible)."""
    out = Form.zero(ctx)
    gens = field_generators(ctx)
    for _ in range(terms):
        word_form = Form.from_poly(
            random_poly(rng, ctx, terms=2, max_order=coeff_order))
        dxs = rng.sample(range(ctx.dim), horizontal)
        for lam in sorted(dxs):
            word_form = letter_wedge_left(dx_letter(lam), word_form)
        for _ in range(contact):
            v = random_jet(rng, ctx, rng.choice(gens), max_order)
            word_form = letter_wedge_left(theta_letter(v), word_form)
        out = out + word_form
    return out


def random_vertical(rng, ctx, parity, max_order=1):
    """Random vertical contact derivation of the given parity."""
    from gvc import ContactDerivation

    comps = {}
    for gen in field_generators(ctx):
        want = (gen.parity + parity) % 2
        p = random_poly(rng, ctx, terms=2, max_order=max_order, parity=want)
        if not p.is_zero():
            comps[gen] = p
    return ContactDerivation(ctx, comps, parity)
