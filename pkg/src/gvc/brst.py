"""Field-antifield machinery: Noether identities, the Koszul-Tate
differential, gauge and BRST derivations, the antibracket and the
classical master equation.

Internally every derivation acts through left graded derivatives; the
operators that are defined as right derivations (Koszul-Tate, the
antifield slot of the antibracket) use the right-derivative convention
directly, so no hidden sign adapters are spread around the code.
"""

from fractions import Fraction

from .grassmann import EVEN, ODD, GvcError, ParityError
from .jets import ContactDerivation, iterated_derivative, prolong_apply
from .bicomplex import (
    Lagrangian,
    is_variationally_trivial,
    variational_derivative,
)


class NoetherOperator:
    """Rows of total differential operators annihilating the variational
    derivatives: row r is a list of (coefficient, generator, multi-index)."""

    __slots__ = ("ctx", "rows")

    def __init__(self, ctx, rows):
        self.ctx = ctx
        self.rows = {}
        for label, entries in rows.items():
            clean = []
            for coeff, gen, index in entries:
                if isinstance(gen, str):
                    gen = ctx.generator(gen)
                clean.append((coeff, gen, tuple(sorted(index))))
            self.rows[label] = clean

    def labels(self):
        return sorted(self.rows)

    def row_parity(self, label):
        """Parity of the row operator acting on the variational covector."""
        ps = set()
        for coeff, gen, _ in self.rows[label]:
            if coeff.is_zero():
                continue
            ps.add((coeff.require_parity() + gen.parity) % 2)
        if len(ps) > 1:
            raise ParityError("Noether row %r mixes parities" % (label,))
        return ps.pop() if ps else EVEN


def noether_residuals(op, el):
    """Apply each row to the variational derivatives; zero rows are the
    valid identities.  Rows must reference field generators."""
    out = {}
    for label, entries in op.rows.items():
        res = op.ctx.zero()
        for coeff, gen, index in entries:
            if gen.kind not in ("even-field", "odd-field"):
                raise GvcError(
                    "identity row %r references non-field %r" % (label, gen.name))
            comp = el.component(gen)
            if comp.is_zero():
                continue
            res += coeff * iterated_derivative(index, comp)
        out[label] = res
    return out


class KoszulTate:
    """Odd right derivation sending antifields to variational derivatives
    and degree-two antifields to the Noether rows rewritten on antifields."""

    __slots__ = ("ctx", "values")

    def __init__(self, ctx, values):
        self.ctx = ctx
        self.values = dict(values)

    def value(self, gen):
        if isinstance(gen, str):
            gen = self.ctx.generator(gen)
        return self.values.get(gen, self.ctx.zero())

    def apply(self, p):
        """Right-derivation action: sum of right partials times prolonged
        values, multiplied from the right."""
        out = self.ctx.zero()
        for v in p.variables():
            val = self.values.get(v.gen)
            if val is None:
                continue
            out += p.deriv(v, side="right") * iterated_derivative(v.index, val)
        return out

    def nilpotency_residuals(self):
        return {gen.name: self.apply(val) for gen, val in self.values.items()}


def koszul_tate(op, el, antifield_of, noether_antifield_of):
    """Assemble the Koszul-Tate derivation from a Noether operator.

    `antifield_of` maps each field generator entering the variational
    derivatives to its antifield; `noether_antifield_of` maps row labels
    to degree-two antifields.  Nilpotency on generators is equivalent to
    all Noether residuals vanishing.
    """
    ctx = op.ctx
    values = {}
    for gen, comp in el.components.items():
        try:
            bar = antifield_of[gen]
        except KeyError:
            raise GvcError("missing antifield registration for %r" % (gen.name,))
        values[bar] = comp
    for label, entries in op.rows.items():
        try:
            nbar = noether_antifield_of[label]
        except KeyError:
            raise GvcError("missing degree-two antifield for row %r" % (label,))
        acc = ctx.zero()
        for coeff, gen, index in entries:
            try:
                bar = antifield_of[gen]
            except KeyError:
                raise GvcError("missing antifield registration for %r" % (gen.name,))
            acc += coeff * ctx.jet(bar, index).poly()
        values[nbar] = acc
    return KoszulTate(ctx, values)


def brst_extend(u, gamma):
    """Extend a gauge derivation by ghost-sector components.

    `gamma` maps ghost generators to antifield-free polynomials in the
    ghost sector; the result is the candidate BRST derivation, returned
    with its per-generator nilpotency residuals.
    """
    ctx = u.ctx
    comps = dict(u.components)
    for gen, val in gamma.items():
        if isinstance(gen, str):
            gen = ctx.generator(gen)
        if gen.kind != "ghost":
            raise GvcError("ghost-sector component on non-ghost %r" % (gen.name,))
        for v in val.variables():
            if v.gen.kind not in ("ghost",):
                raise GvcError("ghost-sector terms must be built from ghosts only")
        if gen in comps:
            comps[gen] = comps[gen] + val
        else:
            comps[gen] = val
    s = ContactDerivation(ctx, comps, ODD, ghost_shift=u.ghost_shift or 1)
    return s, nilpotency_residuals(s)


def nilpotency_residuals(theta):
    """theta(theta(z)) for every generator z the derivation moves."""
    out = {}
    for gen in sorted(theta.components, key=lambda g: g.key):
        out[gen.name] = prolong_apply(theta, theta.components[gen])
    return out


def _partner_tables(pairs):
    bar_of = {}
    for z, zbar in pairs.items():
        bar_of[z] = zbar
    return bar_of


def antibracket(L1, L2, pairs):
    """Odd bracket of two densities over the field-antifield pairing.

    Uses the right variational derivative in the antifield slot and the
    left one in the field slot; for parity-homogeneous arguments the
    relative sign between the two cross terms is +1.
    """
    ctx = L1.ctx
    d1, d2 = L1.density, L2.density
    d1.require_parity()
    d2.require_parity()
    bar_of = _partner_tables(pairs)
    known = set(bar_of) | set(bar_of.values())
    for density in (d1, d2):
        for v in density.variables():
            if v.gen.kind == "coordinate":
                continue
            if v.gen not in known:
                raise GvcError("missing antifield partner for %r" % (v.gen.name,))
    out = ctx.zero()
    for z, zbar in sorted(bar_of.items(), key=lambda it: it[0].key):
        r1 = variational_derivative(d1, zbar, side="right")
        if not r1.is_zero():
            l2 = variational_derivative(d2, z, side="left")
            out += r1 * l2
        r2 = variational_derivative(d2, zbar, side="right")
        if not r2.is_zero():
            l1 = variational_derivative(d1, z, side="left")
            out += r2 * l1
    return Lagrangian(out)


def master_derivation(L, pairs):
    """The odd derivation generated by an even density through the
    antibracket; nilpotency is one face of the master equation."""
    ctx = L.ctx
    if L.density.require_parity() != EVEN:
        raise ParityError("master equation is checked for even densities")
    comps = {}
    for z, zbar in pairs.items():
        sign = Fraction(-1) if z.parity == EVEN else Fraction(1)
        cz = variational_derivative(L.density, zbar, side="left") * sign
        czbar = variational_derivative(L.density, z, side="left") * sign
        if not cz.is_zero():
            comps[z] = cz
        if not czbar.is_zero():
            comps[zbar] = czbar
    return ContactDerivation(ctx, comps, ODD)


class MasterReport:
    """Outcome of the classical master equation check."""

    __slots__ = ("bracket", "bracket_trivial", "derivation_residuals")

    def __init__(self, bracket, bracket_trivial, derivation_residuals):
        self.bracket = bracket
        self.bracket_trivial = bracket_trivial
        self.derivation_residuals = derivation_residuals

    @property
    def derivation_nilpotent(self):
        return all(p.is_zero() for p in self.derivation_residuals.values())

    @property
    def ok(self):
        return self.bracket_trivial and self.derivation_nilpotent


def master_equation_check(L, pairs):
    """Check {L, L} is variationally trivial and the generated odd
    derivation is nilpotent on generators; the two must agree."""
    bracket = antibracket(L, L, pairs)
    trivial = is_variationally_trivial(bracket)
    theta = master_derivation(L, pairs)
    residuals = nilpotency_residuals(theta)
    return MasterReport(bracket, trivial, residuals)


def proper_solution(L, s, pairs):
    """Extend a density by the antifield pairing of a nilpotent extension:
    L + sum_a s(z^a) zbar_a."""
    ctx = L.ctx
    res = nilpotency_residuals(s)
    bad = [name for name, p in res.items() if not p.is_zero()]
    if bad:
        raise GvcError("extension is not nilpotent on %s" % ", ".join(sorted(bad)))
    density = L.density
    for z, comp in s.components.items():
        try:
            zbar = pairs[z]
        except KeyError:
            raise GvcError("missing antifield partner for %r" % (z.name,))
        density = density + comp * ctx.jet(zbar, ()).poly()
    return Lagrangian(density)
