"""Jet bookkeeping: symmetric multi-indices, total derivatives and the
prolongation of vertical contact derivations.

A multi-index is a multiset of spacetime directions; total derivatives
commute, so iterated derivatives only depend on the multiset.  A contact
derivation is determined by its components on the generating basis; it
acts on jets of a field through total derivatives of the component.
"""

from .grassmann import GvcError, ParityError


class MultiIndex:
    """Multiset of spacetime indices, order-insensitive by construction."""

    __slots__ = ("indices",)

    def __init__(self, *indices):
        if len(indices) == 1 and isinstance(indices[0], (tuple, list, MultiIndex)):
            indices = tuple(indices[0]) if not isinstance(indices[0], MultiIndex) else indices[0].indices
        self.indices = tuple(sorted(indices))

    @property
    def counts(self):
        out = {}
        for lam in self.indices:
            out[lam] = out.get(lam, 0) + 1
        return out

    def __len__(self):
        return len(self.indices)

    def __iter__(self):
        return iter(self.indices)

    def __add__(self, other):
        return MultiIndex(self.indices + tuple(other))

    def __eq__(self, other):
        if isinstance(other, MultiIndex):
            return self.indices == other.indices
        return self.indices == tuple(sorted(other))

    def __hash__(self):
        return hash(self.indices)

    def __repr__(self):
        return "MultiIndex%r" % (self.indices,)


def _as_index(index):
    if isinstance(index, MultiIndex):
        return index.indices
    if isinstance(index, int):
        return (index,)
    return tuple(sorted(index))


def total_derivative(lam, p):
    """d_lam = partial_lam + sum over jets s^A_{lam+Lambda} d/d(s^A_Lambda)."""
    ctx = p.ctx
    out = ctx.zero()
    x = ctx.coordinate(lam)
    d = p.deriv(x)
    if not d.is_zero():
        out += d
    for v in p.variables():
        if v.gen.kind == "coordinate":
            continue
        raised = ctx.jet(v.gen, v.index + (lam,))
        out += raised.poly() * p.deriv(v)
    return out


def iterated_derivative(index, p):
    """d_Lambda, the composition of total derivatives over a multi-index."""
    for lam in _as_index(index):
        p = total_derivative(lam, p)
    return p


class ContactDerivation:
    """A vertical generalized vector field given by its components.

    `components` maps generators to polynomials; the derivation acts on
    the jet s^A_Lambda by the Lambda-th total derivative of the component
    on s^A, which is the infinite prolongation of the underlying field
    transformation.
    """

    __slots__ = ("ctx", "components", "parity", "ghost_shift")

    def __init__(self, ctx, components, parity, ghost_shift=0):
        self.ctx = ctx
        self.components = {}
        self.parity = parity
        self.ghost_shift = ghost_shift
        for gen, comp in components.items():
            if isinstance(gen, str):
                gen = ctx.generator(gen)
            if gen.name not in ctx.generators:
                raise GvcError("component on unregistered field %r" % (gen.name,))
            if gen.kind == "coordinate":
                raise GvcError("contact derivations here are vertical; no d/dx components")
            if comp.is_zero():
                continue
            cp = comp.parity()
            if cp is None or cp != (gen.parity + parity) % 2:
                raise ParityError(
                    "component on %s must have parity %d"
                    % (gen.name, (gen.parity + parity) % 2)
                )
            self.components[gen] = comp

    def component(self, gen):
        if isinstance(gen, str):
            gen = self.ctx.generator(gen)
        return self.components.get(gen, self.ctx.zero())

    def is_zero(self):
        return not self.components

    def __call__(self, p):
        return prolong_apply(self, p)

    def contract_variable(self, v):
        """Value on the jet variable v: d_Lambda of the component on v's field."""
        comp = self.components.get(v.gen)
        if comp is None:
            return self.ctx.zero()
        return iterated_derivative(v.index, comp)


def prolong_apply(theta, p):
    """Apply the prolonged derivation: sum_v d_Lambda(v^A) * d_left/dv p."""
    ctx = p.ctx
    out = ctx.zero()
    for v in p.variables():
        if v.gen.kind == "coordinate":
            continue
        val = theta.contract_variable(v)
        if val.is_zero():
            continue
        out += val * p.deriv(v)
    return out


def superbracket(t1, t2):
    """[t1, t2] = t1 o t2 - (-1)^{[t1][t2]} t2 o t1, again a contact derivation."""
    ctx = t1.ctx
    sign = -1 if (t1.parity and t2.parity) else 1
    comps = {}
    gens = set(t1.components) | set(t2.components)
    for gen in gens:
        c = prolong_apply(t1, t2.component(gen)) - sign * prolong_apply(t2, t1.component(gen))
        if not c.is_zero():
            comps[gen] = c
    return ContactDerivation(
        ctx, comps, (t1.parity + t2.parity) % 2, t1.ghost_shift + t2.ghost_shift
    )
