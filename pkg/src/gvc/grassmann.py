"""Exact arithmetic in graded-commutative polynomial rings.

Variables are jet coordinates: a base coordinate x^lam, or a generator
(field, ghost, antifield, ...) carrying a symmetric multi-index of
derivative directions.  Even variables commute and carry arbitrary
powers; odd variables anticommute and are square-free.  Every
polynomial is kept in normal form: within a monomial the odd factors
are strictly increasing under a fixed global order, and reordering
signs are tracked exactly with rational coefficients.
"""

from fractions import Fraction

EVEN = 0
ODD = 1

KINDS = (
    "coordinate",
    "even-field",
    "odd-field",
    "antifield",
    "ghost",
    "noether-antifield",
)
_KIND_RANK = {kind: rank for rank, kind in enumerate(KINDS)}


class GvcError(Exception):
    pass


class UnknownGeneratorError(GvcError):
    pass


class ParityError(GvcError):
    pass


class JetOrderError(GvcError):
    pass


class ExpansionLimitError(GvcError):
    pass


class Generator:
    """A registered symbol: base coordinate, field, ghost or antifield."""

    __slots__ = ("name", "kind", "parity", "ghost_number", "antifield_number", "key")

    def __init__(self, name, kind, parity, ghost_number=0, antifield_number=0):
        if kind not in _KIND_RANK:
            raise GvcError("unknown generator kind %r" % (kind,))
        if parity not in (EVEN, ODD):
            raise ParityError("parity must be 0 or 1, got %r" % (parity,))
        self.name = name
        self.kind = kind
        self.parity = parity
        self.ghost_number = ghost_number
        self.antifield_number = antifield_number
        self.key = (_KIND_RANK[kind], name)

    def __repr__(self):
        return "Generator(%r, %r, parity=%d)" % (self.name, self.kind, self.parity)


class Variable:
    """A jet coordinate: a generator together with a symmetric multi-index.

    The global total order used for normal ordering is lexicographic on
    (kind rank, generator name, multi-index); it is fixed as soon as the
    generator is registered and does not depend on creation time.
    """

    __slots__ = ("ctx", "gen", "index", "parity", "key", "_hash")

    def __init__(self, ctx, gen, index):
        self.ctx = ctx
        self.gen = gen
        self.index = index
        self.parity = gen.parity
        self.key = (gen.key[0], gen.key[1], index)
        self._hash = hash(self.key)

    def poly(self):
        m = (((self, 1),), ()) if self.parity == EVEN else ((), (self,))
        return Poly(self.ctx, {m: Fraction(1)})

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return self is other or self.key == other.key

    def __lt__(self, other):
        return self.key < other.key

    @property
    def order(self):
        return len(self.index)

    def render(self):
        if not self.index:
            return self.gen.name
        return "%s;%s" % (self.gen.name, "".join(str(i) for i in self.index))

    def __repr__(self):
        return "Variable(%s)" % self.render()


class Context:
    """Registry of generators, interned jet variables and global limits."""

    def __init__(self, dim, max_jet_order=None, term_limit=1000000):
        self.dim = dim
        self.max_jet_order = max_jet_order
        self.term_limit = term_limit
        self.generators = {}
        self._vars = {}
        self.coordinates = []
        for lam in range(dim):
            gen = Generator("x%d" % lam, "coordinate", EVEN)
            self.generators[gen.name] = gen
            self.coordinates.append(self._intern(gen, ()))

    def add_generator(self, name, kind, parity, ghost_number=0, antifield_number=0):
        if name in self.generators:
            raise GvcError("generator %r already registered" % (name,))
        if kind == "coordinate":
            raise GvcError("base coordinates are registered by the context")
        gen = Generator(name, kind, parity, ghost_number, antifield_number)
        self.generators[gen.name] = gen
        return gen

    def generator(self, name):
        try:
            return self.generators[name]
        except KeyError:
            raise UnknownGeneratorError("unknown generator %r" % (name,))

    def _intern(self, gen, index):
        cached = self._vars.get((gen.name, index))
        if cached is None:
            cached = Variable(self, gen, index)
            self._vars[(gen.name, index)] = cached
        return cached

    def jet(self, gen, index=()):
        """The jet variable of `gen` with the (symmetric) multi-index."""
        if isinstance(gen, str):
            gen = self.generator(gen)
        if gen.name not in self.generators:
            raise UnknownGeneratorError("generator %r not in this context" % (gen.name,))
        index = tuple(sorted(index))
        if gen.kind == "coordinate" and index:
            raise GvcError("base coordinates carry no multi-index")
        for lam in index:
            if not 0 <= lam < self.dim:
                raise GvcError("spacetime index %r out of range" % (lam,))
        if self.max_jet_order is not None and len(index) > self.max_jet_order:
            raise JetOrderError(
                "jet order %d exceeds configured maximum %d for %s"
                % (len(index), self.max_jet_order, gen.name)
            )
        return self._intern(gen, index)

    def coordinate(self, lam):
        return self.coordinates[lam]

    # -- polynomial constructors -------------------------------------

    def zero(self):
        return Poly(self, {})

    def scalar(self, c):
        c = Fraction(c)
        if c == 0:
            return Poly(self, {})
        return Poly(self, {_ONE: c})

    def one(self):
        return self.scalar(1)

    def var(self, name, *index):
        """Single-variable polynomial, a convenience for tests and demos."""
        return self.jet(name, index).poly()

    def product(self, coeff, factors):
        """Normal form of an ordered product of variables (`normalize`)."""
        return normalize(self, coeff, factors)

    def check_terms(self, n):
        if self.term_limit is not None and n > self.term_limit:
            raise ExpansionLimitError(
                "expansion produced %d monomials (limit %d)" % (n, self.term_limit)
            )


_ONE = ((), ())  # the empty monomial


def _mono_mul(m1, m2):
    """Product of two normal monomials: (sign, monomial) or None if zero."""
    ev1, od1 = m1
    ev2, od2 = m2
    if ev2 and not ev1:
        ev = ev2
    elif not ev2:
        ev = ev1
    else:
        merged = dict(ev1)
        for v, e in ev2:
            merged[v] = merged.get(v, 0) + e
        ev = tuple(sorted(merged.items(), key=lambda it: it[0].key))
    if not od1:
        return 1, (ev, od2)
    if not od2:
        return 1, (ev, od1)
    od = []
    crossings = 0
    i = j = 0
    n1 = len(od1)
    while i < n1 and j < len(od2):
        a, b = od1[i], od2[j]
        if a.key == b.key:
            return None
        if a.key < b.key:
            od.append(a)
            i += 1
        else:
            od.append(b)
            crossings += n1 - i
            j += 1
    od.extend(od1[i:])
    od.extend(od2[j:])
    sign = -1 if crossings & 1 else 1
    return sign, (ev, tuple(od))


def _mono_parity(m):
    return len(m[1]) & 1


def _mono_key(m):
    ev, od = m
    return (
        tuple((v.key, e) for v, e in ev),
        tuple(v.key for v in od),
    )


def _mono_render(m, coeff):
    ev, od = m
    parts = []
    for v, e in ev:
        parts.append(v.render() if e == 1 else "%s^%d" % (v.render(), e))
    parts.extend(v.render() for v in od)
    if not parts:
        return str(coeff)
    body = "*".join(parts)
    if coeff == 1:
        return body
    if coeff == -1:
        return "-" + body
    return "%s*%s" % (coeff, body)


class Poly:
    """Exact-rational linear combination of normal-ordered monomials."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx, terms):
        self.ctx = ctx
        self.terms = terms

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        raise TypeError("Poly is unhashable")

    def __neg__(self):
        return Poly(self.ctx, {m: -c for m, c in self.terms.items()})

    def __add__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                del out[m]
        self.ctx.check_terms(len(out))
        return Poly(self.ctx, out)

    def __sub__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) - c
            if s:
                out[m] = s
            else:
                del out[m]
        return Poly(self.ctx, out)

    def __mul__(self, other):
        if isinstance(other, Poly):
            out = {}
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    prod = _mono_mul(m1, m2)
                    if prod is None:
                        continue
                    sign, m = prod
                    s = out.get(m, 0) + sign * c1 * c2
                    if s:
                        out[m] = s
                    else:
                        del out[m]
            self.ctx.check_terms(len(out))
            return Poly(self.ctx, out)
        c = Fraction(other)
        if c == 0:
            return Poly(self.ctx, {})
        return Poly(self.ctx, {m: c0 * c for m, c0 in self.terms.items()})

    def __rmul__(self, other):
        # scalars commute with everything
        return self.__mul__(other)

    def __pow__(self, n):
        if n < 0:
            raise GvcError("negative powers are not defined")
        out = self.ctx.one()
        for _ in range(n):
            out = out * self
        return out

    # -- grading -------------------------------------------------------

    def parity(self):
        """0 or 1 for homogeneous polynomials, None for mixed, 0 for zero."""
        p = None
        for m in self.terms:
            mp = _mono_parity(m)
            if p is None:
                p = mp
            elif p != mp:
                return None
        return 0 if p is None else p

    def require_parity(self):
        p = self.parity()
        if p is None:
            raise ParityError("polynomial is not parity-homogeneous")
        return p

    def even_part(self):
        return Poly(self.ctx, {m: c for m, c in self.terms.items() if not _mono_parity(m)})

    def odd_part(self):
        return Poly(self.ctx, {m: c for m, c in self.terms.items() if _mono_parity(m)})

    def parity_parts(self):
        """Yield the nonzero (parity, homogeneous part) pieces."""
        ev = self.even_part()
        if ev.terms:
            yield EVEN, ev
        od = self.odd_part()
        if od.terms:
            yield ODD, od

    def ghost_numbers(self):
        out = set()
        for ev, od in self.terms:
            g = sum(v.gen.ghost_number * e for v, e in ev)
            g += sum(v.gen.ghost_number for v in od)
            out.add(g)
        return out

    def antifield_numbers(self):
        out = set()
        for ev, od in self.terms:
            a = sum(v.gen.antifield_number * e for v, e in ev)
            a += sum(v.gen.antifield_number for v in od)
            out.add(a)
        return out

    def constant_term(self):
        return self.terms.get(_ONE, Fraction(0))

    # -- structure -----------------------------------------------------

    def variables(self):
        out = set()
        for ev, od in self.terms:
            for v, _ in ev:
                out.add(v)
            out.update(od)
        return out

    def max_jet_order(self):
        orders = [v.order for v in self.variables() if v.gen.kind != "coordinate"]
        return max(orders) if orders else 0

    def deriv(self, v, side="left"):
        """Graded partial derivative with respect to the variable `v`.

        Left derivatives peel the factor from the front of the odd word,
        right derivatives from the back; both satisfy the graded Leibniz
        rule of the respective convention.
        """
        if side not in ("left", "right"):
            raise GvcError("side must be 'left' or 'right'")
        if v.gen.name not in self.ctx.generators:
            raise UnknownGeneratorError("variable %s not registered here" % v.render())
        out = {}
        if v.parity == EVEN:
            for (ev, od), c in self.terms.items():
                for pos, (w, e) in enumerate(ev):
                    if w is v or w.key == v.key:
                        if e == 1:
                            new_ev = ev[:pos] + ev[pos + 1 :]
                        else:
                            new_ev = ev[:pos] + ((w, e - 1),) + ev[pos + 1 :]
                        m = (new_ev, od)
                        s = out.get(m, 0) + c * e
                        if s:
                            out[m] = s
                        else:
                            del out[m]
                        break
        else:
            for (ev, od), c in self.terms.items():
                for pos, w in enumerate(od):
                    if w is v or w.key == v.key:
                        if side == "left":
                            sign = -1 if pos & 1 else 1
                        else:
                            sign = -1 if (len(od) - 1 - pos) & 1 else 1
                        m = (ev, od[:pos] + od[pos + 1 :])
                        s = out.get(m, 0) + sign * c
                        if s:
                            out[m] = s
                        else:
                            del out[m]
                        break
        return Poly(self.ctx, out)

    def substitute(self, v, repl):
        """Replace the variable `v` by the polynomial `repl` (same parity)."""
        if repl.parity() not in (v.parity,) and not repl.is_zero():
            raise ParityError("substitution must preserve parity")
        out = self.ctx.zero()
        for (ev, od), c in self.terms.items():
            if v.parity == EVEN:
                hit = None
                for pos, (w, e) in enumerate(ev):
                    if w.key == v.key:
                        hit = (pos, e)
                        break
                if hit is None:
                    out += Poly(self.ctx, {(ev, od): c})
                    continue
                pos, e = hit
                rest = Poly(self.ctx, {(ev[:pos] + ev[pos + 1 :], od): c})
                out += (repl ** e) * rest
            else:
                hit = None
                for pos, w in enumerate(od):
                    if w.key == v.key:
                        hit = pos
                        break
                if hit is None:
                    out += Poly(self.ctx, {(ev, od): c})
                    continue
                sign = -1 if hit & 1 else 1
                rest = Poly(self.ctx, {(ev, od[:hit] + od[hit + 1 :]): sign * c})
                out += repl * rest
        return out

    # -- presentation ----------------------------------------------------

    def render(self):
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=lambda it: _mono_key(it[0]))
        parts = []
        for m, c in items:
            txt = _mono_render(m, c)
            if parts and not txt.startswith("-"):
                parts.append("+" + txt)
            else:
                parts.append(txt)
        return " ".join(parts)

    def leading_monomial(self):
        """Canonically first monomial, rendered; '0' for the zero polynomial."""
        if not self.terms:
            return "0"
        m, c = min(self.terms.items(), key=lambda it: _mono_key(it[0]))
        return _mono_render(m, c)

    def __repr__(self):
        return "Poly(%s)" % self.render()


def normalize(ctx, coeff, factors):
    """Normal form of coeff * v1 * v2 * ... for an ordered factor list.

    The sign is (-1)^(number of transpositions of odd factors needed to
    sort); the result is zero whenever an odd factor repeats.
    """
    coeff = Fraction(coeff)
    if coeff == 0:
        return ctx.zero()
    ev = {}
    od = []
    sign = 1
    for v in factors:
        if isinstance(v, str):
            v = ctx.jet(v)
        if v.gen.name not in ctx.generators:
            raise UnknownGeneratorError("unknown generator %r" % (v.gen.name,))
        if v.parity == EVEN:
            ev[v] = ev.get(v, 0) + 1
        else:
            jumps = 0
            for w in od:
                if w.key == v.key:
                    return ctx.zero()
                if w.key > v.key:
                    jumps += 1
            if jumps & 1:
                sign = -sign
            od.append(v)
            od.sort(key=lambda w: w.key)
    mono = (tuple(sorted(ev.items(), key=lambda it: it[0].key)), tuple(od))
    return Poly(ctx, {mono: sign * coeff})
