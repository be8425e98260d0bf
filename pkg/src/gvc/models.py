"""Turnkey Yang-Mills models over a Lie (super)algebra.

Builds the full generator roster (gauge fields, ghosts, antifields,
degree-two antifields, and gauge parameters in the ordinary case),
the strength polynomials, the quadratic Lagrangian, both routes to the
field equations, the Noether rows, the Koszul-Tate, gauge and BRST
derivations, the extended density solving the master equation, and the
invariance conditions that single the Lagrangian out.
"""

import time
from fractions import Fraction

from .grassmann import Context, EVEN, ODD, ExpansionLimitError, GvcError
from .superlie import check_invariant_form, check_structure
from .jets import ContactDerivation
from .bicomplex import (
    Form,
    Lagrangian,
    d_h,
    euler_lagrange,
    interior,
    lie_derivative,
    noether_current,
    omega_pair,
    superpotential_residual,
    variational_delta,
    variational_derivative,
)
from .brst import (
    NoetherOperator,
    brst_extend,
    koszul_tate,
    master_equation_check,
    noether_residuals,
    proper_solution,
)
from .reporting import CheckResult, Report


class Metric:
    """Constant diagonal metric with entries +-1, so its inverse is itself
    and the volume factor is one."""

    __slots__ = ("signs",)

    def __init__(self, signs):
        signs = tuple(int(s) for s in signs)
        if not signs or any(s not in (1, -1) for s in signs):
            raise GvcError("metric entries must be +1 or -1")
        self.signs = signs

    @classmethod
    def from_signature(cls, text):
        table = {"+": 1, "-": -1}
        try:
            return cls(tuple(table[ch] for ch in text.strip()))
        except KeyError:
            raise GvcError("metric signature must be a string of + and -")

    @property
    def dim(self):
        return len(self.signs)

    def g(self, lam):
        return Fraction(self.signs[lam])

    def signature(self):
        return "".join("+" if s == 1 else "-" for s in self.signs)


class GaugeModel:
    """A Yang-Mills system over a validated Lie (super)algebra."""

    def __init__(self, algebra, metric, max_jet_order=3, term_limit=1000000):
        structure = check_structure(algebra)
        if not structure.ok:
            raise GvcError("algebra fails validation: %s" % structure.describe())
        self.algebra = algebra
        self.metric = metric
        self.all_even = all(p == EVEN for p in algebra.parities)
        ctx = Context(metric.dim, max_jet_order=max_jet_order, term_limit=term_limit)
        self.ctx = ctx
        m, n = algebra.dim, metric.dim
        self.field = [[ctx.add_generator(
            "a%d_%d" % (r + 1, mu),
            "even-field" if algebra.parities[r] == EVEN else "odd-field",
            algebra.parities[r],
        ) for mu in range(n)] for r in range(m)]
        self.ghost = [ctx.add_generator(
            "c%d" % (r + 1), "ghost", (algebra.parities[r] + 1) % 2,
            ghost_number=1, antifield_number=-1,
        ) for r in range(m)]
        self.antifield = [[ctx.add_generator(
            "abar%d_%d" % (r + 1, mu), "antifield", (algebra.parities[r] + 1) % 2,
            ghost_number=-1, antifield_number=1,
        ) for mu in range(n)] for r in range(m)]
        self.noether_antifield = [ctx.add_generator(
            "cbar%d" % (r + 1), "noether-antifield", algebra.parities[r],
            ghost_number=-2, antifield_number=2,
        ) for r in range(m)]
        if self.all_even:
            self.parameter = [ctx.add_generator("xi%d" % (r + 1), "even-field", EVEN)
                              for r in range(m)]
        else:
            self.parameter = None
        self._strength = {}
        self._sym = {}
        self._lagrangian = None
        self._aux_built = False

    # -- strength and splitting -----------------------------------------

    def strength(self, r, lam, mu):
        """Antisymmetric half of the split first jets (the curvature)."""
        key = (r, lam, mu)
        cached = self._strength.get(key)
        if cached is not None:
            return cached
        ctx = self.ctx
        p = ctx.jet(self.field[r][mu], (lam,)).poly() - ctx.jet(self.field[r][lam], (mu,)).poly()
        for i in range(self.algebra.dim):
            for j in range(self.algebra.dim):
                c = self.algebra.constant(r, i, j)
                if c:
                    p += c * (ctx.jet(self.field[i][lam]).poly()
                              * ctx.jet(self.field[j][mu]).poly())
        self._strength[key] = p
        return p

    def sym_jet(self, r, lam, mu):
        """Symmetric half of the split first jets."""
        key = (r, lam, mu)
        cached = self._sym.get(key)
        if cached is not None:
            return cached
        ctx = self.ctx
        p = ctx.jet(self.field[r][mu], (lam,)).poly() + ctx.jet(self.field[r][lam], (mu,)).poly()
        for i in range(self.algebra.dim):
            for j in range(self.algebra.dim):
                c = self.algebra.constant(r, i, j)
                if c:
                    p -= c * (ctx.jet(self.field[i][lam]).poly()
                              * ctx.jet(self.field[j][mu]).poly())
        self._sym[key] = p
        return p

    # -- Lagrangians ------------------------------------------------------

    def ym_lagrangian(self, validate=True):
        """Quadratic strength Lagrangian for the stored invariant form."""
        if self._lagrangian is not None:
            return self._lagrangian
        if not self.algebra.has_form:
            raise GvcError("the quadratic Lagrangian needs an invariant form")
        if validate:
            form_report = check_invariant_form(self.algebra)
            if not form_report.ok:
                raise GvcError("invariant form fails validation: %s"
                               % form_report.describe())
        ctx = self.ctx
        m, n = self.algebra.dim, self.metric.dim
        quarter = Fraction(1, 4)
        density = ctx.zero()
        for i in range(m):
            for j in range(m):
                h = self.algebra.form(i, j)
                if not h:
                    continue
                for lam in range(n):
                    for beta in range(n):
                        if lam == beta:
                            continue
                        coeff = quarter * h * self.metric.g(lam) * self.metric.g(beta)
                        density += coeff * (self.strength(i, lam, beta)
                                            * self.strength(j, lam, beta))
        self._lagrangian = Lagrangian(density)
        return self._lagrangian

    def mass_term_lagrangian(self):
        """Quadratic field (not strength) density; breaks gauge invariance."""
        ctx = self.ctx
        density = ctx.zero()
        for i in range(self.algebra.dim):
            for j in range(self.algebra.dim):
                h = self.algebra.form(i, j)
                if not h:
                    continue
                for mu in range(self.metric.dim):
                    density += (h * self.metric.g(mu)) * (
                        ctx.jet(self.field[i][mu]).poly() * ctx.jet(self.field[j][mu]).poly())
        return Lagrangian(density)

    def sym_quadratic_lagrangian(self):
        """Quadratic density in the symmetric jet half (canonical index
        order, which is where the half is a split coordinate); it depends
        on the symmetric coordinates but not on the bare fields."""
        ctx = self.ctx
        density = ctx.zero()
        for i in range(self.algebra.dim):
            for j in range(self.algebra.dim):
                h = self.algebra.form(i, j)
                if not h:
                    continue
                for lam in range(self.metric.dim):
                    for beta in range(lam, self.metric.dim):
                        coeff = Fraction(1, 4) * h * self.metric.g(lam) * self.metric.g(beta)
                        density += coeff * (self.sym_jet(i, lam, beta)
                                            * self.sym_jet(j, lam, beta))
        return Lagrangian(density)

    # -- field equations ----------------------------------------------------

    def momentum(self, r, mu, kappa):
        """dL/d(jet) in closed form: the metric-contracted strength."""
        out = self.ctx.zero()
        for j in range(self.algebra.dim):
            h = self.algebra.form(r, j)
            if h:
                out += (h * self.metric.g(mu) * self.metric.g(kappa)) * self.strength(j, mu, kappa)
        return out

    def closed_euler_lagrange(self):
        """Field equations assembled from the closed expression: total
        derivative of the momentum plus the algebra-twisted momentum."""
        from .bicomplex import EulerLagrange
        from .jets import total_derivative

        ctx = self.ctx
        m, n = self.algebra.dim, self.metric.dim
        comps = {}
        for r in range(m):
            for mu in range(n):
                acc = ctx.zero()
                for kappa in range(n):
                    pi = self.momentum(r, mu, kappa)
                    if not pi.is_zero():
                        acc += total_derivative(kappa, pi)
                    for i in range(m):
                        for fld in range(m):
                            c = self.algebra.constant(i, r, fld)
                            if not c:
                                continue
                            pii = self.momentum(i, mu, kappa)
                            if pii.is_zero():
                                continue
                            acc += c * (ctx.jet(self.field[fld][kappa]).poly() * pii)
                if not acc.is_zero():
                    comps[self.field[r][mu]] = acc
        return EulerLagrange(ctx, comps)

    def generic_euler_lagrange(self):
        return euler_lagrange(self.ym_lagrangian())

    # -- Noether structure ----------------------------------------------------

    def noether_operator(self):
        """Rows annihilating the field equations: the algebra-twisted
        divergence, one row per algebra direction."""
        ctx = self.ctx
        m, n = self.algebra.dim, self.metric.dim
        rows = {}
        for j in range(m):
            entries = []
            for r in range(m):
                for i in range(m):
                    c = self.algebra.constant(r, j, i)
                    if not c:
                        continue
                    for lam in range(n):
                        coeff = c * ctx.jet(self.field[i][lam]).poly()
                        entries.append((coeff, self.field[r][lam], ()))
            for lam in range(n):
                entries.append((ctx.one(), self.field[j][lam], (lam,)))
            rows["r%d" % (j + 1)] = entries
        return NoetherOperator(ctx, rows)

    def antifield_map(self):
        out = {}
        for r in range(self.algebra.dim):
            for mu in range(self.metric.dim):
                out[self.field[r][mu]] = self.antifield[r][mu]
        return out

    def noether_antifield_map(self):
        return {"r%d" % (r + 1): self.noether_antifield[r]
                for r in range(self.algebra.dim)}

    def koszul_tate(self):
        return koszul_tate(
            self.noether_operator(),
            self.generic_euler_lagrange(),
            self.antifield_map(),
            self.noether_antifield_map(),
        )

    # -- symmetries -------------------------------------------------------------

    def _gauge_components(self, sources):
        """Shared shape of the gauge transformation: the derivative of the
        source plus the algebra twist, for ghosts or parameter fields."""
        ctx = self.ctx
        comps = {}
        for r in range(self.algebra.dim):
            for mu in range(self.metric.dim):
                comp = ctx.jet(sources[r], (mu,)).poly()
                for j in range(self.algebra.dim):
                    for i in range(self.algebra.dim):
                        c = self.algebra.constant(r, j, i)
                        if not c:
                            continue
                        comp -= c * (ctx.jet(sources[j]).poly()
                                     * ctx.jet(self.field[i][mu]).poly())
                comps[self.field[r][mu]] = comp
        return comps

    def gauge_operator(self):
        """Odd gauge symmetry with ghosts in the parameter slot."""
        return ContactDerivation(self.ctx, self._gauge_components(self.ghost),
                                 ODD, ghost_shift=1)

    def parameter_symmetry(self):
        """Even gauge symmetry with parameter fields (ordinary case only)."""
        if self.parameter is None:
            raise GvcError("parameter-based symmetry exists for all-even algebras only")
        return ContactDerivation(self.ctx, self._gauge_components(self.parameter), EVEN)

    def constant_parameter_symmetry(self, vec):
        """Gauge symmetry for a constant parameter vector over the basis."""
        ctx = self.ctx
        vec = [Fraction(c) for c in vec]
        if len(vec) != self.algebra.dim:
            raise GvcError("parameter vector has wrong length")
        comps = {}
        for r in range(self.algebra.dim):
            for mu in range(self.metric.dim):
                comp = ctx.zero()
                for j in range(self.algebra.dim):
                    for i in range(self.algebra.dim):
                        c = self.algebra.constant(r, j, i)
                        if c and vec[j]:
                            comp -= (c * vec[j]) * ctx.jet(self.field[i][mu]).poly()
                if not comp.is_zero():
                    comps[self.field[r][mu]] = comp
        return ContactDerivation(self.ctx, comps, EVEN)

    def ghost_sector(self):
        """Quadratic ghost components completing the gauge operator."""
        ctx = self.ctx
        gamma = {}
        for r in range(self.algebra.dim):
            acc = ctx.zero()
            for i in range(self.algebra.dim):
                for j in range(self.algebra.dim):
                    c = self.algebra.constant(r, i, j)
                    if not c:
                        continue
                    sign = Fraction(-1, 2)
                    if self.algebra.parities[i] == ODD:
                        sign = -sign
                    acc += (sign * c) * (ctx.jet(self.ghost[i]).poly()
                                         * ctx.jet(self.ghost[j]).poly())
            if not acc.is_zero():
                gamma[self.ghost[r]] = acc
        return gamma

    def brst_operator(self):
        return brst_extend(self.gauge_operator(), self.ghost_sector())

    def pairs(self):
        """Field-antifield pairing of the extended algebra."""
        out = self.antifield_map()
        for r in range(self.algebra.dim):
            out[self.ghost[r]] = self.noether_antifield[r]
        return out

    def extended_lagrangian(self):
        s, _ = self.brst_operator()
        return proper_solution(self.ym_lagrangian(), s, self.pairs())

    # -- currents (ordinary case) --------------------------------------------

    def current(self):
        return noether_current(self.parameter_symmetry(), self.ym_lagrangian())

    def superpotential(self):
        """The codegree-two form whose horizontal differential carries the
        off-shell part of the current."""
        ctx = self.ctx
        n = self.metric.dim
        out = Form.zero(ctx)
        for nu in range(n):
            for mu in range(nu + 1, n):
                comp = ctx.zero()
                for r in range(self.algebra.dim):
                    pi = self.momentum(r, nu, mu)
                    if not pi.is_zero():
                        comp += ctx.jet(self.parameter[r]).poly() * pi
                if not comp.is_zero():
                    out += omega_pair(ctx, nu, mu).times_poly(comp)
        return out

    def superpotential_rows(self):
        ctx = self.ctx
        rows = []
        for r in range(self.algebra.dim):
            for mu in range(self.metric.dim):
                rows.append((ctx.jet(self.parameter[r]).poly(), self.field[r][mu], (), mu))
        return rows

    # -- invariance conditions -------------------------------------------------

    def _build_aux(self):
        if self._aux_built:
            return
        ctx = self.ctx
        m, n = self.algebra.dim, self.metric.dim
        self.aux_strength = {}
        self.aux_sym = {}
        for r in range(m):
            kind = "even-field" if self.algebra.parities[r] == EVEN else "odd-field"
            for lam in range(n):
                for mu in range(lam, n):
                    if mu > lam:
                        self.aux_strength[(r, lam, mu)] = ctx.add_generator(
                            "Fs%d_%d%d" % (r + 1, lam, mu), kind, self.algebra.parities[r])
                    self.aux_sym[(r, lam, mu)] = ctx.add_generator(
                        "Ss%d_%d%d" % (r + 1, lam, mu), kind, self.algebra.parities[r])
        self._aux_built = True

    def _aux_strength_poly(self, r, lam, mu):
        ctx = self.ctx
        if lam == mu:
            return ctx.zero()
        if lam < mu:
            return ctx.jet(self.aux_strength[(r, lam, mu)]).poly()
        return -ctx.jet(self.aux_strength[(r, mu, lam)]).poly()

    def _quadratic_twist(self, lam, mu, r):
        """The algebra-quadratic part of the split, c^r_ij a^i_lam a^j_mu."""
        ctx = self.ctx
        out = ctx.zero()
        for i in range(self.algebra.dim):
            for j in range(self.algebra.dim):
                c = self.algebra.constant(r, i, j)
                if c:
                    out += c * (ctx.jet(self.field[i][lam]).poly()
                                * ctx.jet(self.field[j][mu]).poly())
        return out

    def split_coordinates(self, density):
        """Rewrite first jets in the strength/symmetric coordinates.

        For the canonical index order the jet is the mean of the two split
        halves; the swapped order needs the quadratic twist restored, since
        the symmetric half is symmetric only up to it.
        """
        self._build_aux()
        ctx = self.ctx
        half = Fraction(1, 2)
        out = density
        for r in range(self.algebra.dim):
            for mu in range(self.metric.dim):
                for lam in range(self.metric.dim):
                    v = ctx.jet(self.field[r][mu], (lam,))
                    sym = ctx.jet(self.aux_sym[(r, min(lam, mu), max(lam, mu))]).poly()
                    if lam <= mu:
                        repl = half * (self._aux_strength_poly(r, lam, mu) + sym)
                    else:
                        repl = half * (sym - self._aux_strength_poly(r, mu, lam)) \
                            + self._quadratic_twist(mu, lam, r)
                    out = out.substitute(v, repl)
        return out

    def invariance_conditions(self, L=None):
        """Residual tables for the three gauge-invariance conditions of a
        first-order density, in the split coordinates.

        The contraction condition is evaluated for all-even algebras; the
        first two make sense for any parity assignment.
        """
        if L is None:
            L = self.ym_lagrangian()
        if L.density.max_jet_order() > 1:
            raise GvcError("invariance conditions apply to first-order densities")
        ctx = self.ctx
        tilde = self.split_coordinates(L.density)
        m, n = self.algebra.dim, self.metric.dim
        sym_res = {}
        for key, gen in sorted(self.aux_sym.items()):
            d = tilde.deriv(ctx.jet(gen))
            sym_res["S%d_%d%d" % (key[0] + 1, key[1], key[2])] = d
        field_res = {}
        for r in range(m):
            for mu in range(n):
                d = tilde.deriv(ctx.jet(self.field[r][mu]))
                field_res["a%d_%d" % (r + 1, mu)] = d
        contraction_res = {}
        if self.all_even:
            for q in range(m):
                acc = ctx.zero()
                for r in range(m):
                    for p in range(m):
                        c = self.algebra.constant(r, p, q)
                        if not c:
                            continue
                        for lam in range(n):
                            for mu in range(lam + 1, n):
                                fpoly = self._aux_strength_poly(p, lam, mu)
                                dpoly = tilde.deriv(ctx.jet(self.aux_strength[(r, lam, mu)]))
                                if not (fpoly.is_zero() or dpoly.is_zero()):
                                    acc += c * (fpoly * dpoly)
                contraction_res["q%d" % (q + 1)] = acc
        return sym_res, field_res, contraction_res

    # -- end-to-end -------------------------------------------------------------

    PIPELINES = (
        "validate-algebra",
        "euler-lagrange",
        "noether",
        "koszul-tate",
        "brst",
        "master-equation",
        "utiyama",
    )

    def header(self):
        return "%s dim %d metric %s" % (
            "even" if self.all_even else "graded", self.metric.dim,
            self.metric.signature())

    def pipeline(self, name, deterministic=False):
        """Run one named check pipeline; precondition failures become
        failed entries rather than exceptions."""
        if name not in self.PIPELINES:
            raise GvcError("unknown pipeline %r" % (name,))
        try:
            parts = list(self._pipeline_parts(name))
        except ExpansionLimitError:
            raise
        except GvcError as exc:
            return [CheckResult(name, False, witness=str(exc))]
        results = []
        for check_name, fn in parts:
            t0 = time.monotonic()
            try:
                entry = fn(check_name)
            except ExpansionLimitError:
                raise
            except GvcError as exc:
                entry = CheckResult(check_name, False, witness=str(exc))
            entry.seconds = None if deterministic else time.monotonic() - t0
            results.append(entry)
        return results

    def _pipeline_parts(self, name):
        def from_validation(check, rep):
            return CheckResult(check, rep.ok, len(rep.violations),
                               "-" if rep.ok else rep.describe())

        if name == "validate-algebra":
            parts = [("algebra-structure",
                      lambda n: from_validation(n, check_structure(self.algebra)))]
            if self.algebra.has_form:
                parts.append(("invariant-form",
                              lambda n: from_validation(n, check_invariant_form(self.algebra))))
            return parts

        L = self.ym_lagrangian()

        if name == "euler-lagrange":
            def two_path(check):
                generic = self.generic_euler_lagrange()
                closed = self.closed_euler_lagrange()
                gens = set(generic.components) | set(closed.components)
                residuals = {g.name: generic.component(g) - closed.component(g)
                             for g in gens}
                return CheckResult.from_residuals(check, residuals)

            return [("euler-lagrange-two-path", two_path)]

        if name == "noether":
            parts = []
            if self.all_even:
                parts.append(("parameter-symmetry", lambda n: CheckResult.from_form(
                    n, lie_derivative(self.parameter_symmetry(), L.form))))
            parts.append(("noether-identities", lambda n: CheckResult.from_residuals(
                n, noether_residuals(self.noether_operator(),
                                     self.generic_euler_lagrange()))))
            if self.all_even:
                parts.append(("current-conservation", lambda n: CheckResult.from_form(
                    n, d_h(self.current()) - interior(self.parameter_symmetry(),
                                                      variational_delta(L.form)))))
                parts.append(("superpotential", lambda n: CheckResult.from_form(
                    n, superpotential_residual(self.current(),
                                               self.generic_euler_lagrange(),
                                               self.superpotential_rows(),
                                               self.superpotential()))))
            return parts

        if name == "koszul-tate":
            def kt_check(check):
                kt_res = self.koszul_tate().nilpotency_residuals()
                noe_res = noether_residuals(self.noether_operator(),
                                            self.generic_euler_lagrange())
                kt_ok = all(p.is_zero() for p in kt_res.values())
                noe_ok = all(p.is_zero() for p in noe_res.values())
                if kt_ok != noe_ok:
                    return CheckResult(check, False,
                                       witness="disagrees with the identity rows")
                return CheckResult.from_residuals(check, kt_res)

            return [("koszul-tate", kt_check)]

        if name == "brst":
            def brst_check(check):
                _, s_res = self.brst_operator()
                return CheckResult.from_residuals(check, s_res)

            return [("gauge-symmetry", lambda n: CheckResult.from_form(
                        n, lie_derivative(self.gauge_operator(), L.form))),
                    ("brst-nilpotency", brst_check)]

        if name == "master-equation":
            def master(check):
                s, s_res = self.brst_operator()
                if any(not p.is_zero() for p in s_res.values()):
                    return CheckResult(check, False, witness="no nilpotent extension")
                extended = proper_solution(L, s, self.pairs())
                rep = master_equation_check(extended, self.pairs())
                if not rep.bracket_trivial:
                    el = euler_lagrange(rep.bracket)
                    residuals = {g.name: p for g, p in el.components.items()}
                    return CheckResult.from_residuals(check, residuals)
                if not rep.derivation_nilpotent:
                    return CheckResult.from_residuals(check, rep.derivation_residuals)
                nontrivial = False
                for z, zbar in self.pairs().items():
                    if not variational_derivative(extended.density, zbar, "right").is_zero():
                        if not variational_derivative(extended.density, z, "left").is_zero():
                            nontrivial = True
                            break
                if not nontrivial:
                    return CheckResult(check, False, witness="solution is trivial")
                return CheckResult(check, True)

            return [("master-equation", master)]

        conditions = {}

        def utiyama(kind):
            if not conditions:
                sym_res, field_res, contraction_res = self.invariance_conditions(L)
                conditions["utiyama-strength-dependence"] = sym_res
                conditions["utiyama-field-independence"] = field_res
                conditions["utiyama-contraction"] = contraction_res
            return CheckResult.from_residuals(kind, conditions[kind])

        parts = [("utiyama-strength-dependence", utiyama),
                 ("utiyama-field-independence", utiyama)]
        if self.all_even:
            parts.append(("utiyama-contraction", utiyama))
        return parts

    def euler_lagrange_notes(self):
        """Rendered field equations, one line per generator."""
        generic = self.generic_euler_lagrange()
        return ["el %s = %s" % (g.name, generic.component(g).render())
                for g in generic.generators()]

    def full_verification(self, deterministic=False, pipelines=None):
        results = []
        for name in pipelines or self.PIPELINES:
            results.extend(self.pipeline(name, deterministic))
        return Report(self.header(), results)


def build_model(algebra, metric, max_jet_order=3, term_limit=1000000):
    return GaugeModel(algebra, metric, max_jet_order, term_limit)
