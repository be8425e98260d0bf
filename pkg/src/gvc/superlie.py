"""Lie superalgebra data: structure constants, brackets and invariant forms.

Structure constants are stored sparsely on canonical index pairs
(i <= j under the basis order) together with the graded antisymmetry
rule, so inconsistent duplicate entries are impossible by construction.
"""

from fractions import Fraction

from .grassmann import EVEN, ODD, GvcError, ParityError


class LieSuperalgebra:
    """Basis labels with parities, structure constants and an optional
    graded-symmetric invariant bilinear form."""

    def __init__(self, labels, parities):
        if len(labels) != len(set(labels)):
            raise GvcError("duplicate basis labels")
        if len(parities) != len(labels):
            raise GvcError("one parity per basis label required")
        for p in parities:
            if p not in (EVEN, ODD):
                raise ParityError("parities must be 0 or 1")
        self.labels = list(labels)
        self.parities = list(parities)
        self.dim = len(labels)
        self._index = {lab: i for i, lab in enumerate(labels)}
        self._c = {}      # canonical (r, i, j) with i <= j -> Fraction
        self._h = {}      # canonical (i, j) with i <= j -> Fraction
        self.has_form = False

    def index(self, label):
        if isinstance(label, int):
            if not 0 <= label < self.dim:
                raise GvcError("basis index %r out of range" % (label,))
            return label
        try:
            return self._index[label]
        except KeyError:
            raise GvcError("unknown basis label %r" % (label,))

    def parity(self, i):
        return self.parities[self.index(i)]

    # -- structure constants -------------------------------------------

    def set_constant(self, r, i, j, value):
        """Record c^r_ij; the graded-antisymmetric mirror is implied."""
        r, i, j = self.index(r), self.index(i), self.index(j)
        value = Fraction(value)
        pi, pj = self.parities[i], self.parities[j]
        if i == j and pi == EVEN and value != 0:
            raise GvcError("c^r_ii must vanish for an even index i")
        if i <= j:
            key, val = (r, i, j), value
        else:
            # c^r_ij = -(-1)^{[i][j]} c^r_ji
            sign = 1 if (pi and pj) else -1
            key, val = (r, j, i), sign * value
        old = self._c.get(key)
        if old is not None and old != val:
            raise GvcError(
                "inconsistent duplicate structure constant for %r" % (key,)
            )
        if val != 0:
            self._c[key] = val
        elif old is not None:
            del self._c[key]

    def constant(self, r, i, j):
        """c^r_ij with the graded antisymmetry rule applied."""
        r, i, j = self.index(r), self.index(i), self.index(j)
        if i <= j:
            base = self._c.get((r, i, j), Fraction(0))
            if i == j and self.parities[i] == EVEN:
                return Fraction(0)
            return base
        base = self._c.get((r, j, i), Fraction(0))
        sign = 1 if (self.parities[i] and self.parities[j]) else -1
        return sign * base

    def stored_constants(self):
        """Canonical nonzero entries as (r, i, j, value), i <= j."""
        return sorted((r, i, j, v) for (r, i, j), v in self._c.items())

    # -- bilinear form ---------------------------------------------------

    def set_form(self, i, j, value):
        """Record h_ij; graded symmetry h_ji = (-1)^{[i][j]} h_ij is implied."""
        i, j = self.index(i), self.index(j)
        value = Fraction(value)
        if self.parities[i] != self.parities[j] and value != 0:
            raise GvcError("the invariant form must pair equal parities")
        if i == j and self.parities[i] == ODD and value != 0:
            raise GvcError("h_ii must vanish for an odd index i")
        if i <= j:
            key, val = (i, j), value
        else:
            sign = -1 if (self.parities[i] and self.parities[j]) else 1
            key, val = (j, i), sign * value
        old = self._h.get(key)
        if old is not None and old != val:
            raise GvcError("inconsistent duplicate form entry for %r" % (key,))
        if val != 0:
            self._h[key] = val
            self.has_form = True
        elif old is not None:
            del self._h[key]

    def form(self, i, j):
        i, j = self.index(i), self.index(j)
        if i <= j:
            return self._h.get((i, j), Fraction(0))
        sign = -1 if (self.parities[i] and self.parities[j]) else 1
        return sign * self._h.get((j, i), Fraction(0))

    def stored_form(self):
        return sorted((i, j, v) for (i, j), v in self._h.items())

    def form_matrix(self):
        return [[self.form(i, j) for j in range(self.dim)] for i in range(self.dim)]

    def form_inverse(self):
        """Exact inverse h^{ij}; raises if the matrix is singular."""
        n = self.dim
        a = [row[:] + [Fraction(1) if k == i else Fraction(0) for k in range(n)]
             for i, row in enumerate(self.form_matrix())]
        for col in range(n):
            pivot = None
            for row in range(col, n):
                if a[row][col] != 0:
                    pivot = row
                    break
            if pivot is None:
                raise GvcError("invariant form is singular")
            a[col], a[pivot] = a[pivot], a[col]
            inv = Fraction(1) / a[col][col]
            a[col] = [x * inv for x in a[col]]
            for row in range(n):
                if row != col and a[row][col] != 0:
                    f = a[row][col]
                    a[row] = [x - f * y for x, y in zip(a[row], a[col])]
        return [row[n:] for row in a]


def check_structure(alg):
    """Validate parity consistency, graded antisymmetry and super-Jacobi.

    Antisymmetry and the even-diagonal rule hold by construction of the
    sparse storage, so the report covers parity consistency and every
    Jacobi instance, identified by its index triple.
    """
    violations = []
    for (r, i, j), v in sorted(alg._c.items()):
        if v == 0:
            continue
        if alg.parities[r] != (alg.parities[i] + alg.parities[j]) % 2:
            violations.append(("parity", (r, i, j)))
    n = alg.dim
    par = alg.parities
    for i in range(n):
        for a in range(n):
            for b in range(n):
                for r in range(n):
                    total = Fraction(0)
                    for j in range(n):
                        s1 = -1 if par[i] and par[b] else 1
                        s2 = -1 if par[a] and par[i] else 1
                        s3 = -1 if par[b] and par[a] else 1
                        total += s1 * alg.constant(r, i, j) * alg.constant(j, a, b)
                        total += s2 * alg.constant(r, a, j) * alg.constant(j, b, i)
                        total += s3 * alg.constant(r, b, j) * alg.constant(j, i, a)
                    if total != 0:
                        violations.append(("jacobi", (r, (i, a, b))))
    return ValidationReport(violations)


def check_invariant_form(alg):
    """Validate graded symmetry (structural) and ad-invariance of the form.

    Ad-invariance is checked as
        sum_m [ h_mj c^m_ri + (-1)^{[r][i]} h_im c^m_rj ] = 0
    for all r, i, j, the identity satisfied by the trace form of any
    faithful representation; on even indices it is the classical one.
    """
    if not alg.has_form:
        raise GvcError("no invariant form recorded")
    violations = []
    n = alg.dim
    par = alg.parities
    # even block must be nondegenerate
    ev = [i for i in range(n) if par[i] == EVEN]
    sub = [[alg.form(i, j) for j in ev] for i in ev]
    if ev and _det(sub) == 0:
        violations.append(("singular-even-block", ()))
    for r in range(n):
        for i in range(n):
            for j in range(n):
                total = Fraction(0)
                sign = -1 if par[r] and par[i] else 1
                for m in range(n):
                    total += alg.form(m, j) * alg.constant(m, r, i)
                    total += sign * alg.form(i, m) * alg.constant(m, r, j)
                if total != 0:
                    violations.append(("invariance", (r, i, j)))
    return ValidationReport(violations)


def _det(rows):
    n = len(rows)
    a = [row[:] for row in rows]
    det = Fraction(1)
    for col in range(n):
        pivot = None
        for row in range(col, n):
            if a[row][col] != 0:
                pivot = row
                break
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        inv = Fraction(1) / a[col][col]
        for row in range(col + 1, n):
            if a[row][col] != 0:
                f = a[row][col] * inv
                a[row] = [x - f * y for x, y in zip(a[row], a[col])]
    return det


class ValidationReport:
    """List of violated identities; empty means pass."""

    def __init__(self, violations):
        self.violations = violations

    @property
    def ok(self):
        return not self.violations

    def __bool__(self):
        return self.ok

    def describe(self):
        if self.ok:
            return "pass"
        return "; ".join("%s%r" % (kind, data) for kind, data in self.violations)


def bracket(alg, u, v):
    """Superbracket of coefficient vectors: [u, v]^r = sum c^r_ij u^i v^j.

    Both arguments must be parity-homogeneous: nonzero coefficients only
    on basis elements of one parity.
    """
    u = _vector(alg, u)
    v = _vector(alg, v)
    _homogeneous_parity(alg, u)
    _homogeneous_parity(alg, v)
    out = [Fraction(0)] * alg.dim
    for (r, i, j), c in alg._c.items():
        # canonical entry plus its graded mirror
        out[r] += c * u[i] * v[j]
        if i != j:
            sign = 1 if (alg.parities[i] and alg.parities[j]) else -1
            out[r] += sign * c * u[j] * v[i]
    return out


def _vector(alg, u):
    if isinstance(u, dict):
        out = [Fraction(0)] * alg.dim
        for lab, c in u.items():
            out[alg.index(lab)] = Fraction(c)
        return out
    out = [Fraction(c) for c in u]
    if len(out) != alg.dim:
        raise GvcError("coefficient vector has wrong length")
    return out


def _homogeneous_parity(alg, u):
    ps = {alg.parities[i] for i, c in enumerate(u) if c != 0}
    if len(ps) > 1:
        raise ParityError("coefficient vector mixes parities")
    return ps.pop() if ps else EVEN
