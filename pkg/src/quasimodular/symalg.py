"""
Polynomials over Q in up to four variables t1..t4, polynomial vector fields,
and the Ramanujan-type systems written as vector fields.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatch, SubstitutionError
from .qseries import QSeries, derive
from .report import Check

VAR_NAMES = ("t1", "t2", "t3", "t4")


def _grlex_key(exps):
    # graded lex with t1 > t2 > t3 > t4, largest first
    return (-sum(exps), tuple(-e for e in exps))


class MPoly:
    """Sparse polynomial: a map exponent-tuple -> nonzero Fraction."""

    __slots__ = ("nvars", "_terms")

    def __init__(self, nvars, terms=None):
        if not 0 < nvars <= 4:
            raise ValueError("1 to 4 variables supported")
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != nvars:
                raise DimensionMismatch("exponent %r for %d variables" % (exps, nvars))
            c = Fraction(c)
            if c:
                clean[exps] = clean.get(exps, 0) + c
        self.nvars = nvars
        self._terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def var(cls, i, nvars):
        """The variable t_i (1-based)."""
        exps = [0] * nvars
        exps[i - 1] = 1
        return cls(nvars, {tuple(exps): 1})

    @classmethod
    def const(cls, c, nvars):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, exps, c=1):
        return cls(len(exps), {tuple(exps): c})

    def terms(self):
        """(exponents, coefficient) pairs in graded-lex order."""
        return sorted(self._terms.items(), key=lambda kv: _grlex_key(kv[0]))

    def coefficient(self, exps):
        return self._terms.get(tuple(exps), Fraction(0))

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def degree(self):
        return max((sum(e) for e in self._terms), default=-1)

    def weighted_degrees(self, weights):
        return {sum(w * e for w, e in zip(weights, exps)) for exps in self._terms}

    def is_homogeneous(self, weights, degree=None):
        degs = self.weighted_degrees(weights)
        if not degs:
            return True
        if degree is None:
            return len(degs) == 1
        return degs == {degree}

    def _check(self, other):
        if isinstance(other, (int, Fraction)):
            return MPoly.const(other, self.nvars)
        if not isinstance(other, MPoly):
            return NotImplemented
        if other.nvars != self.nvars:
            raise DimensionMismatch("%d vs %d variables" % (self.nvars, other.nvars))
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for e, c in other._terms.items():
            terms[e] = terms.get(e, 0) + c
        return MPoly(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return MPoly(self.nvars, {e: c * other for e, c in self._terms.items()})
        other = self._check(other)
        if other is NotImplemented:
            return other
        terms = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return MPoly(self.nvars, terms)

    __rmul__ = __mul__

    def __truediv__(self, c):
        return self * (1 / Fraction(c))

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise ValueError("non-negative integer exponent expected")
        out = MPoly.const(1, self.nvars)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.const(other, self.nvars)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    __hash__ = None

    def diff(self, i):
        """Partial derivative in t_i (1-based)."""
        k = i - 1
        terms = {}
        for exps, c in self._terms.items():
            if exps[k]:
                e = list(exps)
                e[k] -= 1
                terms[tuple(e)] = c * exps[k]
        return MPoly(self.nvars, terms)

    def evaluate(self, values, one=None):
        """
        Substitute ``values`` (numbers, QSeries, MPoly...) for t1..tn.

        ``one`` is the multiplicative unit of the target ring; it is inferred
        from the values when omitted.
        """
        if len(values) != self.nvars:
            raise DimensionMismatch("%d values for %d variables" % (len(values), self.nvars))
        if one is None:
            one = _unit_like(values)
        cache = {}

        def pw(i, e):
            key = (i, e)
            if key not in cache:
                if e == 1:
                    cache[key] = values[i]
                elif e % 2 == 0:
                    h = pw(i, e // 2)
                    cache[key] = h * h
                else:
                    cache[key] = pw(i, e - 1) * values[i]
            return cache[key]

        total = None
        for exps, c in self.terms():
            term = None
            for i, e in enumerate(exps):
                if e:
                    f = pw(i, e)
                    term = f if term is None else term * f
            term = one * c if term is None else term * c
            total = term if total is None else total + term
        if total is None:
            return one * 0
        return total

    def compose(self, phi):
        """Substitute the polynomials ``phi`` (one per variable) for t1..tn."""
        if len(phi) != self.nvars:
            raise SubstitutionError("need %d substitutions, got %d" % (self.nvars, len(phi)))
        nv = {p.nvars for p in phi}
        if len(nv) != 1:
            raise SubstitutionError("substituted polynomials disagree on the number of variables")
        return self.evaluate(list(phi), MPoly.const(1, nv.pop()))

    def __repr__(self):
        return "MPoly(%s)" % self.format()

    def format(self, names=VAR_NAMES):
        if not self._terms:
            return "0"
        parts = []
        for exps, c in self.terms():
            mono = "*".join(
                names[i] if e == 1 else "%s^%d" % (names[i], e) for i, e in enumerate(exps) if e
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append("%s*%s" % (c, mono))
        return " + ".join(parts).replace("+ -", "- ")


def _unit_like(values):
    for v in values:
        if isinstance(v, QSeries):
            return QSeries.one(max(v.precision, 1))
        if isinstance(v, MPoly):
            return MPoly.const(1, v.nvars)
    return Fraction(1)


def variables(nvars):
    return tuple(MPoly.var(i, nvars) for i in range(1, nvars + 1))


class PolyVF:
    """sum_j components[j] * d/dt_j."""

    __slots__ = ("nvars", "components")

    def __init__(self, components):
        components = tuple(components)
        nv = {c.nvars for c in components}
        if len(nv) != 1:
            raise DimensionMismatch("components disagree on the number of variables")
        self.nvars = nv.pop()
        self.components = components

    @classmethod
    def zero(cls, nvars):
        return cls([MPoly(nvars)] * nvars)

    def apply(self, p):
        """Directional derivative V(p) = sum_j V_j dp/dt_j."""
        if p.nvars != self.nvars or len(self.components) != self.nvars:
            raise DimensionMismatch("field and polynomial live in different rings")
        total = MPoly(self.nvars)
        for j, comp in enumerate(self.components, start=1):
            if comp:
                total = total + comp * p.diff(j)
        return total

    def __call__(self, p):
        return self.apply(p)

    def __add__(self, other):
        return PolyVF([a + b for a, b in zip(self.components, other.components)])

    def __sub__(self, other):
        return PolyVF([a - b for a, b in zip(self.components, other.components)])

    def __mul__(self, c):
        return PolyVF([a * c for a in self.components])

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    def __eq__(self, other):
        if not isinstance(other, PolyVF):
            return NotImplemented
        return self.components == other.components

    __hash__ = None

    def is_zero(self):
        return all(c.is_zero() for c in self.components)

    def map(self, fn):
        return PolyVF([fn(c) for c in self.components])

    def __repr__(self):
        return "PolyVF(%s)" % ", ".join(
            "(%s) d/d%s" % (c.format(), VAR_NAMES[j]) for j, c in enumerate(self.components) if c
        )


def lie_bracket(v, w):
    """[V, W]_j = V(W_j) - W(V_j)."""
    if v.nvars != w.nvars or len(v.components) != len(w.components):
        raise DimensionMismatch("fields live in different dimensions")
    return PolyVF([v.apply(wj) - w.apply(vj) for vj, wj in zip(v.components, w.components)])


def reduce_mod_ideal(p):
    """Normal form modulo t3^2 - t2*t4: every t3^2 is rewritten to t2*t4."""
    if p.nvars != 4:
        raise DimensionMismatch("the relation lives in four variables")
    terms = {}
    for (a, b, c, d), coef in p._terms.items():
        q, r = divmod(c, 2)
        e = (a, b + q, r, d + q)
        terms[e] = terms.get(e, 0) + coef
    return MPoly(4, terms)


@dataclass(frozen=True)
class WeightVector:
    weights: tuple

    def euler_field(self):
        n = len(self.weights)
        return PolyVF([w * MPoly.var(i, n) for i, w in enumerate(self.weights, start=1)])


WEIGHTS_SL2 = WeightVector((2, 4, 6))
WEIGHTS_G2 = WeightVector((2, 2, 4))
WEIGHTS_G3 = WeightVector((2, 2, 4, 6))


# the systems

def _fields3():
    return variables(3)


def ramanujan_field():
    t1, t2, t3 = _fields3()
    return PolyVF([
        Fraction(1, 12) * (t1 ** 2 - t2),
        Fraction(1, 3) * (t1 * t2 - t3),
        Fraction(1, 2) * (t1 * t3 - t2 ** 2),
    ])


def ramanujan_gamma02_field():
    t1, t2, t3 = _fields3()
    return PolyVF([
        Fraction(1, 8) * (t1 ** 2 - t2 ** 2),
        Fraction(1, 4) * (t1 * t2 - t3),
        Fraction(1, 2) * (t1 * t3 - t2 ** 3),
    ])


def ramanujan_gamma03_field(t4_variant="system"):
    """
    The level-3 field.  ``t4_variant="system"`` uses t4' = t1 t4 + t2 t4,
    ``"field"`` uses t4' = t1 t4 + t3^2; the two agree modulo t3^2 - t2 t4.
    """
    t1, t2, t3, t4 = variables(4)
    if t4_variant == "system":
        last = t1 * t4 + t2 * t4
    elif t4_variant == "field":
        last = t1 * t4 + t3 ** 2
    else:
        raise ValueError("t4_variant must be 'system' or 'field'")
    return PolyVF([
        Fraction(1, 6) * (t1 ** 2 - t2 ** 2),
        Fraction(1, 3) * (t1 * t2 - t2 ** 2 + 54 * t3),
        Fraction(2, 3) * t1 * t3 + Fraction(1, 3) * t2 * t3 + 9 * t4,
        last,
    ])


def translation_field(nvars, c):
    """c * d/dt1."""
    comps = [MPoly.const(c, nvars)] + [MPoly(nvars)] * (nvars - 1)
    return PolyVF(comps)


def sl2_triple(group):
    """(E, H, F) for the group: the Ramanujan-type field, the Euler field and the translation field."""
    from .forms import Group

    group = Group.parse(group) if not isinstance(group, Group) else group
    if group == Group.SL2Z:
        return ramanujan_field(), WEIGHTS_SL2.euler_field(), translation_field(3, -12)
    if group == Group.Gamma0_2:
        return ramanujan_gamma02_field(), WEIGHTS_G2.euler_field(), translation_field(3, -8)
    # the Euler field's last weight is 6 (6 t4 d/dt4), forced by [E, F] = H
    return ramanujan_gamma03_field("field"), WEIGHTS_G3.euler_field(), translation_field(4, -6)


def original_n1_field():
    """Original coordinates of the cubic (n=1) system; dot = 3 q d/dq."""
    t1, t2, t3 = _fields3()
    return PolyVF([
        -t1 * t2 - 9 * (t1 ** 3 - t3),
        81 * t1 * (t1 ** 3 - t3) - t2 ** 2,
        -3 * t2 * t3,
    ])


def original_n2_field():
    """Original coordinates of the quartic (n=2) system; t3^2 = 4(t1^4 - t4) holds along it."""
    t1, t2, t3, t4 = variables(4)
    return PolyVF([
        t3 - t1 * t2,
        2 * t1 ** 2 - Fraction(1, 2) * t2 ** 2,
        -2 * t2 * t3 + 8 * t1 ** 3,
        -4 * t2 * t4,
    ])


def n1_change_of_variables():
    t1, t2, t3 = _fields3()
    return [-2 * t2 - 9 * t1 ** 2, 9 * t1 ** 2, 3 * t1 * t3, t3 ** 2]


def n2_change_of_variables():
    t1, t2, t3, _ = variables(4)
    return [20 * t2, 40 * t1, 800 * t3]


def n2_relation():
    """t1^4 - t3^2/4 - t4, which vanishes along the quartic system's solutions."""
    t1, _, t3, t4 = variables(4)
    return t1 ** 4 - Fraction(1, 4) * t3 ** 2 - t4


def ideal_generator(nvars=4):
    """t3^2 - t2 t4."""
    _, t2, t3, t4 = variables(nvars)[:4]
    return t3 ** 2 - t2 * t4


# operations on fields

def pushforward(v, phi, timescale=1):
    """
    Components timescale * V(phi_j), written in the source coordinates.

    The result has one component per target variable; compare it against a
    target field composed with ``phi`` using :func:`pushforward_residual`.
    """
    if not phi:
        raise SubstitutionError("empty change of variables")
    for p in phi:
        if p.nvars != v.nvars:
            raise SubstitutionError("change of variables is not written in the source variables")
    timescale = Fraction(timescale)
    return tuple(timescale * v.apply(p) for p in phi)


def pushforward_residual(v, phi, timescale, target, reduce=None):
    """Component-wise  timescale * V(phi_j) - target_j(phi), optionally reduced."""
    if len(target.components) != len(phi):
        raise SubstitutionError("target has %d components, map has %d" % (len(target.components), len(phi)))
    pushed = pushforward(v, phi, timescale)
    out = []
    for got, want in zip(pushed, target.components):
        r = got - want.compose(phi)
        out.append(reduce(r) if reduce else r)
    return out


def ode_residual(v, solution, dot_scale=1):
    """
    residual_j = dot_scale * q d/dq(solution_j) - V_j(solution).

    All-zero residuals certify the series tuple solves the system to the
    common precision.
    """
    if len(solution) != len(v.components) or len(solution) != v.nvars:
        raise DimensionMismatch("%d series for a %d-dimensional system" % (len(solution), v.nvars))
    precision = min(s.precision for s in solution)
    solution = [s.truncate(precision) for s in solution]
    one = QSeries.one(precision)
    out = []
    for s, comp in zip(solution, v.components):
        out.append(dot_scale * derive(s) - comp.evaluate(solution, one))
    return out


def check_sl2_triple(e, h, f, reduce=None):
    """[E,F] = H, [H,E] = 2E, [H,F] = -2F, each reported with its residual field."""
    relations = [
        ("[E,F]=H", lie_bracket(e, f) - h),
        ("[H,E]=2E", lie_bracket(h, e) - 2 * e),
        ("[H,F]=-2F", lie_bracket(h, f) - (-2) * f),
    ]
    report = []
    for name, residual in relations:
        if reduce:
            residual = residual.map(reduce)
        ok = residual.is_zero()
        report.append(Check(name, ok, "" if ok else "residual %r" % (residual,)))
    return report


def jacobi(a, b, c):
    """[A,[B,C]] + [B,[C,A]] + [C,[A,B]]."""
    return (lie_bracket(a, lie_bracket(b, c))
            + lie_bracket(b, lie_bracket(c, a))
            + lie_bracket(c, lie_bracket(a, b)))
