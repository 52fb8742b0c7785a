"""
Named q-expansions: Eisenstein series, eta quotients, theta series and the
generators of the quasi-modular algebras for SL2(Z), Gamma0(2), Gamma0(3).
"""

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

from .arith import euler_coefficients, sigma_table
from .errors import FractionalExponent, UnknownName
from .intconv import convolve, sparse_power
from .qseries import DEFAULT_PRECISION, QSeries, substitute


class Group(enum.Enum):
    SL2Z = "SL2Z"
    Gamma0_2 = "Gamma0_2"
    Gamma0_3 = "Gamma0_3"

    @property
    def level(self):
        return {"SL2Z": 1, "Gamma0_2": 2, "Gamma0_3": 3}[self.value]

    @property
    def index(self):
        """Index in PSL2(Z): 1 for the full group, p+1 for Gamma0(p)."""
        return {1: 1, 2: 3, 3: 4}[self.level]

    @classmethod
    def from_level(cls, level):
        for g in cls:
            if g.level == level:
                return g
        raise ValueError("no group of level %r" % (level,))

    @classmethod
    def parse(cls, text):
        text = str(text)
        aliases = {"1": cls.SL2Z, "2": cls.Gamma0_2, "3": cls.Gamma0_3}
        if text in aliases:
            return aliases[text]
        for g in cls:
            if g.value.lower() == text.lower():
                return g
        raise ValueError("unknown group %r" % (text,))


KINDS = ("modular", "quasimodular", "cusp", "weakly")


def _join_groups(a, b):
    if a is None or b is None:
        return None
    if a == b or b == Group.SL2Z:
        return a
    if a == Group.SL2Z:
        return b
    return None  # no common group among the supported ones


@dataclass(frozen=True)
class FormDescriptor:
    weight: int
    group: Optional[Group]
    kind: str

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError("unknown kind %r" % (self.kind,))

    def __mul__(self, other):
        kinds = {self.kind, other.kind}
        if "weakly" in kinds:
            kind = "weakly"
        elif "quasimodular" in kinds:
            kind = "quasimodular"
        elif "cusp" in kinds:
            kind = "cusp"
        else:
            kind = "modular"
        return FormDescriptor(self.weight + other.weight, _join_groups(self.group, other.group), kind)

    def __pow__(self, e):
        if e == 0:
            return FormDescriptor(0, self.group, "modular")
        out = self
        for _ in range(e - 1):
            out = out * self
        return out

    def derive(self):
        kind = self.kind
        if kind in ("modular", "cusp") and self.weight > 0:
            kind = "quasimodular"
        return FormDescriptor(self.weight + 2, self.group, kind)


class Form(NamedTuple):
    series: QSeries
    descriptor: FormDescriptor


@dataclass(frozen=True)
class EtaQuotientSpec:
    """prod_j eta(q^r_j)^t_j given as (r_j, t_j) pairs."""

    factors: tuple

    def __init__(self, factors):
        factors = tuple((int(r), int(t)) for r, t in factors)
        for r, _ in factors:
            if r < 1:
                raise ValueError("eta quotient needs positive r, got %d" % r)
        object.__setattr__(self, "factors", factors)

    @property
    def order(self):
        """The q-order  sum r_j t_j / 24 as a Fraction."""
        return Fraction(sum(r * t for r, t in self.factors), 24)

    def check(self):
        total = sum(r * t for r, t in self.factors)
        if total % 24:
            raise FractionalExponent("sum r*t = %d is not a multiple of 24" % total)
        return total // 24


# Eisenstein normalisations  E_2j = 1 + b_j sum sigma_{2j-1}(n) q^n
EISENSTEIN_FACTOR = {1: -24, 2: 240, 3: -504}


def eisenstein(j, m=1, precision=DEFAULT_PRECISION):
    """E_{2j}(q^m) with its descriptor."""
    if j not in EISENSTEIN_FACTOR:
        raise ValueError("j must be 1, 2 or 3")
    if m < 1 or precision < 1:
        raise ValueError("need m >= 1 and precision >= 1")
    b = EISENSTEIN_FACTOR[j]
    top = (precision - 1) // m
    coeffs = [0] * precision
    coeffs[0] = 1
    if top >= 1:
        sig = sigma_table(2 * j - 1, top)
        for n in range(1, top + 1):
            coeffs[m * n] = b * sig[n]
    try:
        group = Group.from_level(m)
    except ValueError:
        group = None
    kind = "quasimodular" if j == 1 else "modular"
    return Form(QSeries(coeffs, 0, precision), FormDescriptor(2 * j, group, kind))


def _eta_power_integral(r, t, length):
    """Coefficients of prod(1 - q^{rn})^t for exponents 0..length-1."""
    inner = (length - 1) // r + 1
    base = sparse_power(list(euler_coefficients(inner)), t, inner)
    out = [0] * length
    for i, c in enumerate(base):
        out[r * i] = c
    return out


def eta_quotient_coefficients(spec, length):
    """Integer coefficients of the eta quotient divided by its leading power of q."""
    spec.check()
    out = [1] + [0] * (length - 1)
    for r, t in spec.factors:
        if t:
            out = convolve(out, _eta_power_integral(r, t, length), length)
    return out


def eta_quotient(spec, precision=DEFAULT_PRECISION):
    if not isinstance(spec, EtaQuotientSpec):
        spec = EtaQuotientSpec(spec)
    valuation = spec.check()
    length = precision - valuation
    if length <= 0:
        return QSeries.zero(precision)
    return QSeries(eta_quotient_coefficients(spec, length), valuation, precision)


def eta_quotient_log_derivative(spec, precision=DEFAULT_PRECISION):
    """sum_j (r_j t_j / 24) E_2(q^r_j), the logarithmic derivative of the eta quotient."""
    if not isinstance(spec, EtaQuotientSpec):
        spec = EtaQuotientSpec(spec)
    spec.check()
    total = QSeries.zero(precision)
    for r, t in spec.factors:
        total = total + Fraction(r * t, 24) * eisenstein(1, r, precision).series
    return total


def theta3(m=1, sign=1, precision=DEFAULT_PRECISION):
    """theta_3(sign * q^m) = 1 + 2 sum_{n>=1} sign^n q^{m n^2}."""
    terms = {0: 1}
    n = 1
    while m * n * n < precision:
        terms[m * n * n] = 2 if sign == 1 or n % 2 == 0 else -2
        n += 1
    return QSeries.from_dict(terms, precision)


# catalog

def _delta(p):
    return eta_quotient([(1, 24)], p)


def _delta2(p):
    return eta_quotient([(1, 8), (2, 8)], p)


def _delta3(p):
    return eta_quotient([(1, 6), (3, 6)], p)


def _e2(m, p):
    return eisenstein(1, m, p).series


def _p2(p):
    return (_e2(1, p) + 2 * _e2(2, p)) / 3


def _q2(p):
    return 2 * _e2(2, p) - _e2(1, p)


def _r2(p):
    return (4 * eisenstein(2, 2, p).series - eisenstein(2, 1, p).series) / 3


def _p3(p):
    return (_e2(1, p) + 3 * _e2(3, p)) / 4


def _q3(p):
    return (3 * _e2(3, p) - _e2(1, p)) / 2


def _r3(p):
    return eta_quotient([(3, 8)], p) + 9 * eta_quotient([(3, 8), (9, 3), (1, -3)], p)


def _s3(p):
    return eta_quotient([(3, 18), (1, -6)], p)


def _p3orig(p):
    a = theta3(2, 1, p) * theta3(6, 1, p)
    b = theta3(2, -1, p) * theta3(6, -1, p)
    return (2 * a - b) / 3


def _weakly(numerator, denominator, p):
    # dividing by a q + O(q^2) series costs two orders of precision
    return (numerator(p + 2) / denominator(p + 2)).truncate(p)


_SL2 = Group.SL2Z
_G2 = Group.Gamma0_2
_G3 = Group.Gamma0_3

_CATALOG = {
    "E2": (lambda p: _e2(1, p), FormDescriptor(2, _SL2, "quasimodular")),
    "E4": (lambda p: eisenstein(2, 1, p).series, FormDescriptor(4, _SL2, "modular")),
    "E6": (lambda p: eisenstein(3, 1, p).series, FormDescriptor(6, _SL2, "modular")),
    "Delta": (_delta, FormDescriptor(12, _SL2, "cusp")),
    "P2": (_p2, FormDescriptor(2, _G2, "quasimodular")),
    "Q2": (_q2, FormDescriptor(2, _G2, "modular")),
    "R2": (_r2, FormDescriptor(4, _G2, "modular")),
    "Delta2": (_delta2, FormDescriptor(8, _G2, "cusp")),
    "P3": (_p3, FormDescriptor(2, _G3, "quasimodular")),
    "Q3": (_q3, FormDescriptor(2, _G3, "modular")),
    "R3": (_r3, FormDescriptor(4, _G3, "modular")),
    "S3": (_s3, FormDescriptor(6, _G3, "modular")),
    "Delta3": (_delta3, FormDescriptor(6, _G3, "cusp")),
    "j": (lambda p: _weakly(lambda n: eisenstein(2, 1, n).series ** 3, _delta, p),
          FormDescriptor(0, _SL2, "weakly")),
    "j2": (lambda p: _weakly(lambda n: _q2(n) ** 4, _delta2, p), FormDescriptor(0, _G2, "weakly")),
    "j3": (lambda p: _weakly(lambda n: _q3(n) ** 3, _delta3, p), FormDescriptor(0, _G3, "weakly")),
}

FORM_NAMES = tuple(_CATALOG)

# OEIS A-numbers of the catalogued forms
OEIS_IDS = {
    "Q2": "A004011",
    "Delta2": "A002288",
    "j2": "A007267",
    "Q3": "A008653",
    "R3": "A198956",
    "S3": "A198958",
    "Delta3": "A007332",
    "j3": "A030197",
}


def catalog(name, precision=DEFAULT_PRECISION):
    """The named form to O(q^precision) together with its descriptor."""
    try:
        build, descriptor = _CATALOG[name]
    except KeyError:
        raise UnknownName("unknown form %r; known: %s" % (name, ", ".join(FORM_NAMES))) from None
    return Form(build(precision), descriptor)


def series(name, precision=DEFAULT_PRECISION):
    """Shorthand for catalog(name, precision).series."""
    return catalog(name, precision).series


def p3_original(precision=DEFAULT_PRECISION):
    """The weight-one theta combination (2 th(q^2) th(q^6) - th(-q^2) th(-q^6)) / 3; no descriptor."""
    return _p3orig(precision)


def original_system_solution(precision=DEFAULT_PRECISION, scale=1):
    """
    Series triple solving the cubic-coordinate system in its original variables.

    With ``scale=1`` the triple is (a(q)/3, (E2(q) - 9 E2(q^3))/8, eta(q^3)^9/eta(q)^3),
    a(q) the cubic theta series, and it solves the system with dot = 3 q d/dq.
    ``scale=m`` substitutes q -> q^m in all three components.
    """
    p = -(-precision // scale)
    a = theta3(1, 1, p) * theta3(3, 1, p)
    b = theta3(1, -1, p) * theta3(3, -1, p)
    t1 = (2 * a - b) / 3
    t2 = (_e2(1, p) - 9 * _e2(3, p)) / 8
    t3 = eta_quotient([(3, 9), (1, -3)], p)
    return [substitute(s, scale).truncate(precision) for s in (t1, t2, t3)]


def printed_original_solution(precision=DEFAULT_PRECISION):
    """The triple exactly as displayed: theta and E2 parts at q^2, the eta part at q."""
    t1 = p3_original(precision)
    t2 = (_e2(2, precision) - 9 * _e2(6, precision)) / 8
    t3 = eta_quotient([(3, 9), (1, -3)], precision)
    return [t1, t2, t3]
