"""
Differential operators on q-series: Rankin-Cohen brackets, Ramanujan-Serre
derivations, the Chazy equations and the higher-order identities for
E2, P2 and P3.
"""

from fractions import Fraction

from .errors import DimensionMismatch
from .forms import Group, catalog, series
from .qseries import DEFAULT_PRECISION, derivatives
from .symalg import MPoly, PolyVF, reduce_mod_ideal, variables


def binomial(a, i):
    """C(a, i) for any integer a and i >= 0, by the multiplicative recurrence."""
    if i < 0:
        return 0
    num = 1
    den = 1
    for m in range(i):
        num *= a - m
        den *= m + 1
    return num // den


def rankin_cohen(f, k, g, l, n):
    """n-th Rankin-Cohen bracket of f (weight k) and g (weight l)."""
    if n < 0:
        raise ValueError("bracket order must be non-negative")
    df = derivatives(f, n)
    dg = derivatives(g, n)
    total = None
    for j in range(n + 1):
        i = n - j
        c = (-1) ** j * binomial(n + k - 1, i) * binomial(n + l - 1, j)
        if not c:
            continue
        term = c * (df[j] * dg[i])
        total = term if total is None else total + term
    if total is None:
        return 0 * (f * g)
    return total


# (w, P) in  f' - (k / w) P f
_SERRE = {Group.SL2Z: (12, "E2"), Group.Gamma0_2: (8, "P2"), Group.Gamma0_3: (6, "P3")}


def _group(group):
    return group if isinstance(group, Group) else Group.parse(group)


def serre_derivative(f, k, group=Group.SL2Z):
    """f' - (k/w) P f: the weight-k Ramanujan-Serre derivation for the group."""
    group = _group(group)
    w, name = _SERRE[group]
    p = series(name, f.precision)
    return f.derive() - Fraction(k, w) * (p * f)


def serre_field(group):
    """The Ramanujan-Serre derivation written as a vector field in the modular generators."""
    group = _group(group)
    if group == Group.SL2Z:
        _, t2, t3 = variables(3)
        zero = MPoly(3)
        return PolyVF([zero, Fraction(-1, 3) * t3, Fraction(-1, 2) * t2 ** 2])
    if group == Group.Gamma0_2:
        _, t2, t3 = variables(3)
        zero = MPoly(3)
        return PolyVF([zero, Fraction(-1, 4) * t3, Fraction(-1, 2) * t2 ** 3])
    _, t2, t3, t4 = variables(4)
    return PolyVF([
        MPoly(4),
        Fraction(1, 3) * (-t2 ** 2 + 54 * t3),
        Fraction(1, 3) * t2 * t3 + 9 * t4,
        t2 * t4,
    ])


def serre_derivative_poly(group, f):
    """The derivation applied to a polynomial in the modular generators (t2, t3[, t4])."""
    group = _group(group)
    v = serre_field(group)
    if f.nvars != v.nvars:
        raise DimensionMismatch("%s takes polynomials in %d variables" % (group.value, v.nvars))
    if f.diff(1):
        raise ValueError("the quasi-modular generator t1 may not appear")
    out = v.apply(f)
    if group == Group.Gamma0_3:
        out = reduce_mod_ideal(out)
    return out


GENERATOR_NAMES = {
    Group.SL2Z: ("E2", "E4", "E6"),
    Group.Gamma0_2: ("P2", "Q2", "R2"),
    Group.Gamma0_3: ("P3", "Q3", "R3", "S3"),
}

GENERATOR_WEIGHTS = {
    Group.SL2Z: (2, 4, 6),
    Group.Gamma0_2: (2, 2, 4),
    Group.Gamma0_3: (2, 2, 4, 6),
}


def generators(group, precision=DEFAULT_PRECISION):
    """Series of the quasi-modular generators t1..tn of the group."""
    return [series(name, precision) for name in GENERATOR_NAMES[_group(group)]]


def generator_forms(group, precision=DEFAULT_PRECISION):
    return [catalog(name, precision) for name in GENERATOR_NAMES[_group(group)]]


def chazy_residual(variant, y):
    """Left-hand side of the Chazy equation (classical) or its level-2 analogue (gamma02)."""
    d = derivatives(y, 3)
    y1, y2, y3 = d[1], d[2], d[3]
    if variant == "classical":
        return 2 * y3 - 2 * (y * y2) + 3 * (y1 * y1)
    if variant == "gamma02":
        yy = y * y
        return (y3 * (16 * y1 - 2 * yy)
                - y2 * (8 * y2 + 12 * (y * y1) - 2 * (yy * y))
                + (y1 * y1) * (20 * y1 - 3 * yy))
    raise ValueError("variant must be 'classical' or 'gamma02'")


def rc_quotient_identities(precision=DEFAULT_PRECISION):
    """
    Level-2 bracket identities as (name, residual) pairs:

        [D2, D2]_2 / (72 D2^2) = P2' - P2^2/8 = -Q2^2/8
        [D2, Q2]_1 / (8 D2)    = Q2' - P2 Q2/4 = -R2/4
        [D2, R2]_1 / (8 D2)    = R2' - P2 R2/2 = -Q2^3/2
    """
    # dividing by D2 (resp. D2^2) costs one (resp. two) orders of precision
    n = precision + 2
    d2 = series("Delta2", n)
    p, q, r = series("P2", n), series("Q2", n), series("R2", n)
    out = []
    quotients = [
        ("[D2,D2]_2", rankin_cohen(d2, 8, d2, 8, 2) / (72 * (d2 * d2)),
         p.derive() - Fraction(1, 8) * (p * p), Fraction(-1, 8) * (q * q)),
        ("[D2,Q2]_1", rankin_cohen(d2, 8, q, 2, 1) / (8 * d2),
         q.derive() - Fraction(1, 4) * (p * q), Fraction(-1, 4) * r),
        ("[D2,R2]_1", rankin_cohen(d2, 8, r, 4, 1) / (8 * d2),
         r.derive() - Fraction(1, 2) * (p * r), Fraction(-1, 2) * q ** 3),
    ]
    for name, bracket, quasi, modular in quotients:
        out.append((name + " quotient", (bracket - quasi).truncate(precision)))
        out.append((name + " value", (quasi - modular).truncate(precision)))
    return out


HIGHER_ORDER = ("sl2z_order5", "gamma02_order3", "gamma03_order3")


def higher_order_identity(which, precision=DEFAULT_PRECISION):
    """LHS - RHS of the displayed order-5 (E2) and order-3 (P2, P3) identities."""
    if which == "sl2z_order5":
        e2 = series("E2", precision)
        d = derivatives(e2, 5)
        lhs = 4 * d[5] - 10 * (e2 * d[4]) + 100 * (d[1] * d[3]) - 100 * (d[2] * d[2])
        return lhs - 144 * series("Delta", precision)
    if which == "gamma02_order3":
        p = series("P2", precision)
        d = derivatives(p, 3)
        lhs = -6 * (p * d[2]) + 9 * (d[1] * d[1]) + 4 * d[3]
        return lhs - 16 * series("Delta2", precision)
    if which == "gamma03_order3":
        p = series("P3", precision)
        d = derivatives(p, 3)
        lhs = d[3] - 2 * (p * d[2]) + 3 * (d[1] * d[1])
        return lhs - 6 * (series("Q3", precision) * series("Delta3", precision))
    raise ValueError("unknown identity %r; choose from %s" % (which, ", ".join(HIGHER_ORDER)))
