"""
Verification suites.  Each suite returns a list of Check records; the CLI
prints them and turns any failure into a nonzero exit code.
"""

from fractions import Fraction

from . import calculus, modspace, symalg
from .forms import Group, catalog, original_system_solution, series
from .qseries import QSeries
from .report import Check, series_detail
from .tables import known_terms

SUITES = ("systems", "sl2", "identities", "chazy", "serre", "pushforward", "bases")

DEFAULT_ORDER = {"systems": 200}
IDENTITY_ORDER = 64


def default_order(suite):
    return DEFAULT_ORDER.get(suite, IDENTITY_ORDER)


def _series_check(name, residual, note=""):
    ok = residual.is_zero()
    detail = series_detail(residual)
    if note:
        detail = "%s, %s" % (detail, note)
    return Check(name, ok, detail)


def _components_check(name, residuals):
    for j, r in enumerate(residuals, 1):
        if not r.is_zero():
            return Check(name, False, "component t%d: %s" % (j, series_detail(r)))
    return Check(name, True, "all %d components zero to O(q^%d)" % (len(residuals), residuals[0].precision))


def _poly_check(name, polys):
    polys = list(polys)
    for j, p in enumerate(polys, 1):
        if not p.is_zero():
            return Check(name, False, "component %d residual %s" % (j, p.format()))
    return Check(name, True, "exact")


# ODE systems

def suite_systems(order):
    gens = {g: calculus.generators(g, order) for g in Group}
    checks = [
        _components_check("Ramanujan system (E2, E4, E6)",
                          symalg.ode_residual(symalg.ramanujan_field(), gens[Group.SL2Z])),
        _components_check("Gamma0(2) system (P2, Q2, R2)",
                          symalg.ode_residual(symalg.ramanujan_gamma02_field(), gens[Group.Gamma0_2])),
        _components_check("Gamma0(3) system (P3, Q3, R3, S3), t4' = t1 t4 + t2 t4",
                          symalg.ode_residual(symalg.ramanujan_gamma03_field("system"), gens[Group.Gamma0_3])),
    ]
    # the second variant differs from the first by a multiple of t3^2 - t2 t4
    field = symalg.ramanujan_gamma03_field("field")
    checks.append(_components_check("Gamma0(3) system (P3, Q3, R3, S3), t4' = t1 t4 + t3^2",
                                    symalg.ode_residual(field, gens[Group.Gamma0_3])))
    reduced = field.map(symalg.reduce_mod_ideal)
    checks.append(Check("t4' variants agree modulo t3^2 - t2 t4",
                        reduced == symalg.ramanujan_gamma03_field("system"), "after reduction"))
    checks.append(_components_check(
        "cubic original system, dot = 3 q d/dq",
        symalg.ode_residual(symalg.original_n1_field(), original_system_solution(order), 3)))
    return checks


# sl2 triples

def suite_sl2(order=None):
    checks = []
    for group in Group:
        reduce = symalg.reduce_mod_ideal if group == Group.Gamma0_3 else None
        e, h, f = symalg.sl2_triple(group)
        raw = symalg.check_sl2_triple(e, h, f)
        for c, r in zip(symalg.check_sl2_triple(e, h, f, reduce), raw):
            c.name = "%s %s" % (group.value, c.name)
            if reduce and c.passed:
                c.detail = "modulo t3^2 - t2 t4" + (" (exact before reduction)" if r.passed else "")
            checks.append(c)
    return checks


# changes of variables

def suite_pushforward(order=None):
    checks = []
    phi2 = symalg.n2_change_of_variables()
    checks.append(_poly_check(
        "quartic system -> Gamma0(2) system, timescale -5",
        symalg.pushforward_residual(symalg.original_n2_field(), phi2, -5, symalg.ramanujan_gamma02_field())))
    phi1 = symalg.n1_change_of_variables()
    for variant in ("system", "field"):
        checks.append(_poly_check(
            "cubic system -> Gamma0(3) system (%s t4'), timescale 1/3" % variant,
            symalg.pushforward_residual(symalg.original_n1_field(), phi1, Fraction(1, 3),
                                        symalg.ramanujan_gamma03_field(variant))))
    pulled = symalg.ideal_generator().compose(phi1)
    checks.append(_poly_check("t3^2 - t2 t4 pulls back to zero under the cubic map", [pulled]))
    checks.extend(relation_checks())
    return checks


def relation_checks():
    """The quartic system's algebraic relation and its image under the change of variables."""
    rel = symalg.n2_relation()
    v = symalg.original_n2_field()
    _, t2, _, t4 = symalg.variables(4)
    out = [_poly_check("V(t1^4 - t3^2/4 - t4) = -4 t2 (t1^4 - t3^2/4 - t4)",
                       [v.apply(rel) + 4 * t2 * rel])]
    _, s2, s3 = symalg.variables(3)
    delta = Fraction(1, 256) * (s2 ** 4 - s3 ** 2)
    image = delta.compose(symalg.n2_change_of_variables())
    # image - 10^4 t4 is 10^4 times the relation, so Delta2 = 10^4 t4 along solutions
    out.append(_poly_check("(t2~^4 - t3~^2)/256 - 10^4 t4 = 10^4 (t1^4 - t3^2/4 - t4)",
                           [image - 10 ** 4 * t4 - 10 ** 4 * rel]))
    return out


# q-series identities

def _certify(name, f, g, group, k):
    cert = modspace.certify_equal(f, g, group, k)
    return Check(name, cert.equal, "%s through q^%d (coefficient bound)" % (cert, cert.bound))


def _fixture_check(name, precision):
    s = series(name, precision)
    for e, c in sorted(known_terms(name).items()):
        if e >= precision:
            break
        if s.coeff(e) != c:
            return Check("%s tabulated coefficients" % name, False, "q^%d: got %s, expected %d" % (e, s.coeff(e), c))
    return Check("%s tabulated coefficients" % name, True, "match")


def suite_identities(order):
    p = order
    checks = []
    e4, e6, delta = catalog("E4", p), catalog("E6", p), catalog("Delta", p)
    q2, r2, d2 = catalog("Q2", p), catalog("R2", p), catalog("Delta2", p)
    q3, r3, s3, d3 = catalog("Q3", p), catalog("R3", p), catalog("S3", p), catalog("Delta3", p)

    lhs = (e4.series ** 3 - e6.series ** 2) / 1728
    checks.append(_certify("Delta = (E4^3 - E6^2)/1728", delta.series, lhs, Group.SL2Z, 12))
    lhs = (q2.series ** 4 - r2.series ** 2) / 256
    checks.append(_certify("Delta2 = (Q2^4 - R2^2)/256", d2, lhs, Group.Gamma0_2, 8))
    lhs = q3.series * r3.series - 27 * s3.series
    checks.append(_certify("Delta3 = Q3 R3 - 27 S3", d3, lhs, Group.Gamma0_3, 6))
    checks.append(_series_check("R3^2 = Q3 S3", r3.series ** 2 - q3.series * s3.series))

    for d, pname, label in (("Delta", "E2", "Delta' = E2 Delta"),
                            ("Delta2", "P2", "Delta2' = P2 Delta2"),
                            ("Delta3", "P3", "Delta3' = P3 Delta3")):
        f = series(d, p)
        checks.append(_series_check(label, f.derive() - series(pname, p) * f))

    for jname, num, den in (("j", "E4^3", "Delta"), ("j2", "Q2^4", "Delta2"), ("j3", "Q3^3", "Delta3")):
        base, e = num.split("^")
        lhs = series(jname, p) * series(den, p)
        checks.append(_series_check("%s %s = %s" % (jname, den, num), lhs - series(base, p) ** int(e)))
    for name in ("P2", "Q2", "R2", "Delta2", "P3", "Q3", "R3", "S3", "Delta3", "j", "j2", "j3"):
        checks.append(_fixture_check(name, p))

    for name, residual in calculus.rc_quotient_identities(p):
        checks.append(_series_check("Rankin-Cohen " + name, residual))
    for which in calculus.HIGHER_ORDER:
        checks.append(_series_check("higher-order " + which, calculus.higher_order_identity(which, p)))
    return checks


def suite_chazy(order):
    return [
        _series_check("Chazy equation at E2", calculus.chazy_residual("classical", series("E2", order)),
                      "precision-verified, not certified"),
        _series_check("Chazy-type equation at P2", calculus.chazy_residual("gamma02", series("P2", order)),
                      "precision-verified, not certified"),
    ]


# Serre derivations

def _monomials(weights, k):
    """Exponent tuples e with sum e_i w_i = k."""
    if not weights:
        return [()] if k == 0 else []
    out = []
    for e in range(k // weights[0] + 1):
        for rest in _monomials(weights[1:], k - e * weights[0]):
            out.append((e,) + rest)
    return out


def suite_serre(order, max_weight=12):
    checks = []
    for group in Group:
        gens = calculus.generators(group, order)
        weights = calculus.GENERATOR_WEIGHTS[group][1:]
        one = QSeries.one(order)
        bad = None
        count = 0
        for k in range(2, max_weight + 1, 2):
            for exps in _monomials(weights, k):
                mono = symalg.MPoly.monomial((0,) + exps)
                value = mono.evaluate(gens, one)
                by_series = calculus.serre_derivative(value, k, group)
                by_poly = calculus.serre_derivative_poly(group, mono).evaluate(gens, one)
                count += 1
                if by_series != by_poly:
                    bad = (exps, series_detail(by_series - by_poly))
                    break
            if bad:
                break
        name = "%s derivation: series and polynomial forms" % group.value
        if bad:
            checks.append(Check(name, False, "monomial %s: %s" % bad))
        else:
            checks.append(Check(name, True, "%d monomials of weight <= %d" % (count, max_weight)))
    return checks


def suite_bases(order=None, max_weight=24):
    checks = []
    for group in (Group.Gamma0_2, Group.Gamma0_3):
        failed = None
        for k in range(2, max_weight + 1, 2):
            rep = modspace.verify_independence(group, k)
            if not rep.passed:
                failed = rep
                break
        name = "%s monomial bases, k <= %d" % (group.value, max_weight)
        if failed:
            checks.append(Check(name, False, "k = %d: rank %d, dim %d" % (failed.weight, failed.rank, failed.dimension)))
        else:
            checks.append(Check(name, True, "full rank on coefficients up to the bound"))
    return checks


_RUNNERS = {
    "systems": suite_systems,
    "sl2": suite_sl2,
    "identities": suite_identities,
    "chazy": suite_chazy,
    "serre": suite_serre,
    "pushforward": suite_pushforward,
    "bases": suite_bases,
}


def run_suite(suite, order=None):
    """Run one suite (or "all") and return its checks."""
    if suite == "all":
        out = []
        for name in SUITES:
            out.extend(run_suite(name, order))
        return out
    if suite not in _RUNNERS:
        raise ValueError("unknown suite %r; choose from all, %s" % (suite, ", ".join(SUITES)))
    return _RUNNERS[suite](default_order(suite) if order is None else order)
