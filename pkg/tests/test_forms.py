from fractions import Fraction

import pytest

from quasimodular import symalg
from quasimodular.errors import FractionalExponent, UnknownName
from quasimodular.forms import (
    FORM_NAMES,
    OEIS_IDS,
    EtaQuotientSpec,
    FormDescriptor,
    Group,
    catalog,
    eisenstein,
    eta_quotient,
    eta_quotient_log_derivative,
    original_system_solution,
    p3_original,
    printed_original_solution,
    series,
    theta3,
)
from quasimodular.qseries import QSeries, substitute
from quasimodular.tables import KNOWN_EXPANSIONS, known_terms

TAU = [1, -24, 252, -1472, 4830, -6048, -16744, 84480, -113643, -115920]


def naive_eta_product(factors, n):
    """prod_j prod_k (1 - q^{r_j k})^{t_j} by repeated multiplication, as dense lists of length n."""
    out = [Fraction(1)] + [Fraction(0)] * (n - 1)
    for r, t in factors:
        for k in range(1, n):
            step = r * k
            if step >= n:
                break
            for _ in range(abs(t)):
                new = out[:]
                if t > 0:
                    for i in range(step, n):
                        new[i] -= out[i - step]
                else:
                    # divide by (1 - q^step): running sum
                    for i in range(step, n):
                        new[i] += new[i - step]
                out = new
    return out


def naive_sigma(k, n):
    return sum(d ** k for d in range(1, n + 1) if n % d == 0)


def test_eisenstein_coefficients():
    for j, b in ((1, -24), (2, 240), (3, -504)):
        s = eisenstein(j, 1, 30).series
        assert s.coeff(0) == 1
        assert all(s.coeff(n) == b * naive_sigma(2 * j - 1, n) for n in range(1, 30))


def test_eisenstein_at_q_power():
    s = eisenstein(1, 3, 20).series
    assert s.coeff(3) == -24 and s.coeff(6) == -72 and s.coeff(4) == 0
    assert eisenstein(2, 2, 10).descriptor == FormDescriptor(4, Group.Gamma0_2, "modular")
    assert eisenstein(1, 5, 10).descriptor.group is None


def test_delta_is_eta24():
    d = series("Delta", 11)
    assert d.valuation == 1
    assert d.coefficients(1, 11) == TAU
    assert d.coefficients(1, 11) == naive_eta_product([(1, 24)], 10)


@pytest.mark.parametrize("factors", [
    [(1, 8), (2, 8)],
    [(1, 6), (3, 6)],
    [(3, 18), (1, -6)],
    [(3, 9), (1, -3)],
    [(1, -24)],
    [(2, 16), (1, -8)],
])
def test_eta_quotients_against_naive_product(factors):
    spec = EtaQuotientSpec(factors)
    n = 25
    s = eta_quotient(spec, n + spec.check())
    assert s.valuation == spec.check()
    assert s.coefficients(spec.check(), n + spec.check()) == naive_eta_product(factors, n)


def test_eta_quotient_needs_integral_order():
    with pytest.raises(FractionalExponent):
        eta_quotient([(1, 1)], 10)
    assert EtaQuotientSpec([(1, 1)]).order == Fraction(1, 24)
    with pytest.raises(ValueError):
        EtaQuotientSpec([(0, 24)])


@pytest.mark.parametrize("factors", [[(1, 24)], [(1, 8), (2, 8)], [(3, 9), (1, -3)]])
def test_eta_log_derivative(factors):
    f = eta_quotient(factors, 40)
    assert f.derive() == f * eta_quotient_log_derivative(factors, 40)


def test_theta3():
    t = theta3(1, 1, 30)
    squares = {k * k for k in range(6)}
    assert all(t.coeff(n) == (1 if n == 0 else (2 if n in squares else 0)) for n in range(30))
    t2 = theta3(1, 1, 30) ** 2
    # sum of two squares counts
    counts = [sum(1 for a in range(-6, 7) for b in range(-6, 7) if a * a + b * b == n) for n in range(30)]
    assert t2.coefficients(0, 30) == counts
    assert theta3(2, -1, 10).coefficients(0, 10) == [1, 0, -2, 0, 0, 0, 0, 0, 2, 0]


@pytest.mark.parametrize("name", sorted(KNOWN_EXPANSIONS))
def test_tabulated_expansions(name):
    s = series(name, 12)
    for e, c in known_terms(name).items():
        assert s.coeff(e) == c
    assert s.is_integral()


def test_catalog_descriptors():
    assert catalog("Q2").descriptor == FormDescriptor(2, Group.Gamma0_2, "modular")
    assert catalog("P3").descriptor.kind == "quasimodular"
    assert catalog("Delta3").descriptor == FormDescriptor(6, Group.Gamma0_3, "cusp")
    assert catalog("j2").descriptor.kind == "weakly"
    for name in ("j", "j2", "j3"):
        assert series(name, 10).valuation == -1
        assert series(name, 10).precision == 10
    assert set(OEIS_IDS) <= set(FORM_NAMES)
    with pytest.raises(UnknownName):
        catalog("E8")


def test_descriptor_algebra():
    q2, r2, e4, q3, p2 = (catalog(n).descriptor for n in ("Q2", "R2", "E4", "Q3", "P2"))
    assert q2 * r2 == FormDescriptor(6, Group.Gamma0_2, "modular")
    assert (e4 * q2).group == Group.Gamma0_2
    assert (q2 * q3).group is None
    assert (p2 * q2).kind == "quasimodular"
    assert (catalog("Delta2").descriptor * q2).kind == "cusp"
    assert q2.derive() == FormDescriptor(4, Group.Gamma0_2, "quasimodular")
    assert (q2 ** 3).weight == 6
    with pytest.raises(ValueError):
        FormDescriptor(2, None, "harmonic")


def test_generator_definitions():
    p = 40
    e2 = series("E2", p)
    e2_2 = substitute(e2, 2).truncate(p)
    e2_3 = substitute(e2, 3).truncate(p)
    assert series("P2", p) == (e2 + 2 * e2_2) / 3
    assert series("Q2", p) == 2 * e2_2 - e2
    assert series("P3", p) == (e2 + 3 * e2_3) / 4
    assert series("Q3", p) == (3 * e2_3 - e2) / 2
    e4 = series("E4", p)
    assert series("R2", p) == (4 * substitute(e4, 2).truncate(p) - e4) / 3


def test_cubic_theta_solution():
    p = 60
    t1, t2, t3 = original_system_solution(p)
    # a(q)^2 = Q3 with a = 3 t1
    assert (3 * t1) ** 2 == series("Q3", p)
    assert 27 * t3 * (t1 ** 3 - t3) == series("Delta3", p)
    assert 27 * (t1 ** 3 - t3) == eta_quotient([(1, 9), (3, -3)], p)
    assert substitute(t1, 2).truncate(p) == p3_original(p)
    s1, s2, s3 = original_system_solution(p, scale=2)
    assert s1 == p3_original(p) and s1.precision == p


def test_printed_mixed_solution_is_not_a_solution():
    # theta and E2 parts at q^2 with the eta part at q: the residual is nonzero from q^1
    res = symalg.ode_residual(symalg.original_n1_field(), printed_original_solution(30), 3)
    assert not res[0].is_zero()
    assert min(r.valuation for r in res) == 1
