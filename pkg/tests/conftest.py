from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from quasimodular.qseries import QSeries
from quasimodular.symalg import MPoly, PolyVF

settings.register_profile(
    "default", max_examples=120, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

small_ints = st.integers(min_value=-30, max_value=30)
fractions = st.builds(Fraction, small_ints, st.integers(min_value=1, max_value=7))


@st.composite
def qseries(draw, min_val=-3, max_val=4, min_len=0, max_len=12, precision=None):
    """Random QSeries with small rational coefficients."""
    val = draw(st.integers(min_value=min_val, max_value=max_val))
    coeffs = draw(st.lists(fractions, min_size=min_len, max_size=max_len))
    if precision is None:
        precision = draw(st.integers(min_value=val + 1, max_value=val + 14))
    return QSeries(coeffs, val, precision)


@st.composite
def units(draw, precision=12):
    """Series with a nonzero leading term at q^0 (invertible power series)."""
    lead = draw(fractions.filter(bool))
    rest = draw(st.lists(fractions, max_size=precision - 1))
    return QSeries([lead] + rest, 0, precision)


@st.composite
def power_series(draw, precision=12):
    coeffs = draw(st.lists(fractions, max_size=precision))
    return QSeries(coeffs, 0, precision)


@st.composite
def mpolys(draw, nvars=3, max_terms=5, max_deg=3):
    terms = {}
    for _ in range(draw(st.integers(min_value=0, max_value=max_terms))):
        exps = tuple(draw(st.integers(min_value=0, max_value=max_deg)) for _ in range(nvars))
        terms[exps] = draw(fractions)
    return MPoly(nvars, terms)


@st.composite
def fields(draw, nvars=3, max_terms=3, max_deg=2):
    return PolyVF([draw(mpolys(nvars, max_terms, max_deg)) for _ in range(nvars)])


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[number])
