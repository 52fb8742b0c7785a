import pytest

from quasimodular.arith import sigma_power
from quasimodular.errors import DomainError, UnknownRule
from quasimodular.tau import (
    METHODS,
    RULES,
    WHICH,
    CongruenceRule,
    congruence_scan,
    first_disagreement,
    get_rule,
    scan_all,
    sigma_recurrence,
    sigma_values_by_recurrence,
    tau_by_eta,
    tau_table,
)

KNOWN = {
    "tau": [1, -24, 252, -1472, 4830, -6048, -16744, 84480, -113643, -115920],
    "tau2": [1, -8, 12, 64, -210, -96],
    "tau3": [1, -6, 9, 4, 6, -54, -40],
}


@pytest.mark.parametrize("which", WHICH)
@pytest.mark.parametrize("method", METHODS)
def test_known_values(which, method):
    want = KNOWN[which]
    table = tau_table(which, len(want), method)
    assert list(table.values) == want
    assert table[1] == 1


def naive_tau(which, n_max):
    """Dense product expansion, independent of the library's eta code."""
    factors = {"tau": [(1, 24)], "tau2": [(1, 8), (2, 8)], "tau3": [(1, 6), (3, 6)]}[which]
    size = n_max
    out = [1] + [0] * (size - 1)
    for r, t in factors:
        for k in range(1, size):
            if r * k >= size:
                break
            for _ in range(t):
                for i in range(size - 1, r * k - 1, -1):
                    out[i] -= out[i - r * k]
    return out[:n_max]


@pytest.mark.parametrize("which", WHICH)
def test_eta_route_against_naive(which):
    assert list(tau_by_eta(which, 120).values) == naive_tau(which, 120)


@pytest.mark.parametrize("which", WHICH)
def test_routes_agree(which):
    tables = [tau_table(which, 600, m) for m in METHODS]
    assert first_disagreement(tables[0], tables[1]) is None
    assert first_disagreement(tables[0], tables[2]) is None


def test_table_errors():
    with pytest.raises(ValueError):
        tau_table("tau4", 10)
    with pytest.raises(ValueError):
        tau_table("tau", 10, "magic")
    with pytest.raises(DomainError):
        tau_table("tau", 0)
    with pytest.raises(IndexError):
        tau_table("tau", 3)[0]


def test_first_disagreement():
    a = tau_table("tau", 5)
    b = type(a)("tau", "other", (1, -24, 252, 0, 4830))
    assert first_disagreement(a, b) == 4


def test_tau_hecke_multiplicativity():
    t = tau_table("tau", 200).as_list()
    for m, n in ((2, 3), (3, 5), (4, 7), (5, 11), (8, 9)):
        assert t[m * n] == t[m] * t[n]
    # tau(p^2) = tau(p)^2 - p^11
    for p in (2, 3, 5, 7, 11, 13):
        assert t[p * p] == t[p] ** 2 - p ** 11


def test_sigma_recurrence():
    s = sigma_values_by_recurrence(1500)
    assert all(s[n] == sigma_power(1, n) for n in range(1, 1501))
    assert sigma_recurrence(12) == 28
    with pytest.raises(DomainError):
        sigma_recurrence(1)


def test_rule_catalog():
    assert len(RULES) == 18
    assert get_rule("tau2-mod24").statement == "tau2(6k) = 0 mod 24"
    with pytest.raises(UnknownRule):
        get_rule("tau-mod691")


@pytest.mark.parametrize("name", sorted(RULES))
def test_rules_hold(name):
    rep = congruence_scan(name, 1500)
    assert rep.ok, rep.message()
    assert rep.checked > 0
    assert rep.message().startswith(name + ": no violation up to 1500")


def test_scan_detects_false_rule():
    bogus = CongruenceRule("tau-mod7", "tau(n) = 0 mod 7", lambda n, d: d.tau("tau")[n] % 7 == 0, ("tau",))
    rep = congruence_scan(bogus, 100)
    assert not rep.ok
    assert rep.violation == 1
    assert rep.message() == "tau-mod7: violated at n = 1"


def test_scan_all_and_bounds():
    reports = scan_all(300)
    assert len(reports) == 18 and all(r.ok for r in reports)
    with pytest.raises(DomainError):
        congruence_scan("sigma-mod2", 0)
