"""
The tau functions of Delta, Delta2 and Delta3 computed three ways, the sigma
recurrence coming from the level-2 system, and the congruence catalog.
"""

from dataclasses import dataclass
from math import gcd
from operator import mul
from typing import Callable, Optional

from .arith import sigma_table
from .errors import DomainError, NonIntegralResult, UnknownRule
from .forms import EtaQuotientSpec, eta_quotient_coefficients

WHICH = ("tau", "tau2", "tau3")
METHODS = ("eta_product", "log_recursion", "explicit_formula")

ETA_SPECS = {
    "tau": EtaQuotientSpec([(1, 24)]),
    "tau2": EtaQuotientSpec([(1, 8), (2, 8)]),
    "tau3": EtaQuotientSpec([(1, 6), (3, 6)]),
}


def _exact(num, den, where):
    q, r = divmod(num, den)
    if r:
        raise NonIntegralResult("%s: %d is not divisible by %d" % (where, num, den))
    return q


@dataclass(frozen=True)
class TauTable:
    which: str
    method: str
    values: tuple  # values[i] is the coefficient of q^(i+1)

    def __getitem__(self, n):
        if n < 1:
            raise IndexError("tau tables start at n = 1")
        return self.values[n - 1]

    def __len__(self):
        return len(self.values)

    def as_list(self):
        """Values padded with a leading zero so that list[n] = tau(n)."""
        return [0] + list(self.values)


def _check_which(which):
    if which not in WHICH:
        raise ValueError("which must be one of %s" % ", ".join(WHICH))


# sigma

def sigma_values_by_recurrence(n_max):
    """[0, sigma(1), ..., sigma(n_max)] from the even/odd recurrence, exact divisions checked."""
    s = [0] * (n_max + 1)
    if n_max >= 1:
        s[1] = 1
    for n in range(2, n_max + 1):
        k, odd = divmod(n, 2)
        if odd:
            acc = 8 * sum(map(mul, s[1:k + 1], s[2 * k:k:-1]))
            acc -= 20 * sum(map(mul, s[1:k + 1], s[2 * k - 1:0:-2]))
            s[n] = _exact(acc, k, "sigma(%d)" % n)
        else:
            acc = 2 * sum(map(mul, s[1:k], s[2 * k - 1:k:-1]))
            acc += 4 * sum(map(mul, s[1:k], s[k - 1:0:-1]))
            acc -= 5 * sum(map(mul, s[1:k], s[2 * k - 2:0:-2]))
            num = 8 * acc - (4 * k + 1) * s[k] + 8 * s[k] ** 2
            s[n] = _exact(num, 2 * k - 1, "sigma(%d)" % n)
    return s


def sigma_recurrence(n):
    """sigma(n) for n >= 2 from the recurrence (all smaller values are computed on the way)."""
    if n < 2:
        raise DomainError("the recurrence starts at n = 2")
    return sigma_values_by_recurrence(n)[n]


# kernels  sigma(m) + r delta_r^m sigma(m/r), and the twisted Q3 kernel

def _kernel(level, sign, size):
    sig = sigma_table(1, size).values
    out = list(sig)
    if level > 1:
        for m in range(level, size + 1, level):
            out[m] += sign * level * sig[m // level]
    out[0] = 0
    return out


def _recursion_kernel(which, size):
    return {
        "tau": (-24, _kernel(1, 1, size)),
        "tau2": (-8, _kernel(2, 1, size)),
        "tau3": (-6, _kernel(3, 1, size)),
    }[which]


# the three routes

def tau_by_eta(which, n_max):
    _check_which(which)
    if n_max < 1:
        raise DomainError("need N >= 1")
    return TauTable(which, "eta_product", tuple(eta_quotient_coefficients(ETA_SPECS[which], n_max)))


def tau_by_recursion(which, n_max):
    """From Delta_g' = P Delta_g: tau(n) = c/(n-1) sum_{j<n} tau(j) K(n-j)."""
    _check_which(which)
    if n_max < 1:
        raise DomainError("need N >= 1")
    factor, kern = _recursion_kernel(which, n_max)
    t = [0] * (n_max + 1)
    t[1] = 1
    for n in range(2, n_max + 1):
        acc = sum(map(mul, t[1:n], kern[n - 1:0:-1]))
        t[n] = _exact(factor * acc, n - 1, "%s(%d)" % (which, n))
    return TauTable(which, "log_recursion", tuple(t[1:]))


def _moment_tables(kern, size, powers):
    return {p: [j ** p * kern[j] for j in range(size + 1)] for p in powers}


def tau_by_formula(which, n_max):
    """Coefficient formulas read off the higher-order differential identities."""
    _check_which(which)
    if n_max < 1:
        raise DomainError("need N >= 1")
    if which == "tau":
        sig = _kernel(1, 1, n_max)
        mom = _moment_tables(sig, n_max, (2, 3, 4))
        out = []
        for n in range(1, n_max + 1):
            rev = sig[n - 1:0:-1]
            s2 = sum(map(mul, mom[2][1:n], rev))
            s3 = sum(map(mul, mom[3][1:n], rev))
            s4 = sum(map(mul, mom[4][1:n], rev))
            conv = -10 * n * n * s2 + 30 * n * s3 - 21 * s4
            # 3 tau(n) = 120 sum(...) - n^4 (2n - 5) sigma(n)
            out.append(_exact(120 * conv - n ** 4 * (2 * n - 5) * sig[n], 3, "tau(%d)" % n))
        return TauTable(which, "explicit_formula", tuple(out))
    if which == "tau2":
        c = _kernel(2, 1, n_max)
        mom = _moment_tables(c, n_max, (1, 2))
        out = []
        for n in range(1, n_max + 1):
            rev = c[n - 1:0:-1]
            s1 = sum(map(mul, mom[1][1:n], rev))
            s2 = sum(map(mul, mom[2][1:n], rev))
            out.append(12 * (3 * n * s1 - 5 * s2) + (3 * n * n - 2 * n ** 3) * c[n])
        return TauTable(which, "explicit_formula", tuple(out))
    c = _kernel(3, 1, n_max)
    d = _kernel(3, -1, n_max)
    mom = _moment_tables(c, n_max, (1, 2))
    t = [0] * (n_max + 1)
    for n in range(1, n_max + 1):
        rev = c[n - 1:0:-1]
        s1 = sum(map(mul, mom[1][1:n], rev))
        s2 = sum(map(mul, mom[2][1:n], rev))
        mixed = sum(map(mul, t[1:n], d[n - 1:0:-1]))
        t[n] = 6 * (3 * n * s1 - 5 * s2) - 12 * mixed - n * n * (n - 2) * c[n]
    return TauTable(which, "explicit_formula", tuple(t[1:]))


_ROUTES = {
    "eta_product": tau_by_eta,
    "log_recursion": tau_by_recursion,
    "explicit_formula": tau_by_formula,
}


def tau_table(which, n_max, method="eta_product"):
    try:
        route = _ROUTES[method]
    except KeyError:
        raise ValueError("method must be one of %s" % ", ".join(METHODS)) from None
    return route(which, n_max)


def first_disagreement(a, b):
    """Smallest n where two tables differ (over their common length), or None."""
    for n, (x, y) in enumerate(zip(a.values, b.values), start=1):
        if x != y:
            return n
    return None


# congruences

class _Data:
    """Lazily built sigma and tau tables shared by a scan."""

    def __init__(self, size):
        self.size = size
        self._tau = {}
        self.sigma = sigma_table(1, size).values

    def tau(self, which):
        if which not in self._tau:
            self._tau[which] = tau_by_recursion(which, self.size).as_list()
        return self._tau[which]


@dataclass(frozen=True)
class CongruenceRule:
    name: str
    statement: str
    test: Callable  # (n, data) -> True/False, or None when n is outside the rule's domain
    uses: tuple = ()


def _even(f):
    return lambda n, d: f(n // 2, d) if n % 2 == 0 else None


def _rules():
    def s(d, n):
        return d.sigma[n]

    def t(which):
        return lambda d, n: d.tau(which)[n]

    tau, tau2, tau3 = t("tau"), t("tau2"), t("tau3")
    rules = [
        CongruenceRule(
            "sigma-mod8", "(2k-1) sigma(2k) = (4k+7) sigma(k) mod 8",
            _even(lambda k, d: ((2 * k - 1) * s(d, 2 * k) - (4 * k + 7) * s(d, k)) % 8 == 0)),
        CongruenceRule(
            "sigma-mod2", "sigma(2k) = sigma(k) mod 2",
            _even(lambda k, d: (s(d, 2 * k) - s(d, k)) % 2 == 0)),
        CongruenceRule(
            "sigma-odd-mod4", "k sigma(2k+1) = 0 mod 4",
            lambda n, d: (n // 2) * s(d, n) % 4 == 0 if n % 2 and n >= 3 else None),
        CongruenceRule(
            "tau-shift-mod24", "(n-1) tau(n) = 0 mod 24",
            lambda n, d: (n - 1) * tau(d, n) % 24 == 0 if n >= 2 else None, ("tau",)),
        CongruenceRule(
            "tau-mod2", "tau(n) = n sigma(n) mod 2",
            lambda n, d: (tau(d, n) - n * s(d, n)) % 2 == 0, ("tau",)),
        CongruenceRule(
            "tau-mod5", "tau(n) = n sigma(n) mod 5",
            lambda n, d: (tau(d, n) - n * s(d, n)) % 5 == 0, ("tau",)),
        CongruenceRule(
            "tau2-shift-mod8", "(n-1) tau2(n) = 0 mod 8",
            lambda n, d: (n - 1) * tau2(d, n) % 8 == 0 if n >= 2 else None, ("tau2",)),
        CongruenceRule(
            "tau2-even-mod8", "tau2(2k) = 0 mod 8",
            lambda n, d: tau2(d, n) % 8 == 0 if n % 2 == 0 else None, ("tau2",)),
        CongruenceRule(
            "tau2-mod2", "tau2(n) = n sigma(n) mod 2",
            lambda n, d: (tau2(d, n) - n * s(d, n)) % 2 == 0, ("tau2",)),
        CongruenceRule(
            "tau2-mod3", "tau2(3k) = 0 mod 3",
            lambda n, d: tau2(d, n) % 3 == 0 if n % 3 == 0 else None, ("tau2",)),
        CongruenceRule(
            "tau2-mod24", "tau2(6k) = 0 mod 24",
            lambda n, d: tau2(d, n) % 24 == 0 if n % 6 == 0 else None, ("tau2",)),
        CongruenceRule(
            "tau3-shift-mod6", "(n-1) tau3(n) = 0 mod 6",
            lambda n, d: (n - 1) * tau3(d, n) % 6 == 0 if n >= 2 else None, ("tau3",)),
        CongruenceRule(
            "tau3-mod6", "tau3(n) = 0 mod 6 when gcd(n-1, 6) = 1",
            lambda n, d: tau3(d, n) % 6 == 0 if n >= 2 and gcd(n - 1, 6) == 1 else None, ("tau3",)),
        CongruenceRule(
            "tau3-mod2", "tau3(n) = n (sigma(n) + delta_3^n sigma(n/3)) mod 2",
            lambda n, d: (tau3(d, n) - n * (s(d, n) + (s(d, n // 3) if n % 3 == 0 else 0))) % 2 == 0,
            ("tau3",)),
        CongruenceRule(
            "tau3-mod3-sigma", "tau3(n) = 2n(n+1) sigma(n) mod 3",
            lambda n, d: (tau3(d, n) - 2 * n * (n + 1) * s(d, n)) % 3 == 0, ("tau3",)),
        CongruenceRule(
            "tau3-even-mod2", "tau3(2k) = 0 mod 2",
            lambda n, d: tau3(d, n) % 2 == 0 if n % 2 == 0 else None, ("tau3",)),
        CongruenceRule(
            "tau3-mod3", "tau3(3k) = 0 mod 3",
            lambda n, d: tau3(d, n) % 3 == 0 if n % 3 == 0 else None, ("tau3",)),
        CongruenceRule(
            "tau3-6k-mod6", "tau3(6k) = 0 mod 6",
            lambda n, d: tau3(d, n) % 6 == 0 if n % 6 == 0 else None, ("tau3",)),
    ]
    return {r.name: r for r in rules}


RULES = _rules()


@dataclass(frozen=True)
class ScanReport:
    rule: str
    up_to: int
    checked: int
    violation: Optional[int] = None

    @property
    def ok(self):
        return self.violation is None

    def message(self):
        if self.ok:
            return "%s: no violation up to %d (%d cases)" % (self.rule, self.up_to, self.checked)
        return "%s: violated at n = %d" % (self.rule, self.violation)


def get_rule(name):
    try:
        return RULES[name]
    except KeyError:
        raise UnknownRule("unknown rule %r; known: %s" % (name, ", ".join(RULES))) from None


def congruence_scan(rule, up_to, data=None):
    """Check the rule for every argument n <= up_to; report the first violation."""
    if isinstance(rule, str):
        rule = get_rule(rule)
    if up_to < 1:
        raise DomainError("need upTo >= 1")
    if data is None or data.size < up_to:
        data = _Data(up_to)
    checked = 0
    for n in range(1, up_to + 1):
        verdict = rule.test(n, data)
        if verdict is None:
            continue
        checked += 1
        if not verdict:
            return ScanReport(rule.name, up_to, checked, n)
    return ScanReport(rule.name, up_to, checked)


def scan_all(up_to):
    """Every catalogued rule, sharing one set of tables."""
    data = _Data(up_to)
    return [congruence_scan(r, up_to, data) for r in RULES.values()]
