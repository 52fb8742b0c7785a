"""
Divisor sums, the divisibility indicator, and the Euler product
prod_{n>=1} (1 - q^n) from the pentagonal number theorem.
"""

from functools import lru_cache

from .errors import DomainError
from .qseries import DEFAULT_PRECISION, QSeries


def _factor(n):
    factors = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            factors.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        factors.append((n, 1))
    return factors


def sigma_power(k, n):
    """sigma_k(n) = sum of d**k over the divisors d of n."""
    if k < 0:
        raise DomainError("power must be non-negative")
    if n < 1:
        raise DomainError("sigma_k(n) needs n >= 1 (got %d)" % n)
    total = 1
    for p, e in _factor(n):
        if k == 0:
            total *= e + 1
        else:
            pk = p ** k
            total *= (pk ** (e + 1) - 1) // (pk - 1)
    return total


class SigmaTable:
    """values[n] = sigma_k(n) for 1 <= n <= size; values[0] is unused and set to 0."""

    __slots__ = ("k", "values")

    def __init__(self, k, size):
        if k < 0:
            raise DomainError("power must be non-negative")
        values = [0] * (size + 1)
        for d in range(1, size + 1):
            dk = d ** k
            for m in range(d, size + 1, d):
                values[m] += dk
        self.k = k
        self.values = tuple(values)

    def __getitem__(self, n):
        if n < 1:
            raise DomainError("sigma_k(n) needs n >= 1 (got %d)" % n)
        return self.values[n]

    def __len__(self):
        return len(self.values) - 1


@lru_cache(maxsize=8)
def sigma_table(k, size):
    return SigmaTable(k, size)


def delta_indicator(k, n):
    """1 if k divides n, else 0."""
    if k < 1:
        raise DomainError("delta indicator needs k >= 1")
    return 1 if n % k == 0 else 0


def pentagonal_terms(limit):
    """(exponent, sign) pairs of the Euler product below ``limit``, exponent ascending."""
    out = [(0, 1)]
    j = 1
    while True:
        a = j * (3 * j - 1) // 2
        if a >= limit:
            break
        sign = -1 if j % 2 else 1
        out.append((a, sign))
        b = j * (3 * j + 1) // 2
        if b < limit:
            out.append((b, sign))
        j += 1
    return out


@lru_cache(maxsize=16)
def euler_coefficients(limit):
    """Dense integer coefficients of prod (1 - q^n) for exponents 0..limit-1."""
    coeffs = [0] * limit
    for e, s in pentagonal_terms(limit):
        coeffs[e] = s
    return tuple(coeffs)


def euler_product(precision=DEFAULT_PRECISION):
    if precision < 1:
        raise DomainError("precision must be >= 1")
    return QSeries(euler_coefficients(precision), 0, precision)
