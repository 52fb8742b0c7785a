import pytest
from hypothesis import given
from hypothesis import strategies as st

from quasimodular.arith import (
    delta_indicator,
    euler_coefficients,
    euler_product,
    pentagonal_terms,
    sigma_power,
    sigma_table,
)
from quasimodular.errors import DomainError
from quasimodular.intconv import convolve, sparse_power


def naive_sigma(k, n):
    return sum(d ** k for d in range(1, n + 1) if n % d == 0)


def naive_euler(limit):
    """prod_{n>=1} (1 - q^n) by repeated multiplication, coefficients 0..limit-1."""
    out = [1] + [0] * (limit - 1)
    for n in range(1, limit):
        new = out[:]
        for i in range(n, limit):
            new[i] -= out[i - n]
        out = new
    return out


def test_sigma_values():
    assert [sigma_power(1, n) for n in range(1, 11)] == [1, 3, 4, 7, 6, 12, 8, 15, 13, 18]
    assert sigma_power(3, 6) == 1 + 8 + 27 + 216
    assert sigma_power(0, 12) == 6
    with pytest.raises(DomainError):
        sigma_power(1, 0)


@pytest.mark.parametrize("k", [0, 1, 3, 5])
def test_sigma_table_matches_naive(k):
    t = sigma_table(k, 300)
    assert t.values[0] == 0
    with pytest.raises(DomainError):
        t[0]
    assert all(t[n] == naive_sigma(k, n) for n in range(1, 301))


@given(st.integers(min_value=1, max_value=5000), st.integers(min_value=0, max_value=5))
def test_sigma_power_matches_naive(n, k):
    assert sigma_power(k, n) == naive_sigma(k, n)


def test_delta_indicator():
    assert [delta_indicator(3, n) for n in range(7)] == [1, 0, 0, 1, 0, 0, 1]


def test_pentagonal_and_euler():
    assert [e for e, _ in pentagonal_terms(30)] == [0, 1, 2, 5, 7, 12, 15, 22, 26]
    assert list(euler_coefficients(200)) == naive_euler(200)
    s = euler_product(40)
    assert s.coefficients(0, 40) == naive_euler(40)


def test_convolve_matches_schoolbook():
    a = [3, -1, 4, 1, -5, 9, 2, -6] * 10
    b = [2, 7, -1, 8, 2, -8, 1] * 12
    want = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            want[i + j] += x * y
    assert convolve(a, b) == want
    assert convolve(a, b, 50) == want[:50]


def test_convolve_big_coefficients():
    a = [10 ** 40 * (-1) ** i + i for i in range(60)]
    b = [-(10 ** 35) + 3 * i for i in range(60)]
    want = [0] * 119
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            want[i + j] += x * y
    assert convolve(a, b) == want


@given(st.lists(st.integers(-10 ** 6, 10 ** 6), min_size=1, max_size=70),
       st.lists(st.integers(-10 ** 6, 10 ** 6), min_size=1, max_size=70))
def test_convolve_property(a, b):
    want = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            want[i + j] += x * y
    assert convolve(a, b) == want


@pytest.mark.parametrize("e", [-3, -1, 0, 1, 2, 8, 24])
def test_sparse_power_of_euler(e):
    n = 60
    base = list(euler_coefficients(n))
    got = sparse_power(base, e, n)
    if e >= 0:
        want = [1] + [0] * (n - 1)
        for _ in range(e):
            want = convolve(want, base, n)
    else:
        # partitions generating function and its powers
        inv = [0] * n
        inv[0] = 1
        for m in range(1, n):
            inv[m] = -sum(base[i] * inv[m - i] for i in range(1, m + 1))
        want = [1] + [0] * (n - 1)
        for _ in range(-e):
            want = convolve(want, inv, n)
    assert got == want


def test_partition_numbers():
    p = sparse_power(list(euler_coefficients(30)), -1, 30)
    assert p[:12] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56]
