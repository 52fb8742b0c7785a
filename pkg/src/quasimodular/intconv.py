"""
Integer convolution by Kronecker substitution.

Coefficient lists are packed into one big integer at a fixed bit stride,
multiplied once, and unpacked with signed-digit borrow.  gmpy2 is used for
the single large multiplication when it is importable.
"""

try:
    import gmpy2
except ImportError:  # pragma: no cover
    gmpy2 = None

# below this size schoolbook is faster than packing
SMALL = 24


def _pack(coeffs, stride):
    nbytes = stride // 8
    pos = b"".join((c if c > 0 else 0).to_bytes(nbytes, "little") for c in coeffs)
    neg = b"".join((-c if c < 0 else 0).to_bytes(nbytes, "little") for c in coeffs)
    return int.from_bytes(pos, "little") - int.from_bytes(neg, "little")


def _unpack(value, stride, count):
    nbytes = stride // 8
    total = nbytes * (count + 1)
    raw = value.to_bytes(total, "little", signed=True)
    half = 1 << (stride - 1)
    full = 1 << stride
    out = []
    carry = 0
    for k in range(count):
        d = int.from_bytes(raw[k * nbytes:(k + 1) * nbytes], "little") + carry
        if d >= half:
            d -= full
            carry = 1
        else:
            carry = 0
        out.append(d)
    return out


def _schoolbook(a, b, n):
    out = [0] * n
    for i, x in enumerate(a):
        if not x or i >= n:
            continue
        for j in range(min(len(b), n - i)):
            out[i + j] += x * b[j]
    return out


def convolve(a, b, n=None):
    """Cauchy product of integer lists ``a`` and ``b``, truncated to ``n`` terms."""
    if n is None:
        n = len(a) + len(b) - 1
    a = a[:n]
    b = b[:n]
    if not a or not b or n <= 0:
        return [0] * max(n, 0)
    if min(len(a), len(b)) <= SMALL:
        return _schoolbook(a, b, n)
    ma = max(abs(x) for x in a)
    mb = max(abs(x) for x in b)
    if ma == 0 or mb == 0:
        return [0] * n
    bound = ma.bit_length() + mb.bit_length() + min(len(a), len(b)).bit_length() + 2
    stride = (bound + 7) // 8 * 8
    pa = _pack(a, stride)
    pb = _pack(b, stride)
    if gmpy2 is not None:
        prod = int(gmpy2.mpz(pa) * gmpy2.mpz(pb))
    else:  # pragma: no cover
        prod = pa * pb
    count = len(a) + len(b) - 1
    out = _unpack(prod, stride, count)
    if count < n:
        out.extend([0] * (n - count))
    return out[:n]


def sparse_power(series, e, n):
    """
    First ``n`` coefficients of ``series**e`` for a series with constant term 1.

    Uses the power recurrence  m*f[m] = sum_i ((e+1)*i - m) * g[i] * f[m-i],
    which only touches the nonzero entries of ``series``; with a sparse
    input (the Euler product) this is O(n * sqrt(n)).
    """
    if not series or series[0] != 1:
        raise ValueError("sparse_power needs constant term 1")
    support = [(i, c) for i, c in enumerate(series[:n]) if i and c]
    f = [0] * n
    if n == 0:
        return f
    f[0] = 1
    for m in range(1, n):
        acc = 0
        for i, c in support:
            if i > m:
                break
            acc += ((e + 1) * i - m) * c * f[m - i]
        q, r = divmod(acc, m)
        if r:
            raise ArithmeticError("non-integral power coefficient at %d" % m)
        f[m] = q
    return f
