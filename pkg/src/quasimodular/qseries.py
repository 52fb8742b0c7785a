"""
Truncated Laurent series in q with exact rational coefficients.

A QSeries stands for  sum_i coeffs[i] * q**(valuation + i) + O(q**precision).
Values are immutable; every operation returns a new series and propagates
the precision that is actually known.
"""

from fractions import Fraction
from math import lcm
from numbers import Rational

from .errors import ZeroLeadingCoefficient
from .intconv import convolve

DEFAULT_PRECISION = 64


def _frac(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError("exact rational coefficient expected, got %r" % (x,))


def _mul_lists(a, b, n):
    """First ``n`` terms of the product of two Fraction lists."""
    if n <= 0 or not a or not b:
        return []
    a = a[:n]
    b = b[:n]
    da = lcm(*(x.denominator for x in a))
    db = lcm(*(x.denominator for x in b))
    ia = [x.numerator * (da // x.denominator) for x in a]
    ib = [x.numerator * (db // x.denominator) for x in b]
    prod = convolve(ia, ib, n)
    d = da * db
    if d == 1:
        return [Fraction(c) for c in prod]
    return [Fraction(c, d) for c in prod]


class QSeries:
    __slots__ = ("valuation", "coeffs", "precision")

    def __init__(self, coeffs=(), valuation=0, precision=DEFAULT_PRECISION):
        coeffs = [_frac(c) for c in coeffs]
        del coeffs[max(precision - valuation, 0):]
        start = 0
        while start < len(coeffs) and not coeffs[start]:
            start += 1
        end = len(coeffs)
        while end > start and not coeffs[end - 1]:
            end -= 1
        if start == end:
            object.__setattr__(self, "valuation", precision)
            object.__setattr__(self, "coeffs", ())
        else:
            object.__setattr__(self, "valuation", valuation + start)
            object.__setattr__(self, "coeffs", tuple(coeffs[start:end]))
        object.__setattr__(self, "precision", precision)

    def __setattr__(self, name, value):
        raise AttributeError("QSeries is immutable")

    # constructors

    @classmethod
    def from_dict(cls, terms, precision=DEFAULT_PRECISION):
        """Build from an {exponent: coefficient} mapping."""
        terms = {e: c for e, c in terms.items() if e < precision}
        if not terms:
            return cls((), 0, precision)
        lo = min(terms)
        hi = max(terms)
        coeffs = [0] * (hi - lo + 1)
        for e, c in terms.items():
            coeffs[e - lo] = c
        return cls(coeffs, lo, precision)

    @classmethod
    def constant(cls, c, precision=DEFAULT_PRECISION):
        return cls([c], 0, precision)

    @classmethod
    def one(cls, precision=DEFAULT_PRECISION):
        return cls([1], 0, precision)

    @classmethod
    def zero(cls, precision=DEFAULT_PRECISION):
        return cls((), 0, precision)

    @classmethod
    def monomial(cls, exponent, c=1, precision=DEFAULT_PRECISION):
        return cls([c], exponent, precision)

    # access

    def is_zero(self):
        return not self.coeffs

    def coeff(self, n):
        """Coefficient of q**n; asking beyond the precision is an error."""
        if n >= self.precision:
            raise IndexError("q^%d is beyond precision %d" % (n, self.precision))
        i = n - self.valuation
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __getitem__(self, n):
        return self.coeff(n)

    def coefficients(self, start=None, stop=None):
        """List of coefficients for exponents start..stop-1 (default: valuation..precision-1)."""
        if start is None:
            start = min(self.valuation, 0)
        if stop is None:
            stop = self.precision
        return [self.coeff(n) for n in range(start, stop)]

    def items(self):
        """(exponent, coefficient) pairs of the stored nonzero terms."""
        return [(self.valuation + i, c) for i, c in enumerate(self.coeffs) if c]

    def is_integral(self):
        return all(c.denominator == 1 for c in self.coeffs)

    def truncate(self, precision):
        return QSeries(self.coeffs, self.valuation, min(precision, self.precision))

    @property
    def relative_precision(self):
        return self.precision - self.valuation

    # ring operations

    def _coerce(self, other):
        if isinstance(other, QSeries):
            return other
        if isinstance(other, (int, Rational)):
            # exact constants carry no truncation of their own
            return QSeries([other], 0, max(self.precision, 1))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return QSeries([-c for c in self.coeffs], self.valuation, self.precision)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return add(self, -other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return add(other, -self)

    def __mul__(self, other):
        if isinstance(other, QSeries):
            return mul(self, other)
        if isinstance(other, (int, Rational)):
            c = _frac(other)
            return QSeries([c * x for x in self.coeffs], self.valuation, self.precision)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, QSeries):
            return mul(self, invert(other))
        if isinstance(other, (int, Rational)):
            c = _frac(other)
            return QSeries([x / c for x in self.coeffs], self.valuation, self.precision)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Rational)):
            return invert(self) * other
        return NotImplemented

    def __pow__(self, e):
        return power(self, e)

    def __eq__(self, other):
        if isinstance(other, (int, Rational)):
            other = QSeries([other], 0, self.precision)
        if not isinstance(other, QSeries):
            return NotImplemented
        n = min(self.precision, other.precision)
        return self.truncate(n)._key() == other.truncate(n)._key()

    __hash__ = None

    def _key(self):
        return (self.valuation, self.coeffs) if self.coeffs else ()

    def identical(self, other):
        """Representation equality, precision included."""
        return (self._key(), self.precision) == (other._key(), other.precision)

    # calculus

    def derive(self):
        return derive(self)

    def substitute(self, m, sign=1):
        return substitute(self, m, sign)

    def invert(self):
        return invert(self)

    # display and serialization

    def __repr__(self):
        return "QSeries(%s)" % self.format(terms=8)

    def format(self, terms=None, var="q"):
        parts = []
        items = self.items()
        shown = items if terms is None else items[:terms]
        for e, c in shown:
            if e == 0:
                mono = str(c)
            else:
                power_ = var if e == 1 else "%s^%d" % (var, e)
                if c == 1:
                    mono = power_
                elif c == -1:
                    mono = "-" + power_
                else:
                    mono = "%s*%s" % (c, power_)
            parts.append(mono)
        if terms is not None and len(items) > terms:
            parts.append("...")
        parts.append("O(%s^%d)" % (var, self.precision))
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self):
        return {
            "valuation": self.valuation if self.coeffs else self.precision,
            "precision": self.precision,
            "coeffs": [str(c) for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, data):
        return cls([Fraction(c) for c in data["coeffs"]], data["valuation"], data["precision"])


def add(a, b):
    precision = min(a.precision, b.precision)
    if a.is_zero():
        return b.truncate(precision)
    if b.is_zero():
        return a.truncate(precision)
    lo = min(a.valuation, b.valuation)
    hi = min(max(a.valuation + len(a.coeffs), b.valuation + len(b.coeffs)), precision)
    out = [Fraction(0)] * max(hi - lo, 0)
    for s in (a, b):
        off = s.valuation - lo
        for i, c in enumerate(s.coeffs):
            if off + i < len(out):
                out[off + i] += c
    return QSeries(out, lo, precision)


def mul(a, b):
    # a = a_known + O(q^Na) with a_known = O(q^va); same for b
    precision = min(a.precision + b.valuation, b.precision + a.valuation)
    if a.is_zero() or b.is_zero():
        return QSeries.zero(precision)
    valuation = a.valuation + b.valuation
    n = precision - valuation
    return QSeries(_mul_lists(list(a.coeffs), list(b.coeffs), n), valuation, precision)


def invert(a):
    """Multiplicative inverse; the valuation flips sign and relative precision is kept."""
    if a.is_zero():
        raise ZeroLeadingCoefficient("cannot invert a series that is zero to O(q^%d)" % a.precision)
    n = a.relative_precision
    unit = list(a.coeffs)
    inv = [1 / unit[0]]
    size = 1
    while size < n:
        size = min(2 * size, n)
        # Newton step  b <- b * (2 - u*b)
        ub = _mul_lists(unit, inv, size)
        corr = [-c for c in ub]
        corr[0] += 2
        inv = _mul_lists(inv, corr, size)
    return QSeries(inv, -a.valuation, n - a.valuation)


def power(a, e):
    if not isinstance(e, int):
        raise TypeError("integer exponent expected")
    if e < 0:
        return power(invert(a), -e)
    if e == 0:
        return QSeries.one(max(a.relative_precision, 1))
    result = None
    base = a
    while True:
        if e & 1:
            result = base if result is None else mul(result, base)
        e >>= 1
        if not e:
            return result
        base = mul(base, base)


def derive(a):
    """The derivation q d/dq: the coefficient of q^n is multiplied by n."""
    out = [c * (a.valuation + i) for i, c in enumerate(a.coeffs)]
    return QSeries(out, a.valuation, a.precision)


def substitute(a, m, sign=1):
    """q -> sign * q**m."""
    if m < 1 or sign not in (1, -1):
        raise ValueError("substitute needs m >= 1 and sign in {+1, -1}")
    if a.is_zero():
        return QSeries.zero(m * a.precision)
    terms = {}
    for e, c in a.items():
        terms[m * e] = c if sign == 1 or e % 2 == 0 else -c
    return QSeries.from_dict(terms, m * a.precision)


def derivatives(a, order):
    """[a, a', a'', ...] up to the given order."""
    out = [a]
    for _ in range(order):
        out.append(derive(out[-1]))
    return out
