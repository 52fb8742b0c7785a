"""
Structural facts for Gamma0(p): invariants of X0(p), dimensions of spaces of
modular and cusp forms, the coefficient bound that certifies equality of two
modular forms, and monomial bases in the generators.
"""

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import DescriptorMismatch, DomainError, NotPrime
from .forms import Form, Group, series
from .qseries import QSeries


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class X0pInvariants:
    p: int
    index: int
    eps2: int
    eps3: int
    genus: int
    cusps: int = 2
    widths: tuple = (1, 1)


def x0p_invariants(p):
    if not is_prime(p):
        raise NotPrime("%r is not prime" % (p,))
    if p == 2:
        eps2 = 1
    else:
        eps2 = 2 if p % 4 == 1 else 0
    if p == 3:
        eps3 = 1
    else:
        eps3 = 2 if p % 3 == 1 else 0
    g = (p + 1) // 12
    if (p + 1) % 12 == 2:
        g -= 1
    return X0pInvariants(p, p + 1, eps2, eps3, g, 2, (1, p))


def _check_weight(k):
    if k < 2 or k % 2:
        raise DomainError("weight must be an even integer >= 2 (got %r)" % (k,))


def dim_modular(p, k):
    """dim M_k(Gamma0(p)) for even k >= 2."""
    _check_weight(k)
    inv = x0p_invariants(p)
    return (k - 1) * (inv.genus - 1) + (k // 4) * inv.eps2 + (k // 3) * inv.eps3 + k


def dim_cusp(p, k):
    """dim S_k(Gamma0(p)) for even k >= 2."""
    _check_weight(k)
    inv = x0p_invariants(p)
    if k == 2:
        return inv.genus
    return dim_modular(p, k) - 2


def dim_modular_sl2(k):
    if k < 0 or k % 2:
        return 0
    if k % 12 == 2:
        return k // 12
    return k // 12 + 1


def dim_for_group(group, k):
    """dim M_k for any supported group, including k = 0."""
    if k == 0:
        return 1
    if group == Group.SL2Z:
        return dim_modular_sl2(k)
    return dim_modular(group.level, k)


def sturm_bound(group, k):
    """floor(d k / 12): agreement of coefficients 0..bound forces equality of weight-k forms."""
    if k < 0:
        raise DomainError("weight must be non-negative")
    return group.index * k // 12


class Verdict(enum.Enum):
    EQUAL = "Equal"
    UNEQUAL = "Unequal"
    INSUFFICIENT_PRECISION = "InsufficientPrecision"


@dataclass(frozen=True)
class Certificate:
    verdict: Verdict
    bound: int
    index: Optional[int] = None

    @property
    def equal(self):
        return self.verdict is Verdict.EQUAL

    def __str__(self):
        if self.verdict is Verdict.UNEQUAL:
            return "Unequal(%d)" % self.index
        return self.verdict.value


def _unwrap(f, group, k):
    if isinstance(f, Form):
        d = f.descriptor
        if d.kind not in ("modular", "cusp"):
            raise DescriptorMismatch("only modular forms can be certified, got kind %r" % d.kind)
        if d.weight != k:
            raise DescriptorMismatch("weight %d declared, %d requested" % (d.weight, k))
        # forms on SL2(Z) are also forms on Gamma0(p)
        if d.group != group and d.group != Group.SL2Z:
            raise DescriptorMismatch("form lives on %s, not %s" % (d.group, group))
        return f.series
    if isinstance(f, QSeries):
        return f
    raise TypeError("expected a QSeries or Form")


def certify_equal(f, g, group, k):
    """
    Decide f == g for weight-k modular forms on ``group`` from finitely many
    coefficients.  Bare QSeries are taken on trust; Forms have their
    descriptors checked.
    """
    group = group if isinstance(group, Group) else Group.parse(group)
    a = _unwrap(f, group, k)
    b = _unwrap(g, group, k)
    bound = sturm_bound(group, k)
    if min(a.valuation, b.valuation) < 0:
        raise DescriptorMismatch("modular forms have no negative powers of q")
    for n in range(bound + 1):
        if n >= a.precision or n >= b.precision:
            return Certificate(Verdict.INSUFFICIENT_PRECISION, bound)
        if a.coeff(n) != b.coeff(n):
            return Certificate(Verdict.UNEQUAL, bound, n)
    return Certificate(Verdict.EQUAL, bound)


# monomial bases in the modular generators

MODULAR_GENERATORS = {
    Group.SL2Z: ("E4", "E6"),
    Group.Gamma0_2: ("Q2", "R2"),
    Group.Gamma0_3: ("Q3", "R3", "S3"),
}

MODULAR_WEIGHTS = {
    Group.SL2Z: (4, 6),
    Group.Gamma0_2: (2, 4),
    Group.Gamma0_3: (2, 4, 6),
}


def monomial_basis(group, k):
    """
    Exponent tuples of monomials spanning M_k.

    Gamma0(2): all (r, s) with 2r + 4s = k.  Gamma0(3): for each order at
    infinity j = b + 2c one monomial Q3^a R3^b S3^c, the one with the least
    S3 exponent (monomials with equal j agree modulo R3^2 = Q3 S3).
    SL2(Z): all (a, b) with 4a + 6b = k.
    """
    group = group if isinstance(group, Group) else Group.parse(group)
    if k < 0 or k % 2:
        return []
    if group == Group.Gamma0_2:
        return [(k // 2 - 2 * s, s) for s in range(k // 4 + 1)]
    if group == Group.SL2Z:
        return [((k - 6 * b) // 4, b) for b in range(k // 6 + 1) if (k - 6 * b) % 4 == 0]
    out = []
    for j in range(k // 3 + 1):
        c = max(0, (4 * j - k) // 2)
        b = j - 2 * c
        a = (k - 4 * b - 6 * c) // 2
        out.append((a, b, c))
    return out


def evaluate_monomial(group, exps, precision):
    gens = [series(name, precision) for name in MODULAR_GENERATORS[group]]
    out = QSeries.one(precision)
    for g, e in zip(gens, exps):
        if e:
            out = out * g ** e
    return out


def rank(rows):
    """Rank of a matrix of integers or Fractions by fraction-free elimination."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return 0
    # clear denominators row by row so elimination stays in the integers
    mat = []
    for row in m:
        den = 1
        for x in row:
            den = den * x.denominator // math.gcd(den, x.denominator)
        mat.append([int(x * den) for x in row])
    nrows, ncols = len(mat), len(mat[0])
    r = 0
    prev = 1
    for col in range(ncols):
        pivot = next((i for i in range(r, nrows) if mat[i][col]), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        for i in range(r + 1, nrows):
            for j in range(col + 1, ncols):
                mat[i][j] = (mat[r][col] * mat[i][j] - mat[i][col] * mat[r][j]) // prev
            mat[i][col] = 0
        prev = mat[r][col]
        r += 1
        if r == nrows:
            break
    return r


@dataclass(frozen=True)
class IndependenceReport:
    group: Group
    weight: int
    bound: int
    rank: int
    dimension: int
    rows: tuple

    @property
    def passed(self):
        return self.rank == self.dimension == len(self.rows)


def verify_independence(group, k):
    """Rank of the coefficient matrix a(0..bound) of the basis monomials against dim M_k."""
    group = group if isinstance(group, Group) else Group.parse(group)
    basis = monomial_basis(group, k)
    bound = sturm_bound(group, k)
    rows = tuple(
        tuple(evaluate_monomial(group, e, bound + 1).coefficients(0, bound + 1)) for e in basis
    )
    return IndependenceReport(group, k, bound, rank(rows), dim_for_group(group, k), rows)
