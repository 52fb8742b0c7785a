"""Exception types shared across the package."""


class QuasimodularError(Exception):
    pass


class ZeroLeadingCoefficient(QuasimodularError, ZeroDivisionError):
    pass


class DomainError(QuasimodularError, ValueError):
    pass


class FractionalExponent(QuasimodularError, ValueError):
    pass


class UnknownName(QuasimodularError, KeyError):
    pass


class UnknownRule(QuasimodularError, KeyError):
    pass


class DimensionMismatch(QuasimodularError, ValueError):
    pass


class SubstitutionError(QuasimodularError, ValueError):
    pass


class NonIntegralResult(QuasimodularError, ArithmeticError):
    pass


class NotPrime(QuasimodularError, ValueError):
    pass


class DescriptorMismatch(QuasimodularError, ValueError):
    pass
