"""
Exact q-expansions of quasi-modular forms for SL2(Z), Gamma0(2) and Gamma0(3),
the polynomial vector fields they solve, and the identities between them.
"""

from .calculus import chazy_residual, higher_order_identity, rankin_cohen, serre_derivative, serre_derivative_poly
from .errors import (
    DescriptorMismatch,
    DimensionMismatch,
    DomainError,
    FractionalExponent,
    NonIntegralResult,
    NotPrime,
    QuasimodularError,
    SubstitutionError,
    UnknownName,
    UnknownRule,
    ZeroLeadingCoefficient,
)
from .forms import EtaQuotientSpec, Form, FormDescriptor, Group, catalog, eisenstein, eta_quotient, series, theta3
from .modspace import certify_equal, dim_cusp, dim_modular, monomial_basis, sturm_bound, verify_independence, x0p_invariants
from .qseries import QSeries
from .symalg import MPoly, PolyVF, lie_bracket, reduce_mod_ideal
from .tau import congruence_scan, tau_table

__version__ = "0.1.0"
