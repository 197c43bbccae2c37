"""Exact q-series workbench for fractional partition congruences.

Computes coefficients of (q;q)_inf^alpha and of Dedekind-eta powers in
exact rational arithmetic, verifies prime-power congruence claims over
coefficient ranges, searches for the parameters those claims need, and
probes modulus sharpness.  No floating point anywhere.
"""

__version__ = "0.1.0"

from .arith import (
    INFINITY,
    NotLIntegralError,
    PreconditionError,
    QuadRational,
    chi_eta,
    is_prime,
    kronecker_symbol,
    legendre_symbol,
    padic_ord,
    reduce_mod_prime_power,
)
from .backend import BACKEND_NAME, format_rational, parse_rational, rational
from .congruence import (
    ClaimFamily,
    CongruenceClaim,
    HypothesisError,
    VerificationReport,
    VerificationStatus,
    build_cw_claim,
    build_remark_claim,
    build_t1_claim,
    build_t2_claim,
    build_t3_claim,
    certificate_line,
    chan_wang_condition,
    find_residues,
    find_w,
    is_d_satisfactory,
    sharpness_probe,
    verify_claim,
)
from .forms import (
    EtaPowerSpec,
    FormExpansion,
    a2_prime_power_sequence,
    divisor_sigma,
    eigenform_violations,
    eisenstein_series,
    eta_form,
    eta_power,
    hecke_apply,
    serre_components,
)
from .qseries import (
    Series,
    euler_product,
    extract_progression,
    frac_partition_series,
    series_pow_int,
    series_pow_rational,
    series_reduce_mod,
    series_shift,
    substitute_power,
)

__all__ = [
    "BACKEND_NAME",
    "ClaimFamily",
    "CongruenceClaim",
    "EtaPowerSpec",
    "FormExpansion",
    "HypothesisError",
    "INFINITY",
    "NotLIntegralError",
    "PreconditionError",
    "QuadRational",
    "Series",
    "VerificationReport",
    "VerificationStatus",
    "__version__",
    "a2_prime_power_sequence",
    "build_cw_claim",
    "build_remark_claim",
    "build_t1_claim",
    "build_t2_claim",
    "build_t3_claim",
    "certificate_line",
    "chan_wang_condition",
    "chi_eta",
    "divisor_sigma",
    "eigenform_violations",
    "eisenstein_series",
    "eta_form",
    "eta_power",
    "euler_product",
    "extract_progression",
    "find_residues",
    "find_w",
    "format_rational",
    "frac_partition_series",
    "hecke_apply",
    "is_d_satisfactory",
    "is_prime",
    "kronecker_symbol",
    "legendre_symbol",
    "padic_ord",
    "parse_rational",
    "rational",
    "reduce_mod_prime_power",
    "serre_components",
    "series_pow_int",
    "series_pow_rational",
    "series_reduce_mod",
    "series_shift",
    "sharpness_probe",
    "substitute_power",
    "verify_claim",
]
