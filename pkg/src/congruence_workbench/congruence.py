"""Congruence claims: hypothesis predicates, builders, verifiers, probes.

Five claim families share one shape, "p_alpha(ell^e * n + r) == 0 mod
ell^m for all n":

* ``cw``     -- prime modulus (e = 1, m = 1) under the classical
  divisibility/residue hypotheses for d in {1, 3, 4, 6, 8, 10, 14, 26};
* ``t1``     -- e = 2, m = ord_ell(alpha - d) for d-satisfactory primes;
* ``t2``     -- the d = 2 analogue, one power weaker;
* ``t3``     -- e = w + 1 for the eigenvalue-vanishing index w found by
  :func:`find_w`, valid for every prime;
* ``remark`` -- the (d, ell) in {(14, 5), (26, 11)} variants with the
  modulus lowered by one resp. two powers.

Builders validate every hypothesis eagerly and name the failed one;
verifiers only scan coefficients.  Verification is over a finite range
and reports VERIFIED_IN_RANGE, never "proved".
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from math import gcd

from . import __version__ as _artifact_version
from .arith import (
    INFINITY,
    NotLIntegralError,
    PreconditionError,
    is_prime,
    legendre_symbol,
    padic_ord,
)
from .backend import denominator, format_rational, is_rational, numerator, rational
from .forms import a2_prime_power_iter
from .qseries import extract_progression, frac_partition_series, series_reduce_mod

__all__ = [
    "ClaimFamily",
    "CongruenceClaim",
    "Counterexample",
    "HypothesisError",
    "PrecisionCapExceeded",
    "SharpnessWitness",
    "VerificationReport",
    "VerificationStatus",
    "build_cw_claim",
    "build_remark_claim",
    "build_t1_claim",
    "build_t2_claim",
    "build_t3_claim",
    "certificate_line",
    "certificate_record",
    "chan_wang_condition",
    "find_residues",
    "find_w",
    "is_d_satisfactory",
    "sharpness_probe",
    "verify_claim",
]

CHAN_WANG_D = (1, 3, 4, 6, 8, 10, 14, 26)
SATISFACTORY_D = (2, 4, 6, 8, 10, 14, 26)


class ClaimFamily(str, Enum):
    CW = "cw"
    T1 = "t1"
    T2 = "t2"
    T3 = "t3"
    REMARK = "remark"


class VerificationStatus(str, Enum):
    VERIFIED_IN_RANGE = "VERIFIED_IN_RANGE"
    COUNTEREXAMPLE = "COUNTEREXAMPLE"
    PRECONDITION_FAILED = "PRECONDITION_FAILED"


class HypothesisError(PreconditionError):
    """A named claim hypothesis failed at build time."""

    def __init__(self, hypothesis: str, message: str):
        super().__init__(f"{hypothesis}: {message}")
        self.hypothesis = hypothesis


class PrecisionCapExceeded(PreconditionError):
    """The requested verification needs more series precision than allowed."""


def _as_rational(alpha):
    if isinstance(alpha, int):
        return rational(alpha)
    if is_rational(alpha):
        return rational(numerator(alpha), denominator(alpha))
    raise TypeError("alpha must be rational")


@dataclass(frozen=True)
class CongruenceClaim:
    """p_alpha(ell^e * n + r) == 0 (mod ell^modulus_power) for all n >= 0."""

    family: ClaimFamily
    alpha: object
    d: int
    ell: int
    e: int
    r: int
    modulus_power: int

    def __post_init__(self):
        object.__setattr__(self, "alpha", _as_rational(self.alpha))
        object.__setattr__(self, "family", ClaimFamily(self.family))
        if not is_prime(self.ell):
            raise PreconditionError(f"claim prime {self.ell} is not prime")
        if self.e < 1 or self.modulus_power < 1:
            raise PreconditionError("claim requires e >= 1 and modulus_power >= 1")
        if not 0 <= self.r < self.ell**self.e:
            raise PreconditionError(
                f"claim residue r = {self.r} outside [0, {self.ell}^{self.e})"
            )
        if denominator(self.alpha) % self.ell == 0:
            raise HypothesisError(
                "ell_coprime_to_denominator",
                f"{self.ell} divides the denominator of alpha; values are not {self.ell}-integral",
            )

    @property
    def progression_modulus(self) -> int:
        return self.ell**self.e

    def describe(self) -> str:
        return (
            f"p_{{{format_rational(self.alpha)}}}({self.ell}^{self.e}*n + {self.r}) "
            f"== 0 (mod {self.ell}^{self.modulus_power})"
        )


@dataclass(frozen=True)
class Counterexample:
    n: int
    value: object
    ord: int


@dataclass(frozen=True)
class SharpnessWitness:
    n: int
    value: object


@dataclass(frozen=True)
class VerificationReport:
    claim: CongruenceClaim
    n_max: int
    status: VerificationStatus
    counterexample: Counterexample | None = None
    note: str = ""


def is_d_satisfactory(d: int, ell: int) -> bool:
    """Residue-class conditions under which a_d vanishes along ell-multiples."""
    if not is_prime(ell):
        raise PreconditionError(f"{ell} is not prime")
    if d == 2:
        return ell % 12 != 1
    if d in (4, 8):
        return ell % 6 == 5
    if d == 14:
        return ell % 6 == 5 and ell != 5
    if d in (6, 10):
        return ell >= 7 and ell % 4 == 3
    if d == 26:
        return ell % 12 == 11 and ell != 11
    raise PreconditionError(f"no satisfactory-prime condition for d = {d}")


def chan_wang_condition(d: int, ell: int, r: int) -> bool:
    """The numbered hypothesis on (d, ell, r) for the prime-modulus family."""
    if not is_prime(ell):
        raise PreconditionError(f"{ell} is not prime")
    if r < 0:
        raise PreconditionError("r must be nonnegative")
    if d == 1:
        return legendre_symbol(24 * r + 1, ell) == -1
    if d == 3:
        return legendre_symbol(8 * r + 1, ell) != 1
    if d in (4, 8, 14):
        return ell % 6 == 5 and (24 * r + d) % ell == 0
    if d in (6, 10):
        return ell >= 7 and ell % 4 == 3 and (24 * r + d) % ell == 0
    if d == 26:
        return ell % 12 == 11 and (24 * r + d) % ell == 0
    raise PreconditionError(f"no Chan-Wang condition for d = {d}")


def _check_denominator(alpha, ell: int):
    if denominator(alpha) % ell == 0:
        raise HypothesisError(
            "ell_coprime_to_denominator",
            f"{ell} divides denominator({format_rational(alpha)})",
        )


def _canonical_r(r: int, modulus: int) -> int:
    # Inputs outside [0, modulus) are reduced; the quotient folds into n.
    if r < 0:
        raise PreconditionError("r must be nonnegative")
    return r % modulus


def build_cw_claim(alpha, d: int, ell: int, r: int) -> CongruenceClaim:
    """Prime-modulus claim p_alpha(ell*n + r) == 0 (mod ell)."""
    alpha = _as_rational(alpha)
    if d not in CHAN_WANG_D:
        raise HypothesisError("d_in_family_list", f"d = {d} not in {CHAN_WANG_D}")
    _check_denominator(alpha, ell)
    a, b = numerator(alpha), denominator(alpha)
    if (a - d * b) % ell != 0:
        raise HypothesisError(
            "ell_divides_a_minus_db", f"{ell} does not divide a - d*b = {a - d * b}"
        )
    r0 = _canonical_r(r, ell)
    if not chan_wang_condition(d, ell, r0):
        raise HypothesisError(
            "chan_wang_condition", f"condition for d = {d} fails at (ell, r) = ({ell}, {r0})"
        )
    return CongruenceClaim(ClaimFamily.CW, alpha, d, ell, 1, r0, 1)


def _residue_ord_check(d: int, ell: int, r: int, expected: int, hypothesis: str):
    g = gcd(d, 24)
    value = (24 // g) * r + d // g
    actual = padic_ord(value, ell)
    if actual != expected:
        raise HypothesisError(
            hypothesis,
            f"ord_{ell}((24/gcd)*r + d/gcd) = ord_{ell}({value}) = {actual}, need {expected}",
        )


def _finite_alpha_ord(alpha, d: int, ell: int):
    shifted = alpha - d
    if shifted == 0:
        raise HypothesisError("alpha_distinct_from_d", f"alpha = {d} gives an infinite ord")
    return padic_ord(shifted, ell)


def build_t1_claim(alpha, d: int, ell: int, r: int) -> CongruenceClaim:
    """Squared-progression claim with modulus ell^(ord_ell(alpha - d))."""
    alpha = _as_rational(alpha)
    if d not in (4, 6, 8, 10, 14, 26):
        raise HypothesisError("d_in_family_list", f"d = {d} not in (4, 6, 8, 10, 14, 26)")
    if not is_d_satisfactory(d, ell):
        raise HypothesisError("d_satisfactory", f"{ell} is not {d}-satisfactory")
    _check_denominator(alpha, ell)
    r0 = _canonical_r(r, ell**2)
    _residue_ord_check(d, ell, r0, 1, "residue_ord_one")
    v = _finite_alpha_ord(alpha, d, ell)
    if v < 1:
        raise HypothesisError(
            "alpha_ord_positive", f"ord_{ell}(alpha - {d}) = {v}, need >= 1"
        )
    return CongruenceClaim(ClaimFamily.T1, alpha, d, ell, 2, r0, v)


def build_t2_claim(alpha, ell: int, r: int) -> CongruenceClaim:
    """d = 2 analogue: modulus ell^(ord_ell(alpha - 2) - 1)."""
    alpha = _as_rational(alpha)
    if not is_d_satisfactory(2, ell):
        raise HypothesisError("two_satisfactory", f"{ell} == 1 (mod 12) is excluded")
    _check_denominator(alpha, ell)
    r0 = _canonical_r(r, ell**2)
    _residue_ord_check(2, ell, r0, 1, "residue_ord_one")
    v = _finite_alpha_ord(alpha, 2, ell)
    if v < 2:
        raise HypothesisError(
            "alpha_ord_at_least_two", f"ord_{ell}(alpha - 2) = {v}, need >= 2"
        )
    return CongruenceClaim(ClaimFamily.T2, alpha, 2, ell, 2, r0, v - 1)


def find_w(ell: int, v: int) -> int:
    """Smallest w >= 1 with a_2(ell^w) == 0 (mod ell^v).

    The two-term recursion on (a_2(ell^i), a_2(ell^(i+1))) mod ell^v is
    purely periodic, so some index below ell^(2v) hits zero; exceeding
    that bound would mean the recursion itself is broken, and is raised
    rather than looped on.
    """
    if v < 1:
        raise PreconditionError("find_w requires v >= 1")
    bound = ell ** (2 * v)
    it = a2_prime_power_iter(ell, v)
    next(it)  # a_2(1)
    for w in range(1, bound + 1):
        if next(it) == 0:
            return w
    raise AssertionError(
        f"no zero of a_2({ell}^w) mod {ell}^{v} below the period bound {bound}"
    )


def build_t3_claim(alpha, ell: int, v: int, r: int) -> CongruenceClaim:
    """Every-prime claim p_alpha(ell^(w+1)*n + r) == 0 (mod ell^v)."""
    alpha = _as_rational(alpha)
    if v < 1:
        raise HypothesisError("v_positive", f"v = {v} must be >= 1")
    _check_denominator(alpha, ell)
    w = find_w(ell, v)
    ord_alpha = _finite_alpha_ord(alpha, 2, ell)
    if ord_alpha != v + w:
        raise HypothesisError(
            "alpha_ord_equals_v_plus_w",
            f"ord_{ell}(alpha - 2) = {ord_alpha}, need v + w = {v} + {w} = {v + w}",
        )
    r0 = _canonical_r(r, ell ** (w + 1))
    ord_r = padic_ord(12 * r0 + 1, ell)
    if ord_r != w:
        raise HypothesisError(
            "residue_ord_equals_w", f"ord_{ell}(12r + 1) = {ord_r}, need w = {w}"
        )
    return CongruenceClaim(ClaimFamily.T3, alpha, 2, ell, w + 1, r0, v)


def build_remark_claim(alpha, d: int, ell: int, r: int) -> CongruenceClaim:
    """The excluded-prime variants (d, ell) in {(14, 5), (26, 11)}."""
    alpha = _as_rational(alpha)
    if (d, ell) not in ((14, 5), (26, 11)):
        raise HypothesisError(
            "remark_pair", f"(d, ell) = ({d}, {ell}) not in {{(14, 5), (26, 11)}}"
        )
    _check_denominator(alpha, ell)
    r0 = _canonical_r(r, ell**2)
    _residue_ord_check(d, ell, r0, 1, "residue_ord_one")
    drop = 1 if d == 14 else 2
    ord_alpha = _finite_alpha_ord(alpha, d, ell)
    power = ord_alpha - drop
    if power < 1:
        raise HypothesisError(
            "modulus_power_positive",
            f"ord_{ell}(alpha - {d}) - {drop} = {power}, need >= 1",
        )
    return CongruenceClaim(ClaimFamily.REMARK, alpha, d, ell, 2, r0, power)


def find_residues(d: int, ell: int, target_ord: int, count: int) -> list[int]:
    """The count smallest r >= 0 with ord_ell((24/g)*r + d/g) exactly target_ord."""
    if target_ord < 1 or count < 1:
        raise PreconditionError("find_residues requires target_ord >= 1 and count >= 1")
    if not is_prime(ell):
        raise PreconditionError(f"{ell} is not prime")
    g = gcd(d, 24)
    m, c = 24 // g, d // g
    if gcd(ell, m) != 1:
        raise PreconditionError(f"{ell} divides the progression step {m}")
    modulus = ell**target_ord
    r = (-c * pow(m, -1, modulus)) % modulus
    out = []
    while len(out) < count:
        if (m * r + c) % (modulus * ell) != 0:
            out.append(r)
        r += modulus
    return out


def required_precision(claim: CongruenceClaim, n_max: int) -> int:
    return claim.progression_modulus * n_max + claim.r + 1


def _progression_values(claim: CongruenceClaim, n_max: int, max_precision: int | None):
    prec = required_precision(claim, n_max)
    if max_precision is not None and prec > max_precision:
        raise PrecisionCapExceeded(
            f"verifying {claim.describe()} to n_max = {n_max} needs series precision "
            f"{prec}, above the cap {max_precision}"
        )
    fps = frac_partition_series(claim.alpha, prec)
    return extract_progression(fps, claim.progression_modulus, claim.r).truncate(n_max + 1)


def verify_claim(
    claim: CongruenceClaim, n_max: int, max_precision: int | None = None
) -> VerificationReport:
    """Check the claim for 0 <= n <= n_max against the exact expansion.

    The first failing n (if any) is reported with the exact coefficient
    and its ell-adic ord.  A non-ell-integral coefficient turns into
    PRECONDITION_FAILED rather than an exception.
    """
    if n_max < 0:
        raise PreconditionError("n_max must be >= 0")
    values = _progression_values(claim, n_max, max_precision)
    try:
        residues = series_reduce_mod(values, claim.ell, claim.modulus_power)
    except NotLIntegralError as exc:
        return VerificationReport(
            claim, n_max, VerificationStatus.PRECONDITION_FAILED, note=str(exc)
        )
    for n, residue in enumerate(residues.coeffs):
        if residue != 0:
            value = values.coeff(n)
            return VerificationReport(
                claim,
                n_max,
                VerificationStatus.COUNTEREXAMPLE,
                Counterexample(n=n, value=value, ord=padic_ord(value, claim.ell)),
            )
    return VerificationReport(claim, n_max, VerificationStatus.VERIFIED_IN_RANGE)


def sharpness_probe(
    claim: CongruenceClaim, n_max: int, max_precision: int | None = None
) -> SharpnessWitness | None:
    """First n <= n_max whose coefficient has ord exactly modulus_power.

    Such a witness shows the modulus exponent cannot be raised.  None
    means inconclusive: absence of a witness in range proves nothing.
    """
    if n_max < 0:
        raise PreconditionError("n_max must be >= 0")
    values = _progression_values(claim, n_max, max_precision)
    for n in range(n_max + 1):
        value = values.coeff(n)
        if value != 0 and padic_ord(value, claim.ell) == claim.modulus_power:
            return SharpnessWitness(n=n, value=value)
    return None


def certificate_record(report: VerificationReport) -> dict:
    """Certificate fields in fixed order (one JSON object per line)."""
    claim = report.claim
    record = {
        "family": claim.family.value,
        "alpha": format_rational(claim.alpha),
        "d": claim.d,
        "ell": claim.ell,
        "e": claim.e,
        "r": claim.r,
        "modulus_power": claim.modulus_power,
        "n_max": report.n_max,
        "status": report.status.value,
    }
    if report.counterexample is not None:
        ce = report.counterexample
        record["counterexample"] = {
            "n": ce.n,
            "value": format_rational(ce.value),
            "ord": ce.ord if ce.ord is not INFINITY else None,
        }
    if report.note:
        record["note"] = report.note
    record["artifact_version"] = _artifact_version
    return record


def certificate_line(report: VerificationReport) -> str:
    return json.dumps(certificate_record(report), separators=(",", ":"))
