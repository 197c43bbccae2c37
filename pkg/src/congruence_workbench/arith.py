"""Exact scalar arithmetic.

Arbitrary-precision rationals (see :mod:`.backend`), the quadratic
extension Q(sqrt(-3)), l-adic valuations with a proper infinity, and
quadratic-residue symbols (Legendre / Jacobi / Kronecker) together with
the eta-power character table.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .backend import (
    denominator,
    format_rational,
    is_rational,
    numerator,
    parse_rational,
    rational,
)

__all__ = [
    "INFINITY",
    "NotLIntegralError",
    "PreconditionError",
    "QuadRational",
    "SQRT_MINUS_3",
    "chi_eta",
    "format_quad",
    "is_prime",
    "kronecker_symbol",
    "legendre_symbol",
    "padic_ord",
    "parse_quad",
    "primes_below",
    "reduce_mod_prime_power",
]


class PreconditionError(ValueError):
    """An argument violates a documented precondition."""


class NotLIntegralError(PreconditionError):
    """The prime divides a denominator, so the congruence is undefined."""

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


class _Infinity:
    """Valuation of zero.  Compares greater than every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("congruence_workbench.INFINITY")

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __add__(self, other):
        return self

    __radd__ = __add__


INFINITY = _Infinity()

# Deterministic Miller-Rabin witness set: correct for all n < 3.3 * 10^24
# (Sorenson-Webster).  Inputs here are far below that bound; larger inputs
# would make the test probabilistic, which the primality contract allows.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def is_prime(n: int) -> bool:
    """Miller-Rabin primality check (deterministic below 3.3e24)."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_below(limit: int) -> list[int]:
    """All primes < limit, by sieve."""
    if limit <= 2:
        return []
    flags = bytearray([1]) * limit
    flags[0] = flags[1] = 0
    for p in range(2, isqrt(limit - 1) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(flags[p * p :: p]))
    return [i for i in range(limit) if flags[i]]


def _require_prime(ell: int, what: str = "modulus"):
    if not is_prime(ell):
        raise PreconditionError(f"{what} {ell} is not prime")


def _int_ord(n: int, ell: int) -> int:
    # n != 0
    k = 0
    while n % ell == 0:
        n //= ell
        k += 1
    return k


def padic_ord(x, ell: int):
    """l-adic valuation of a rational; INFINITY for x = 0.

    ord(num) - ord(den), so e.g. ord_7(-49/8) = 2 and ord_5(1/5) = -1.
    """
    _require_prime(ell, "valuation prime")
    if not is_rational(x):
        raise TypeError(f"padic_ord expects a rational, got {type(x).__name__}")
    if x == 0:
        return INFINITY
    return _int_ord(numerator(x), ell) - _int_ord(denominator(x), ell)


def kronecker_symbol(a: int, m: int) -> int:
    """Kronecker symbol (a/m), the full extension of the Jacobi symbol.

    Conventions: (a/2) is 0 for even a and +-1 by a mod 8; (a/-1) is the
    sign of a; (a/1) = 1.  m = 0 is rejected.
    """
    if m == 0:
        raise PreconditionError("kronecker_symbol requires m != 0")
    result = 1
    if m < 0:
        m = -m
        if a < 0:
            result = -1
    while m % 2 == 0:
        m //= 2
        if a % 2 == 0:
            return 0
        if a % 8 in (3, 5):
            result = -result
    # Jacobi symbol for odd positive m via quadratic reciprocity.
    a %= m
    while a:
        while a % 2 == 0:
            a //= 2
            if m % 8 in (3, 5):
                result = -result
        a, m = m, a
        if a % 4 == 3 and m % 4 == 3:
            result = -result
        a %= m
    return result if m == 1 else 0


def legendre_symbol(a: int, ell: int) -> int:
    """Legendre symbol (a/ell) for an odd prime ell."""
    if ell == 2 or not is_prime(ell):
        raise PreconditionError(f"legendre_symbol requires an odd prime, got {ell}")
    return kronecker_symbol(a, ell)


def chi_eta(d: int, m: int) -> int:
    """Character value attached to the d-th eta power, evaluated at m >= 1.

    Even d: ((-1)^(d/2) / m).  Odd d coprime to 6: (12/m).  Odd multiples
    of 3: (-4/m).
    """
    if m < 1:
        raise PreconditionError("chi_eta requires m >= 1")
    if d % 2 == 0:
        return kronecker_symbol(-1 if (d // 2) % 2 else 1, m)
    if d % 3 == 0:
        return kronecker_symbol(-4, m)
    return kronecker_symbol(12, m)


def reduce_mod_prime_power(x, ell: int, k: int) -> int:
    """Canonical residue of a rational in [0, ell^k).

    Raises NotLIntegralError when ell divides the denominator (the value
    has no residue mod ell^k).
    """
    _require_prime(ell)
    if k < 1:
        raise PreconditionError("reduce_mod_prime_power requires k >= 1")
    num, den = numerator(x), denominator(x)
    if den % ell == 0:
        raise NotLIntegralError(
            f"{format_rational(x)} is not {ell}-integral: {ell} divides the denominator"
        )
    mod = ell**k
    return num * pow(den, -1, mod) % mod


def _as_rational(value):
    if isinstance(value, int):
        return rational(value)
    if is_rational(value):
        return rational(numerator(value), denominator(value))
    raise TypeError(f"cannot interpret {type(value).__name__} as a rational")


@dataclass(frozen=True)
class QuadRational:
    """Element re + im*sqrt(-3) with exact rational components.

    The norm re^2 + 3*im^2 is multiplicative, which is what the tests
    lean on.  Division is exact: x^-1 = conj(x) / norm(x).
    """

    re: object
    im: object

    def __post_init__(self):
        object.__setattr__(self, "re", _as_rational(self.re))
        object.__setattr__(self, "im", _as_rational(self.im))

    @classmethod
    def from_rational(cls, value) -> "QuadRational":
        return cls(value, 0)

    def _coerce(self, other):
        if isinstance(other, QuadRational):
            return other
        if is_rational(other):
            return QuadRational(other, 0)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return QuadRational(-self.re, -self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadRational(
            self.re * o.re - 3 * self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QuadRational":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("QuadRational zero has no inverse")
        return QuadRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __eq__(self, other):
        if isinstance(other, QuadRational):
            return self.re == other.re and self.im == other.im
        if is_rational(other):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def norm(self):
        return self.re * self.re + 3 * self.im * self.im

    def conjugate(self) -> "QuadRational":
        return QuadRational(self.re, -self.im)

    def is_rational_embedding(self) -> bool:
        return self.im == 0

    def __repr__(self):
        return f"QuadRational({self.re}, {self.im})"

    def __str__(self):
        return format_quad(self)


SQRT_MINUS_3 = QuadRational(0, 1)


def format_quad(x: QuadRational) -> str:
    """Serialize as ``"<re>+<im>*sqrt(-3)"`` with rational components."""
    return f"{format_rational(x.re)}+{format_rational(x.im)}*sqrt(-3)"


def parse_quad(text: str) -> QuadRational:
    s = text.strip()
    suffix = "*sqrt(-3)"
    if not s.endswith(suffix):
        raise ValueError(f"malformed QuadRational literal {text!r}")
    body = s[: -len(suffix)]
    re_s, sep, im_s = body.rpartition("+")
    if not sep:
        raise ValueError(f"malformed QuadRational literal {text!r}")
    return QuadRational(parse_rational(re_s), parse_rational(im_s))
