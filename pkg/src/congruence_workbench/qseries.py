"""Truncated formal power series over an exact coefficient ring.

A :class:`Series` stores dense coefficients for exponents 0..prec-1.
Coefficients may be plain ints, backend rationals, or
:class:`~congruence_workbench.arith.QuadRational`; all operations are
exact.  Binary operations truncate to the shorter operand, and nothing
ever pads precision with fabricated zeros.

The two entry points that matter most are :func:`euler_product`, the
sparse pentagonal-number expansion of (q^M; q^M)_inf, and
:func:`series_pow_rational`, which raises a series with constant term 1
to an arbitrary rational exponent via the logarithmic-derivative
recurrence

    n*g(n) = sum_{k=1..n} (alpha*k - (n-k)) * f(k) * g(n-k),

one exact pass, no floating point anywhere.
"""

from __future__ import annotations

from .arith import (
    NotLIntegralError,
    PreconditionError,
    QuadRational,
    format_quad,
    parse_quad,
    reduce_mod_prime_power,
)
from .backend import format_rational, is_rational, numerator, denominator, parse_rational, rational

__all__ = [
    "Series",
    "euler_product",
    "extract_progression",
    "format_series_text",
    "frac_partition_series",
    "geometric_series",
    "parse_series_text",
    "series_pow_int",
    "series_pow_rational",
    "series_reduce_mod",
    "series_shift",
    "substitute_power",
]


def _zero_like(c):
    return c * 0


def _reciprocal(c):
    if isinstance(c, int):
        if c in (1, -1):
            return c
        if c == 0:
            raise ZeroDivisionError("series constant term is zero")
        return rational(1, c)
    if isinstance(c, QuadRational):
        return c.inverse()
    if c == 0:
        raise ZeroDivisionError("series constant term is zero")
    return 1 / c


class Series:
    """Immutable truncated power series: coefficients for 0..prec-1."""

    __slots__ = ("coeffs", "prec")

    def __init__(self, coeffs, prec: int | None = None):
        coeffs = tuple(coeffs)
        if prec is None:
            prec = len(coeffs)
        if prec != len(coeffs):
            raise ValueError(f"prec {prec} != number of coefficients {len(coeffs)}")
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "prec", prec)

    def __setattr__(self, name, value):
        raise AttributeError("Series is immutable")

    def coeff(self, n: int):
        """Coefficient at exponent n; 0 for n < 0 by convention."""
        if n < 0:
            return 0
        if n >= self.prec:
            raise IndexError(f"exponent {n} beyond truncation order {self.prec}")
        return self.coeffs[n]

    def nonzero_items(self):
        return [(n, c) for n, c in enumerate(self.coeffs) if c != 0]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def truncate(self, prec: int) -> "Series":
        if prec > self.prec:
            raise ValueError(f"cannot extend precision {self.prec} to {prec}")
        return Series(self.coeffs[:prec], prec)

    def scale(self, scalar) -> "Series":
        if scalar == 1:
            return self
        return Series([scalar * c for c in self.coeffs], self.prec)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.prec == other.prec and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    def __hash__(self):
        return hash((self.prec, self.coeffs))

    def __neg__(self):
        return Series([-c for c in self.coeffs], self.prec)

    def __add__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        prec = min(self.prec, other.prec)
        return Series(
            [a + b for a, b in zip(self.coeffs[:prec], other.coeffs[:prec])], prec
        )

    def __sub__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        prec = min(self.prec, other.prec)
        return Series(
            [a - b for a, b in zip(self.coeffs[:prec], other.coeffs[:prec])], prec
        )

    def __mul__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        prec = min(self.prec, other.prec)
        # Cauchy product; skip zero entries so sparse operands (eta powers,
        # Euler products) pay only for their support.
        f = [(i, c) for i, c in enumerate(self.coeffs[:prec]) if c != 0]
        g = [(j, c) for j, c in enumerate(other.coeffs[:prec]) if c != 0]
        if len(g) < len(f):
            f, g = g, f
        out = [0] * prec
        for i, a in f:
            for j, b in g:
                n = i + j
                if n >= prec:
                    break
                out[n] = out[n] + a * b
        return Series(out, prec)

    def __repr__(self):
        shown = ", ".join(f"{c}*q^{n}" for n, c in self.nonzero_items()[:6])
        if len(self.nonzero_items()) > 6:
            shown += ", ..."
        return f"Series({shown or '0'}; prec={self.prec})"


def geometric_series(prec: int) -> Series:
    """1 + q + q^2 + ... truncated at prec."""
    return Series([1] * prec, prec)


def euler_product(M: int, prec: int) -> Series:
    """(q^M; q^M)_inf truncated at prec.

    Sparse fill: coefficient (-1)^k at exponent M*k*(3k-1)/2 for every
    integer k (generalized pentagonal numbers), zero elsewhere.
    """
    if M < 1:
        raise PreconditionError("euler_product requires M >= 1")
    if prec < 1:
        raise PreconditionError("euler_product requires prec >= 1")
    out = [0] * prec
    out[0] = 1
    k = 1
    while True:
        placed = False
        sign = -1 if k % 2 else 1
        for kk in (k, -k):
            e = M * kk * (3 * kk - 1) // 2
            if e < prec:
                out[e] = sign
                placed = True
        if not placed:
            break
        k += 1
    return Series(out, prec)


def _invert(f: Series) -> Series:
    inv0 = _reciprocal(f.coeff(0))
    prec = f.prec
    support = [(k, c) for k, c in enumerate(f.coeffs) if k >= 1 and c != 0]
    out = [inv0] + [0] * (prec - 1)
    for n in range(1, prec):
        acc = 0
        for k, c in support:
            if k > n:
                break
            acc = acc + c * out[n - k]
        out[n] = -inv0 * acc if acc != 0 else _zero_like(out[0])
    return Series(out, prec)


def series_pow_int(f: Series, e: int) -> Series:
    """f**e by repeated squaring; e < 0 inverts first (f(0) must be a unit)."""
    if f.prec == 0:
        return f
    if e == 0:
        one = _zero_like(f.coeffs[0]) + 1 if f.coeffs else 1
        return Series([one] + [0] * (f.prec - 1), f.prec)
    base = f if e > 0 else _invert(f)
    e = abs(e)
    result = None
    while e:
        if e & 1:
            result = base if result is None else result * base
        e >>= 1
        if e:
            base = base * base
    return result


def series_pow_rational(f: Series, alpha) -> Series:
    """f**alpha for rational alpha; requires f(0) = 1.

    Exact rational output: the unique solution g of f*g' = alpha*f'*g
    with g(0) = 1.
    """
    if isinstance(alpha, int):
        alpha = rational(alpha)
    elif is_rational(alpha):
        alpha = rational(numerator(alpha), denominator(alpha))
    else:
        raise TypeError("alpha must be a rational number")
    if f.prec < 1 or f.coeff(0) != 1:
        raise PreconditionError("series_pow_rational requires constant term 1")
    a, b = numerator(alpha), denominator(alpha)
    prec = f.prec
    support = [(k, c) for k, c in enumerate(f.coeffs) if k >= 1 and c != 0]
    out = [rational(1)] + [None] * (prec - 1)
    for n in range(1, prec):
        acc = 0
        for k, c in support:
            if k > n:
                break
            weight = a * k - b * (n - k)
            if weight == 0:
                continue
            if c == 1:
                acc = acc + weight * out[n - k]
            elif c == -1:
                acc = acc - weight * out[n - k]
            else:
                acc = acc + weight * c * out[n - k]
        out[n] = rational(acc, b * n) if isinstance(acc, int) else acc / (b * n)
    return Series(out, prec)


def frac_partition_series(alpha, prec: int) -> Series:
    """Coefficients of (q; q)_inf**alpha for exponents 0..prec-1."""
    return series_pow_rational(euler_product(1, prec), alpha)


def substitute_power(f: Series, m: int) -> Series:
    """q -> q^m; coefficient at m*n equals f(n), result prec = m*f.prec."""
    if m < 1:
        raise PreconditionError("substitute_power requires m >= 1")
    if m == 1:
        return f
    out = [0] * (m * f.prec)
    for n, c in enumerate(f.coeffs):
        out[m * n] = c
    return Series(out, m * f.prec)


def extract_progression(f: Series, m: int, c: int) -> Series:
    """Coefficients along the progression m*n + c, n = 0, 1, ..."""
    if m < 1:
        raise PreconditionError("extract_progression requires m >= 1")
    if not 0 <= c < m:
        raise PreconditionError(f"residue c = {c} must satisfy 0 <= c < m = {m}")
    if f.prec <= c:
        return Series([], 0)
    out_prec = (f.prec - c + m - 1) // m
    return Series([f.coeffs[m * n + c] for n in range(out_prec)], out_prec)


def series_shift(f: Series, t: int) -> Series:
    """Multiply by q^t; precision grows by t."""
    if t < 0:
        raise PreconditionError("series_shift requires t >= 0")
    if t == 0:
        return f
    return Series((0,) * t + f.coeffs, f.prec + t)


def series_reduce_mod(f: Series, ell: int, k: int) -> Series:
    """Coefficientwise canonical residues in [0, ell^k).

    Raises NotLIntegralError naming the first offending exponent when a
    coefficient is not ell-integral.
    """
    out = []
    for n, c in enumerate(f.coeffs):
        if isinstance(c, QuadRational):
            raise TypeError("series_reduce_mod is defined for rational coefficients")
        try:
            out.append(reduce_mod_prime_power(c, ell, k))
        except NotLIntegralError as exc:
            raise NotLIntegralError(
                f"coefficient at exponent {n} is not {ell}-integral", index=n
            ) from exc
    return Series(out, f.prec)


def _format_coefficient(c) -> str:
    if isinstance(c, QuadRational):
        return format_quad(c)
    return format_rational(c)


def format_series_text(f: Series) -> str:
    """Golden-file text format: header plus one nonzero coefficient per line."""
    lines = [f"# prec={f.prec}"]
    for n, c in f.nonzero_items():
        lines.append(f"{n}\t{_format_coefficient(c)}")
    return "\n".join(lines) + "\n"


def parse_series_text(text: str) -> Series:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("# prec="):
        raise ValueError("series text must start with a '# prec=<N>' header")
    prec = int(lines[0].split("=", 1)[1])
    out = [0] * prec
    last = -1
    for ln in lines[1:]:
        n_s, _, coeff_s = ln.partition("\t")
        n = int(n_s)
        if not 0 <= n < prec:
            raise ValueError(f"exponent {n} outside [0, {prec})")
        if n <= last:
            raise ValueError("exponents must be strictly ascending")
        last = n
        if "sqrt(-3)" in coeff_s:
            out[n] = parse_quad(coeff_s)
        else:
            out[n] = parse_rational(coeff_s)
    return Series(out, prec)
