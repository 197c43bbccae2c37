"""Exact rational coefficient backend.

Every coefficient in this package is an exact rational (or a plain int,
which embeds into the rationals).  Two interchangeable backends provide
the rational type:

* ``gmpy2`` (``gmpy2.mpq``) -- fast C implementation, used by default
  when importable;
* ``fractions`` (``fractions.Fraction``) -- pure-stdlib fallback.

The environment variable ``CONGRUENCE_WORKBENCH_BACKEND`` forces the
choice (``gmpy2``, ``fractions``, or ``auto``).  Both backends store
values in lowest terms with a positive denominator, so results are
bit-identical across backends; see ``benchmarks/bench_backends.py`` for
the speed comparison.
"""

from __future__ import annotations

import os
from fractions import Fraction

_ENV_VAR = "CONGRUENCE_WORKBENCH_BACKEND"
_requested = os.environ.get(_ENV_VAR, "auto").strip().lower()

if _requested not in ("auto", "gmpy2", "fractions"):
    raise RuntimeError(
        f"{_ENV_VAR} must be one of 'auto', 'gmpy2', 'fractions'; got {_requested!r}"
    )

if _requested in ("auto", "gmpy2"):
    try:
        from gmpy2 import mpq as _mpq

        BACKEND_NAME = "gmpy2"
        _RATIONAL_TYPE = type(_mpq(1))
        rational = _mpq
    except ImportError:
        if _requested == "gmpy2":
            raise RuntimeError(f"{_ENV_VAR}=gmpy2 but gmpy2 is not installed")
        BACKEND_NAME = "fractions"
        _RATIONAL_TYPE = Fraction
        rational = Fraction
else:
    BACKEND_NAME = "fractions"
    _RATIONAL_TYPE = Fraction
    rational = Fraction

#: types accepted wherever a rational scalar is expected
RATIONAL_TYPES = (int, Fraction, _RATIONAL_TYPE)


def is_rational(x) -> bool:
    return isinstance(x, RATIONAL_TYPES)


def numerator(x) -> int:
    return int(x.numerator)


def denominator(x) -> int:
    return int(x.denominator)


def format_rational(x) -> str:
    """Serialize as ``"<numerator>/<denominator>"``, denominator >= 1."""
    return f"{numerator(x)}/{denominator(x)}"


def parse_rational(text: str):
    """Parse ``"a/b"`` or ``"a"`` (decimal integers, optional sign)."""
    s = text.strip()
    if not s:
        raise ValueError("empty rational literal")
    num_s, sep, den_s = s.partition("/")
    num = int(num_s)
    den = int(den_s) if sep else 1
    if den == 0:
        raise ValueError(f"zero denominator in rational literal {text!r}")
    return rational(num, den)
