"""Exact rational scalars.

Every coefficient in this package is an exact rational: arbitrary-precision
integers, always in lowest terms, positive denominator.  gmpy2's ``mpq``
provides exactly that an order of magnitude faster than ``fractions.Fraction``;
we fall back to ``Fraction`` when gmpy2 is unavailable.  Both render as
"num/den" with the denominator omitted when it is 1, which is the canonical
text form used throughout the CLI output.

Plain ``int`` values are accepted anywhere a scalar is: mixed int/rational
arithmetic stays exact and never produces floats (the code never divides two
bare ints).
"""

from __future__ import annotations

from fractions import Fraction

try:
    from gmpy2 import mpq as Q
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    Q = Fraction

Scalar = object  # int | Fraction | Q; kept loose on purpose

_SCALAR_TYPES = (int, Fraction, type(Q(0)))

QZERO = Q(0)
QONE = Q(1)


def is_scalar(value) -> bool:
    return isinstance(value, _SCALAR_TYPES)


def as_scalar(value) -> Scalar:
    """Coerce ints, Fractions, and "p/q" strings to the scalar type.

    Floats are rejected: no rounding ever occurs anywhere in the package.
    """
    if isinstance(value, _SCALAR_TYPES):
        return value
    if isinstance(value, str):
        text = value.strip()
        try:
            return Q(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"malformed rational {value!r}") from exc
    raise TypeError(f"cannot interpret {type(value).__name__} as an exact rational")


def scalar_inv(value) -> Scalar:
    """Exact reciprocal; guaranteed to return a rational even for int input."""
    if not value:
        raise ZeroDivisionError("reciprocal of zero")
    return QONE / as_scalar(value)


def scalar_str(value) -> str:
    """Canonical "num/den" rendering (denominator omitted when 1)."""
    return str(as_scalar(value))
