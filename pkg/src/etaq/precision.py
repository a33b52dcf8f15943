"""Working-precision policy for the analytic layer.

All analytic routines take a decimal-digit precision P (default 50) and run
their internals at P plus a fixed number of guard digits; the backing
library keeps at least 3.33 bits per requested digit.  Tolerances quoted in
tests and reports derive from P as 10**-(P-10).
"""

from __future__ import annotations

from fractions import Fraction

from mpmath import mp

DEFAULT_PRECISION = 50
GUARD_DIGITS = 10


def working(precision: int):
    """Context manager setting the working precision with guard digits."""
    if precision < 1:
        raise ValueError(f"precision must be >= 1 digit, got {precision}")
    return mp.workdps(precision + GUARD_DIGITS)


def tolerance(precision: int):
    """The derived comparison tolerance 10**-(precision-10)."""
    return mp.mpf(10) ** (-(precision - 10))


def to_mpf(value):
    """Convert int/Fraction/float to mpf at the current working precision."""
    if isinstance(value, Fraction):
        return mp.mpf(value.numerator) / value.denominator
    return mp.mpf(value)
