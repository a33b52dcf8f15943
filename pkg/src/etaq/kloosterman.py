"""Kloosterman-like exponential sums attached to a frame shape.

For modulus k the sum runs over residues h in [0, k) coprime to k (h = 0
participates only at k = 1, via gcd(0, 1) = 1), each contributing a unit
complex number whose phase combines hn/k with a shape-weighted mix of
Dedekind sums.  The full phase is an exact rational, so it is reduced mod 1
in integer arithmetic before any floating evaluation.

The sum is provably real; this module computes it as a complex sum anyway
and takes the real part, leaving realness as a numerical check rather than
an assumed symmetry.
"""

from __future__ import annotations

import warnings
from fractions import Fraction
from math import gcd

from mpmath import mp

from .dedekind import dedekind_sum_fast
from .precision import DEFAULT_PRECISION, to_mpf, tolerance, working
from .shapes import FrameShape


def coprime_residues(k: int) -> list[int]:
    """Residues h in [0, k) with gcd(h, k) = 1; [0] when k = 1."""
    return [h for h in range(k) if gcd(h, k) == 1]


def phase_table(shape: FrameShape, k: int) -> list[tuple[int, Fraction]]:
    """The n-independent phase parts: pairs (h, C_h) with

    C_h = (1/2) * sum over entries (m, e) of e * s(m*h/gcd(m,k), k/gcd(m,k))

    where s is the Dedekind sum.  C_h is reduced mod 1.  The full phase of
    the h-term at index n is then hn/k + C_h.
    """
    if k < 1:
        raise ValueError(f"modulus must be >= 1, got {k}")
    table = []
    for h in coprime_residues(k):
        c = Fraction(0)
        for m, e in shape.entries:
            d = gcd(m, k)
            kk = k // d
            hh = ((m // d) * h) % kk
            c += e * dedekind_sum_fast(hh, kk)
        c = c / 2
        table.append((h, c - (c.numerator // c.denominator)))
    return table


def kloosterman_sum_complex(
    shape: FrameShape, k: int, n: int, precision: int = DEFAULT_PRECISION
):
    """The full complex sum, before taking the real part."""
    with working(precision):
        total = mp.mpc(0)
        for h, c in phase_table(shape, k):
            r = Fraction(h * n, k) + c
            r -= r.numerator // r.denominator
            total += mp.expjpi(to_mpf(-2 * r))
        return total


def kloosterman_like_sum(
    shape: FrameShape, k: int, n: int, precision: int = DEFAULT_PRECISION
):
    """Real value of the exponential sum at modulus k and index n.

    Warns if the imaginary residual exceeds 10**-(precision-10): the sum is
    real in exact arithmetic, so a large residual signals a precision or
    implementation fault.
    """
    total = kloosterman_sum_complex(shape, k, n, precision)
    with working(precision):
        if abs(total.imag) > tolerance(precision):
            warnings.warn(
                f"imaginary residual {total.imag} of the k={k}, n={n} "
                f"exponential sum exceeds 10^-({precision}-10)",
                RuntimeWarning,
                stacklevel=2,
            )
    return total.real
