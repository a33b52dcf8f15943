"""Dedekind sums, exact in rational arithmetic.

Two routes are provided: the O(k) defining sum (ground truth) and a
reciprocity-based Euclidean descent that runs in O(log k) for coprime
arguments.  The naive route is the contract; the fast route exists because
the exponential-sum evaluation upstream needs many sums at large k.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

import numpy as np

# n*(2*(h*n % k) - k) stays within int64 and so does its k-term sum as long
# as k**3 < 2**63; above this we keep Python integers.
_INT64_SAFE_K = 2_000_000


def dedekind_sum(h: int, k: int) -> Fraction:
    """The defining sum: sum over n in [1, k) of (n/k)(hn/k - floor(hn/k) - 1/2).

    h is reduced mod k; k = 1 gives the empty sum 0.  Exact for every
    nonnegative h, coprime to k or not.
    """
    if k < 1:
        raise ValueError(f"modulus must be >= 1, got {k}")
    if h < 0:
        raise ValueError(f"argument must be nonnegative, got {h}")
    h %= k
    if k == 1:
        return Fraction(0)
    # Each term is n*(2*(h*n mod k) - k) / (2*k**2); accumulate the integer
    # numerator only.
    if k <= _INT64_SAFE_K:
        n = np.arange(1, k, dtype=np.int64)
        r = (h * n) % k
        total = int(np.sum(n * (2 * r - k)))
    else:
        total = 0
        r = 0
        for n in range(1, k):
            r = (r + h) % k
            total += n * (2 * r - k)
    return Fraction(total, 2 * k * k)


def dedekind_sum_fast(h: int, k: int) -> Fraction:
    """Reciprocity-accelerated Dedekind sum for gcd(h, k) = 1.

    Euclidean descent on (h, k); O(log k) exact-rational steps.  Agrees with
    dedekind_sum on coprime arguments (the defining sum and the classical
    sawtooth sum coincide there).
    """
    if k < 1:
        raise ValueError(f"modulus must be >= 1, got {k}")
    if h < 0:
        raise ValueError(f"argument must be nonnegative, got {h}")
    h %= k
    if h == 0:
        if k == 1:
            return Fraction(0)
        raise ValueError(f"arguments must be coprime, got ({h}, {k})")
    if gcd(h, k) != 1:
        raise ValueError(f"arguments must be coprime, got ({h}, {k})")
    total = Fraction(0)
    sign = 1
    while h:
        total += sign * (
            Fraction(h * h + k * k + 1, 12 * h * k) - Fraction(1, 4)
        )
        h, k = k % h, h
        sign = -sign
    return total


def reciprocity_rhs(h: int, k: int) -> Fraction:
    """Right-hand side of Dedekind reciprocity: -1/4 + (h/k + k/h + 1/(hk))/12."""
    if h < 1 or k < 1:
        raise ValueError("reciprocity needs positive arguments")
    return Fraction(h * h + k * k + 1, 12 * h * k) - Fraction(1, 4)
