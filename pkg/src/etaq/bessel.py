"""Modified Bessel function of the first kind at integer and half-integer order.

Only orders nu >= 1 with denominator 1 or 2 arise here (nu = 1 + c1 with c1
a half-integer), so the gamma values in the ascending series are generated
exactly by the recurrence Gamma(z+1) = z*Gamma(z) from Gamma(1) = 1 and
Gamma(1/2) = sqrt(pi); no general gamma function is involved.
"""

from __future__ import annotations

from fractions import Fraction

from mpmath import mp

from .precision import DEFAULT_PRECISION, to_mpf, working


def _as_order(nu) -> Fraction:
    nu = Fraction(nu)
    if nu.denominator not in (1, 2):
        raise ValueError(f"order must be an integer or half-integer, got {nu}")
    if nu < 1:
        raise ValueError(f"order must be >= 1, got {nu}")
    return nu


def bessel_i(nu, x, precision: int = DEFAULT_PRECISION):
    """I_nu(x) for half-integer nu >= 1 and real x >= 0.

    Ascending series sum_j (x/2)^(2j+nu) / (Gamma(j+nu+1) j!), summed until
    a term falls below 10**-(precision+5) times the running sum.
    """
    nu = _as_order(nu)
    with working(precision):
        x = mp.mpf(x)
        if x < 0:
            raise ValueError(f"argument must be >= 0, got {x}")
        if x == 0:
            return mp.mpf(0)

        # Gamma(nu + 1) exactly: rational * (sqrt(pi) on the half-integer side)
        rat = Fraction(1)
        z = Fraction(1, 2) if nu.denominator == 2 else Fraction(1)
        while z < nu + 1:
            rat *= z
            z += 1
        gamma_nu1 = to_mpf(rat) * (mp.sqrt(mp.pi) if nu.denominator == 2 else 1)

        half = x / 2
        term = mp.power(half, to_mpf(nu)) / gamma_nu1
        total = term
        half2 = half * half
        j = 0
        threshold = mp.mpf(10) ** (-(precision + 5))
        while True:
            term = term * half2 / ((j + 1) * to_mpf(j + 1 + nu))
            total += term
            j += 1
            if term < threshold * total:
                break
        return total
