"""Numerical eta evaluation and the multiplier-system transformation check.

These routines exist to validate the exact machinery: the multiplier phase
is built from exact Dedekind sums, and ``transform_check`` measures how well
the weight-1/2 transformation law holds at working precision.  They play no
part in coefficient computation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, log

from mpmath import mp

from .dedekind import dedekind_sum_fast
from .precision import DEFAULT_PRECISION, to_mpf, working


@dataclass(frozen=True)
class MatrixSL2:
    """An integer matrix (a, b; c, d) with determinant +1."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError(
                f"determinant must be +1, got {self.a * self.d - self.b * self.c}"
            )

    def mobius(self, tau):
        """The action tau -> (a*tau + b)/(c*tau + d)."""
        tau = mp.mpc(tau)
        return (self.a * tau + self.b) / (self.c * tau + self.d)


def multiplier_epsilon(M: MatrixSL2, precision: int = DEFAULT_PRECISION):
    """The unit-modulus multiplier of the eta transformation law at M.

    Four cases split on the sign of c; the phase is assembled exactly in
    rational arithmetic (Dedekind sums included) and exponentiated once.
    The value is constant on {M, -M}, which act identically on the upper
    half-plane.
    """
    a, b, c, d = M.a, M.b, M.c, M.d
    if c == 0:
        # d = +-1; the phase is +-b/12
        phase = Fraction(b, 12) if d == 1 else Fraction(-b, 12)
    elif c > 0:
        phase = Fraction(a + d, 12 * c) - dedekind_sum_fast(d % c, c) - Fraction(1, 4)
    else:
        phase = (
            Fraction(a + d, 12 * c)
            - dedekind_sum_fast((-d) % (-c), -c)
            - Fraction(1, 4)
        )
    phase -= 2 * (phase.numerator // (2 * phase.denominator))  # reduce mod 2
    with working(precision):
        return mp.expjpi(to_mpf(phase))


def eta_numeric(tau, precision: int = DEFAULT_PRECISION, truncation: int | None = None):
    """The eta value at tau (upper half-plane) to ``precision`` digits.

    The product is expanded through its sparse pentagonal-number series and
    summed up to order ``truncation`` in q; by default the truncation is the
    smallest T with |q|^T below 10**-(precision+5), and an explicit smaller
    T is rejected.
    """
    with working(precision):
        tau = mp.mpc(tau)
        if tau.imag <= 0:
            raise ValueError(f"tau must lie in the upper half-plane, got {tau}")
        # |q| = exp(-2 pi Im tau); smallest T with |q|^T < 10^-(P+5)
        min_T = ceil((precision + 5) * log(10) / (2 * mp.pi * tau.imag)) + 1
        if truncation is None:
            truncation = min_T
        elif truncation < min_T:
            raise ValueError(
                f"truncation {truncation} too small for precision "
                f"{precision} at this tau (need >= {min_T})"
            )
        q = mp.expjpi(2 * tau)
        # sum over j of (-1)^j q^(j(3j-1)/2) (1 + q^j), exponents <= truncation
        total = mp.mpc(1)
        q3 = q * q * q
        q_pent = q  # q^(j(3j-1)/2)
        q_j = q  # q^j
        q_3j = q3  # q^(3j)
        j = 1
        while True:
            e_plus = j * (3 * j - 1) // 2
            if e_plus > truncation:
                break
            term = q_pent
            if e_plus + j <= truncation:
                term = term + q_pent * q_j
            total = total - term if j % 2 else total + term
            q_pent = q_pent * q_3j * q
            q_3j = q_3j * q3
            q_j = q_j * q
            j += 1
        return mp.expjpi(tau / 12) * total


def transform_check(M: MatrixSL2, tau, precision: int = DEFAULT_PRECISION):
    """|eta(M tau) - epsilon(M) sqrt(c tau + d) eta(tau)|, principal root.

    M and -M act identically and share the same multiplier; the square-root
    factor is taken for the representative with c > 0 (or c = 0, d = 1),
    which is the one the principal branch makes an identity.
    """
    with working(precision):
        tau = mp.mpc(tau)
        c, d = M.c, M.d
        if c < 0 or (c == 0 and d < 0):
            c, d = -c, -d
        lhs = eta_numeric(M.mobius(tau), precision)
        rhs = (
            multiplier_epsilon(M, precision)
            * mp.sqrt(c * tau + d)
            * eta_numeric(tau, precision)
        )
        return abs(lhs - rhs)
