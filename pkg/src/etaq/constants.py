"""Exact derived constants of a frame shape, tabulated on one period.

For a shape with entries (m, e) the quantities computed here are

* ``n0``   = -(1/24) * sum of m*e, the leading-exponent offset,
* ``c1``   = -(1/2) * sum of e, the series growth exponent (a half-integer),
* ``c2_squared[k]`` = prod of (gcd(m,k)/m)**e, the square of the k-th
  amplitude factor (kept squared so the table stays rational),
* ``c3[k]`` = -sum of e * gcd(m,k)**2 / m, the k-th Bessel-argument scale,
* ``g[k]``  = min over the support of gcd(m,k)**2/m, minus c3[k]/24; the
  single-polar-term margin whose non-negativity the series requires.

All tables are periodic in k with period lcm(support) and are stored for
k = 1..period only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .shapes import FrameShape


@dataclass(frozen=True)
class DerivedConstants:
    """Exact rational constants of one frame shape on one period."""

    n0: Fraction
    c1: Fraction
    period: int
    c2_squared: tuple[Fraction, ...]
    c3: tuple[Fraction, ...]
    g: tuple[Fraction, ...]

    def c2_squared_at(self, k: int) -> Fraction:
        return self.c2_squared[(k - 1) % self.period]

    def c3_at(self, k: int) -> Fraction:
        return self.c3[(k - 1) % self.period]

    def g_at(self, k: int) -> Fraction:
        return self.g[(k - 1) % self.period]


@dataclass(frozen=True)
class HypothesisReport:
    """Outcome of the convergence-hypothesis check."""

    c1_positive: bool
    g_nonnegative: bool
    satisfied: bool
    min_g: Fraction
    c1: Fraction


def derive_constants(shape: FrameShape) -> DerivedConstants:
    """Compute all exact derived constants of ``shape``."""
    n0 = -Fraction(sum(m * e for m, e in shape.entries), 24)
    c1 = -Fraction(sum(e for _, e in shape.entries), 2)
    period = shape.period
    support = shape.support

    c2_squared = []
    c3 = []
    g = []
    for k in range(1, period + 1):
        c2s = Fraction(1)
        c3k = Fraction(0)
        for m, e in shape.entries:
            d = gcd(m, k)
            c2s *= Fraction(d, m) ** e
            c3k -= e * Fraction(d * d, m)
        gk = min(Fraction(gcd(m, k) ** 2, m) for m in support) - c3k / 24
        c2_squared.append(c2s)
        c3.append(c3k)
        g.append(gk)

    return DerivedConstants(
        n0=n0,
        c1=c1,
        period=period,
        c2_squared=tuple(c2_squared),
        c3=tuple(c3),
        g=tuple(g),
    )


def check_hypotheses(shape: FrameShape) -> HypothesisReport:
    """Check c1 > 0 and g(k) >= 0 on one period (hence everywhere).

    g(k) = 0 counts as satisfying the hypothesis; several natural quotients
    sit exactly on that boundary.
    """
    consts = derive_constants(shape)
    min_g = min(consts.g)
    c1_positive = consts.c1 > 0
    g_nonnegative = min_g >= 0
    return HypothesisReport(
        c1_positive=c1_positive,
        g_nonnegative=g_nonnegative,
        satisfied=c1_positive and g_nonnegative,
        min_g=min_g,
        c1=consts.c1,
    )
