"""Shared test fixtures: independent oracles and reference shapes.

The oracles here deliberately avoid the package's own series code: the
partition numbers come from the classical pentagonal recurrence, and the
product expansion multiplies binomial factors one at a time.
"""

from __future__ import annotations

from math import gcd

import pytest

from etaq import FrameShape, MatrixSL2

# quotients known to satisfy the convergence hypotheses; the last two
# converge noticeably more slowly than the rest
REFERENCE_SHAPES = (
    FrameShape({1: -3, 4: -1}),
    FrameShape({1: -3, 4: 1}),
    FrameShape({2: -1}),
    FrameShape({1: -2, 11: -2}),
    FrameShape({1: -1, 22: -1}),
    FrameShape({1: -1, 23: -1}),
)

FAST_SHAPES = (
    FrameShape({1: -3, 4: -1}),
    FrameShape({1: -3, 4: 1}),
    FrameShape({2: -1}),
)


def partition_table(n_max: int) -> list[int]:
    """p(0..n_max) by the pentagonal recurrence
    p(n) = sum_{k>=1} (-1)^(k+1) [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)]."""
    p = [0] * (n_max + 1)
    p[0] = 1
    for n in range(1, n_max + 1):
        total = 0
        k = 1
        while True:
            g1 = n - k * (3 * k - 1) // 2
            if g1 < 0:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[g1]
            g2 = g1 - k
            if g2 >= 0:
                total += sign * p[g2]
            k += 1
        p[n] = total
    return p


def product_expansion(factors, T: int) -> list[int]:
    """Expand prod (1 - q^n)^e[n] for (n, e) in factors, e >= 0, mod q^(T+1),
    multiplying one binomial at a time."""
    c = [0] * (T + 1)
    c[0] = 1
    for n, e in factors:
        for _ in range(e):
            for i in range(T, n - 1, -1):
                c[i] -= c[i - n]
    return c


def _bezout(x: int, y: int) -> tuple[int, int]:
    """(a, b) with a*x + b*y = gcd(x, y), normalized to gcd = +1 callers."""
    old_r, r = x, y
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_s, old_t = -old_s, -old_t
    return old_s, old_t


def random_sl2(rng, bound: int = 50) -> MatrixSL2:
    """Random determinant-one integer matrix with |entries| <= bound."""
    while True:
        c = rng.randint(-bound, bound)
        d = rng.randint(-bound, bound)
        if gcd(c, d) != 1:
            continue
        a0, b0 = _bezout(d, -c)
        ts = [
            t
            for t in range(-2 * bound, 2 * bound + 1)
            if abs(a0 + t * c) <= bound and abs(b0 + t * d) <= bound
        ]
        if not ts:
            continue
        t = rng.choice(ts)
        return MatrixSL2(a0 + t * c, b0 + t * d, c, d)


@pytest.fixture(scope="session")
def p_oracle():
    return partition_table(2200)
