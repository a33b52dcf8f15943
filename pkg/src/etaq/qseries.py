"""Truncated power series over the integers, and exact eta-quotient coefficients.

This is the exact ground truth for everything analytic in the package: all
arithmetic is over arbitrary-size Python integers, carried out modulo
q^(T+1) for a fixed truncation order T.  Multiplication is schoolbook
(iterating the sparser factor's nonzero support), inversion is the standard
triangular recurrence, and powers use binary powering; nothing here is
approximate.
"""

from __future__ import annotations

from fractions import Fraction

from .constants import derive_constants
from .shapes import FrameShape, ShapeError, format_shape, parse_shape


class IntPowerSeries:
    """Dense integer coefficients c[0..T], exact modulo q^(T+1).

    Operations never change the truncation except where documented
    (``dilate`` takes an explicit target order).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs, truncation: int | None = None):
        coeffs = [int(c) for c in coeffs]
        if truncation is not None:
            if truncation < 0:
                raise ValueError("truncation must be >= 0")
            if len(coeffs) > truncation + 1:
                coeffs = coeffs[: truncation + 1]
            else:
                coeffs += [0] * (truncation + 1 - len(coeffs))
        if not coeffs:
            raise ValueError("series needs at least the constant coefficient")
        self.coeffs = coeffs

    @property
    def truncation(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, IntPowerSeries) and self.coeffs == other.coeffs

    def __repr__(self):
        head = ", ".join(str(c) for c in self.coeffs[:8])
        tail = ", ..." if len(self.coeffs) > 8 else ""
        return f"IntPowerSeries([{head}{tail}], T={self.truncation})"

    def __mul__(self, other):
        return series_mul(self, other)

    def __pow__(self, e: int):
        return series_pow(self, e)

    def _support(self) -> list[int]:
        return [i for i, c in enumerate(self.coeffs) if c]


def one(truncation: int) -> IntPowerSeries:
    return IntPowerSeries([1], truncation)


def euler_series(truncation: int) -> IntPowerSeries:
    """prod(1 - q^n) mod q^(T+1), built sparsely from the pentagonal numbers.

    The coefficient at exponent j(3j-1)/2 (j ranging over all integers) is
    (-1)^j; every other coefficient vanishes.
    """
    if truncation < 0:
        raise ValueError("truncation must be >= 0")
    coeffs = [0] * (truncation + 1)
    coeffs[0] = 1
    j = 1
    while True:
        e_plus = j * (3 * j - 1) // 2
        if e_plus > truncation:
            break
        sign = -1 if j % 2 else 1
        coeffs[e_plus] = sign
        e_minus = j * (3 * j + 1) // 2
        if e_minus <= truncation:
            coeffs[e_minus] = sign
        j += 1
    return IntPowerSeries(coeffs)


def series_mul(a: IntPowerSeries, b: IntPowerSeries) -> IntPowerSeries:
    """Exact product mod q^(T+1); the truncations must match."""
    if a.truncation != b.truncation:
        raise ValueError(
            f"truncation mismatch: {a.truncation} vs {b.truncation}"
        )
    T = a.truncation
    # iterate the sparser factor's support on the outside
    if len(a._support()) > len(b._support()):
        a, b = b, a
    out = [0] * (T + 1)
    bc = b.coeffs
    for i in a._support():
        ai = a.coeffs[i]
        for j in range(T - i + 1):
            bj = bc[j]
            if bj:
                out[i + j] += ai * bj
    return IntPowerSeries(out)


def series_invert(a: IntPowerSeries) -> IntPowerSeries:
    """Exact reciprocal mod q^(T+1); the leading coefficient must be +-1.

    Any other leading coefficient would take the reciprocal outside integer
    coefficients and is rejected.
    """
    a0 = a.coeffs[0]
    if a0 not in (1, -1):
        raise ValueError(
            f"cannot invert over the integers: leading coefficient {a0}"
        )
    T = a.truncation
    support = [i for i in a._support() if i > 0]
    out = [0] * (T + 1)
    out[0] = a0
    ac = a.coeffs
    for n in range(1, T + 1):
        acc = 0
        for i in support:
            if i > n:
                break
            acc += ac[i] * out[n - i]
        out[n] = -a0 * acc
    return IntPowerSeries(out)


def series_pow(a: IntPowerSeries, e: int) -> IntPowerSeries:
    """a**e mod q^(T+1); negative e inverts first (leading coefficient +-1)."""
    if e == 0:
        return one(a.truncation)
    if e < 0:
        return series_pow(series_invert(a), -e)
    result = None
    base = a
    while e:
        if e & 1:
            result = base if result is None else series_mul(result, base)
        e >>= 1
        if e:
            base = series_mul(base, base)
    return result


def series_dilate(
    a: IntPowerSeries, m: int, truncation: int | None = None
) -> IntPowerSeries:
    """Substitute q -> q^m: the coefficient at i moves to m*i.

    The result is truncated at ``truncation`` (default: the source order).
    Source coefficients with m*i beyond the target order are dropped; for
    the result to be exact mod q^(T+1) the source must carry at least
    floor(T/m) coefficients, which is the caller's bookkeeping.
    """
    if m < 1:
        raise ValueError(f"dilation factor must be >= 1, got {m}")
    T = a.truncation if truncation is None else truncation
    out = [0] * (T + 1)
    for i, c in enumerate(a.coeffs):
        if c and m * i <= T:
            out[m * i] = c
    return IntPowerSeries(out)


def exact_coefficients(shape: FrameShape, n_max: int) -> list[int]:
    """The exact integer coefficients d(0..n_max) of the shape's expansion.

    The product over entries (m, e) of the m-dilated Euler series raised to
    e, expanded mod q^(n_max+1).  d(0) is always 1.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    acc = one(n_max)
    for m, e in shape.entries:
        factor = series_dilate(euler_series(n_max // m), m, n_max)
        acc = series_mul(acc, series_pow(factor, e))
    return list(acc.coeffs)


# -- coefficient cache files -------------------------------------------------
#
# Line-oriented text: a header `# etaq <shape string> n0=<p>/<q>` followed by
# `n d(n)` lines in decimal, ascending n from 0 with no gaps.  Files are
# append-only: extending a cache never rewrites existing lines.


class CacheError(ValueError):
    """Malformed or inconsistent coefficient cache file."""


def read_coefficient_cache(path) -> tuple[FrameShape, Fraction, list[int]]:
    """Parse a cache file; returns (shape, n0, coefficients from n = 0)."""
    with open(path, "r", encoding="ascii") as fh:
        header = fh.readline().strip()
        parts = header.split()
        if len(parts) < 3 or parts[0] != "#" or parts[1] != "etaq":
            raise CacheError(f"bad cache header: {header!r}")
        if not parts[-1].startswith("n0="):
            raise CacheError(f"cache header missing n0: {header!r}")
        try:
            num, den = parts[-1][3:].split("/")
            n0 = Fraction(int(num), int(den))
            shape = parse_shape(" ".join(parts[2:-1]))
        except (ValueError, ShapeError) as exc:
            raise CacheError(f"bad cache header: {header!r}") from exc
        coeffs = []
        for line in fh:
            line = line.strip()
            if not line:
                continue
            try:
                n_str, d_str = line.split()
                n, d = int(n_str), int(d_str)
            except ValueError as exc:
                raise CacheError(f"bad cache line: {line!r}") from exc
            if n != len(coeffs):
                raise CacheError(f"cache lines out of order at n={n}")
            coeffs.append(d)
    return shape, n0, coeffs


def write_coefficient_cache(path, shape: FrameShape, coeffs: list[int]) -> None:
    """Create or append-extend a cache file for ``shape``.

    An existing file must carry the same shape and a coefficient prefix that
    matches bit-for-bit; only lines for new n are appended.
    """
    n0 = derive_constants(shape).n0
    header = f"# etaq {format_shape(shape)} n0={n0.numerator}/{n0.denominator}"
    try:
        old_shape, old_n0, old_coeffs = read_coefficient_cache(path)
    except FileNotFoundError:
        with open(path, "w", encoding="ascii") as fh:
            fh.write(header + "\n")
            for n, d in enumerate(coeffs):
                fh.write(f"{n} {d}\n")
        return
    if old_shape != shape or old_n0 != n0:
        raise CacheError(f"cache at {path} belongs to a different shape")
    overlap = min(len(old_coeffs), len(coeffs))
    if old_coeffs[:overlap] != coeffs[:overlap]:
        raise CacheError(f"cache at {path} disagrees with computed coefficients")
    if len(coeffs) > len(old_coeffs):
        with open(path, "a", encoding="ascii") as fh:
            for n in range(len(old_coeffs), len(coeffs)):
                fh.write(f"{n} {coeffs[n]}\n")
