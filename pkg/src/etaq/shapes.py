"""Frame shapes: the exponent data defining an eta-quotient.

A frame shape is a finite collection of pairs (m, e) with scale m >= 1 and
nonzero integer exponent e, encoding the product over m of the eta function
rescaled by m and raised to the power e.  Everything else in this package
(exact coefficients, derived constants, series evaluation) is a function of
the shape alone.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Mapping
from math import lcm


class ShapeError(ValueError):
    """Malformed frame shape data or shape string."""


_TOKEN = re.compile(r"^(\d+)(?:\^([+-]?\d+))?$")


class FrameShape:
    """Immutable, canonically ordered map from scale m to exponent.

    Accepts a mapping or an iterable of (m, exponent) pairs.  Scales must be
    >= 1, exponents nonzero, no duplicates, and at least one entry.
    """

    __slots__ = ("entries",)

    entries: tuple[tuple[int, int], ...]

    def __init__(self, entries: Mapping[int, int] | Iterable[tuple[int, int]]):
        if isinstance(entries, Mapping):
            items = list(entries.items())
        else:
            items = list(entries)
        if not items:
            raise ShapeError("frame shape must have at least one entry")
        seen: dict[int, int] = {}
        for m, e in items:
            m = int(m)
            e = int(e)
            if m < 1:
                raise ShapeError(f"scale must be a positive integer, got {m}")
            if e == 0:
                raise ShapeError(f"exponent for scale {m} must be nonzero")
            if m in seen:
                raise ShapeError(f"duplicate scale {m}")
            seen[m] = e
        object.__setattr__(self, "entries", tuple(sorted(seen.items())))

    def __setattr__(self, name, value):
        raise AttributeError("FrameShape is immutable")

    @property
    def support(self) -> tuple[int, ...]:
        """The scales with nonzero exponent, ascending."""
        return tuple(m for m, _ in self.entries)

    @property
    def period(self) -> int:
        """lcm of the support; the common period of the derived tables."""
        return lcm(*self.support)

    def exponent(self, m: int) -> int:
        """Exponent at scale m (0 when m is outside the support)."""
        return dict(self.entries).get(m, 0)

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other):
        return isinstance(other, FrameShape) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"FrameShape({dict(self.entries)!r})"

    def __str__(self):
        return format_shape(self)


def parse_shape(text: str) -> FrameShape:
    """Parse the whitespace-separated ``m^e`` grammar into a FrameShape.

    A bare ``m`` token means ``m^1``.  Duplicate scales, zero exponents,
    nonpositive scales, and empty input are rejected.
    """
    tokens = text.split()
    if not tokens:
        raise ShapeError("empty frame-shape string")
    pairs = []
    for tok in tokens:
        match = _TOKEN.match(tok)
        if match is None:
            raise ShapeError(f"bad token {tok!r}; expected 'm' or 'm^e'")
        m = int(match.group(1))
        e = int(match.group(2)) if match.group(2) is not None else 1
        if m < 1:
            raise ShapeError(f"scale must be >= 1 in token {tok!r}")
        pairs.append((m, e))
    scales = [m for m, _ in pairs]
    if len(set(scales)) != len(scales):
        raise ShapeError(f"duplicate scale in {text!r}")
    return FrameShape(pairs)


def format_shape(shape: FrameShape) -> str:
    """Canonical text form, e.g. ``1^-3 4^1``; parse_shape round-trips it."""
    return " ".join(f"{m}^{e}" for m, e in shape.entries)
