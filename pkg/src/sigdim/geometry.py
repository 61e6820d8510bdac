"""Exact L-infinity geometry over rationals.

Points are tuples of :class:`fractions.Fraction`. Boxes are open L-infinity
balls, i.e. open axis-aligned hypercubes. Axis arguments are 1-based
(``1..d``) throughout the public API.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatch, NotACorner

Rational = Fraction
Point = tuple[Fraction, ...]
SignVector = tuple[int, ...]


def point(*coords) -> Point:
    return tuple(Fraction(c) for c in coords)


def _check_dims(p, q):
    if len(p) != len(q):
        raise DimensionMismatch(f"dimension {len(p)} vs {len(q)}")


def linf_distance(p: Point, q: Point) -> Fraction:
    _check_dims(p, q)
    return max((abs(a - b) for a, b in zip(p, q)), default=Fraction(0))


@dataclass(frozen=True)
class Box:
    """Open ball ``B(center, radius)`` under the L-infinity metric."""

    center: Point
    radius: Fraction

    def __post_init__(self):
        if self.radius <= 0:
            raise ValueError(f"radius must be positive, got {self.radius}")

    @property
    def dimension(self) -> int:
        return len(self.center)

    def lower(self) -> Point:
        return tuple(c - self.radius for c in self.center)

    def upper(self) -> Point:
        return tuple(c + self.radius for c in self.center)


def sign_vectors(d: int) -> list[SignVector]:
    """All of {-1, +1}^d in lexicographic order with -1 < +1."""
    return list(itertools.product((-1, 1), repeat=d))


def corner(b: Box, signs: SignVector) -> Point:
    _check_dims(b.center, signs)
    return tuple(c + s * b.radius for c, s in zip(b.center, signs))


def corners(b: Box) -> list[tuple[SignVector, Point]]:
    return [(s, corner(b, s)) for s in sign_vectors(b.dimension)]


def corner_signs(b: Box, q: Point) -> SignVector:
    """Sign vector ``S`` with ``q == center + radius * S``.

    Raises:
        NotACorner: if ``q`` is not a corner of ``b``.
    """
    _check_dims(b.center, q)
    signs = []
    for c, x in zip(b.center, q):
        if x == c + b.radius:
            signs.append(1)
        elif x == c - b.radius:
            signs.append(-1)
        else:
            raise NotACorner(f"{q} is not a corner of {b}")
    return tuple(signs)


def edge_other_endpoint(b: Box, q: Point, i: int) -> Point:
    """The corner joined to ``q`` by the box edge along axis ``i`` (1-based)."""
    corner_signs(b, q)
    if not 1 <= i <= b.dimension:
        raise IndexError(f"axis {i} outside 1..{b.dimension}")
    k = i - 1
    return q[:k] + (2 * b.center[k] - q[k],) + q[k + 1:]


def shift(z: Point, j: int, s: int, delta: Fraction) -> Point:
    """Move ``z`` by ``s * delta`` along axis ``j`` (1-based)."""
    if not 1 <= j <= len(z):
        raise IndexError(f"axis {j} outside 1..{len(z)}")
    if s not in (-1, 1):
        raise ValueError(f"sign must be -1 or +1, got {s}")
    k = j - 1
    return z[:k] + (z[k] + s * delta,) + z[k + 1:]


def contains_open(b: Box, x: Point) -> bool:
    return linf_distance(b.center, x) < b.radius


def boxes_intersect_open(a: Box, b: Box) -> bool:
    return linf_distance(a.center, b.center) < a.radius + b.radius


def box_intersection_volume(a: Box, b: Box) -> Fraction:
    _check_dims(a.center, b.center)
    vol = Fraction(1)
    for ca, cb in zip(a.center, b.center):
        overlap = min(ca + a.radius, cb + b.radius) - max(ca - a.radius, cb - b.radius)
        if overlap <= 0:
            return Fraction(0)
        vol *= overlap
    return vol


def format_rational(x: Fraction) -> str:
    """``"num/den"`` in lowest terms, or just ``"num"`` for integers."""
    return str(Fraction(x))


def parse_rational(text: str) -> Fraction:
    if not isinstance(text, str):
        raise TypeError(f"rationals are serialized as strings, got {type(text).__name__}")
    return Fraction(text.replace("−", "-"))
