"""Sphere-of-influence graphs computed from first principles.

Every point gets an open L-infinity ball whose radius is the distance to its
nearest other point; the SIG joins two points when their balls meet. All
comparisons are exact (rationals scaled to a common integer denominator).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import kernels
from .errors import DimensionMismatch, DuplicatePoints, InvalidParam
from .geometry import Point
from .tree import Tree, leaf_stats


@dataclass(frozen=True)
class PointSet:
    dimension: int
    labels: tuple
    points: tuple[Point, ...]

    def __post_init__(self):
        if len(self.points) < 2:
            raise InvalidParam(f"a SIG needs at least 2 points, got {len(self.points)}")
        if len(self.labels) != len(self.points):
            raise ValueError("one label per point is required")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("labels must be unique")
        for p in self.points:
            if len(p) != self.dimension:
                raise DimensionMismatch(f"point {p} is not {self.dimension}-dimensional")

    @classmethod
    def from_points(cls, points, labels=None) -> PointSet:
        pts = tuple(tuple(Fraction(x) for x in p) for p in points)
        if labels is None:
            labels = range(len(pts))
        dim = len(pts[0]) if pts else 0
        return cls(dim, tuple(labels), pts)


def _find_duplicate(ps: PointSet):
    seen = {}
    for label, p in zip(ps.labels, ps.points):
        if p in seen:
            raise DuplicatePoints(seen[p], label)
        seen[p] = label


def _scaled_radii(rows) -> list[int]:
    return kernels.nearest_distances(rows)


def nearest_neighbor_radii(ps: PointSet) -> dict:
    """Map each label to the exact distance from its point to the nearest other point."""
    scale, rows, _ = kernels.scale_to_integers(ps.points)
    near = _scaled_radii(rows)
    if min(near) == 0:
        _find_duplicate(ps)
    return {label: Fraction(r, scale) for label, r in zip(ps.labels, near)}


def _sig_indices(rows) -> tuple[list[int], list[tuple[int, int]]]:
    near = _scaled_radii(rows)
    return near, kernels.close_pairs(rows, near)


def sig_graph(ps: PointSet) -> list[tuple]:
    """Edges ``(a, b)`` of the SIG, each pair in label order, sorted."""
    _, rows, _ = kernels.scale_to_integers(ps.points)
    near, pairs = _sig_indices(rows)
    if min(near) == 0:
        _find_duplicate(ps)
    lab = ps.labels
    return sorted(tuple(sorted((lab[i], lab[j]))) for i, j in pairs)


@dataclass
class SigCheck:
    ok: bool
    missing_edges: list[tuple[int, int]] = field(default_factory=list)
    extra_edges: list[tuple[int, int]] = field(default_factory=list)
    radius_mismatches: list[tuple[int, Fraction, Fraction]] = field(default_factory=list)
    duplicate: tuple[int, int] | None = None

    def describe(self, labels=None) -> str:
        name = (lambda v: labels[v]) if labels is not None else (lambda v: v)
        if self.ok:
            return "ok: the point set's SIG is exactly the tree"
        lines = []
        if self.duplicate is not None:
            a, b = self.duplicate
            lines.append(f"DuplicatePoints: vertices {name(a)} and {name(b)} share a position")
        for a, b in self.missing_edges:
            lines.append(f"missing edge {name(a)} {name(b)}")
        for a, b in self.extra_edges:
            lines.append(f"extra edge {name(a)} {name(b)}")
        for v, stored, actual in self.radius_mismatches:
            lines.append(f"radius mismatch at {name(v)}: stored {stored}, nearest-neighbour {actual}")
        return "\n".join(lines)


def is_sig_representation(t: Tree, rep) -> SigCheck:
    """Compare the SIG of ``rep``'s positions with ``t`` and its stored radii."""
    missing_vertices = [v for v in range(t.n) if v not in rep.placements]
    if missing_vertices:
        raise ValueError(f"representation lacks vertices {missing_vertices}")
    positions = [rep.placements[v].position for v in range(t.n)]
    ps = PointSet(rep.dimension, tuple(range(t.n)), tuple(positions))
    scale, rows, _ = kernels.scale_to_integers(ps.points)
    near, pairs = _sig_indices(rows)
    if min(near) == 0:
        try:
            _find_duplicate(ps)
        except DuplicatePoints as exc:
            return SigCheck(False, duplicate=exc.labels)
    found = set(pairs)
    expected = set(t.edges)
    mismatches = []
    for v in range(t.n):
        actual = Fraction(near[v], scale)
        stored = rep.placements[v].radius
        if actual != stored:
            mismatches.append((v, stored, actual))
    missing = sorted(expected - found)
    extra = sorted(found - expected)
    return SigCheck(not (missing or extra or mismatches), missing, extra, mismatches)


def ceil_log2(m: int) -> int:
    """Smallest ``k >= 0`` with ``2**k >= m``, for ``m >= 1``."""
    if m < 1:
        raise InvalidParam(f"ceil_log2 needs m >= 1, got {m}")
    return (m - 1).bit_length()


@dataclass(frozen=True)
class DimensionReport:
    beta: int
    lower: int
    upper: int
    exact: int | None
    ambiguous: bool


def bounds_for_beta(beta: int) -> DimensionReport:
    if beta < 1:
        raise InvalidParam(f"beta must be >= 1, got {beta}")
    lower = ceil_log2(beta + 1)
    upper = ceil_log2(beta + 2)
    ambiguous = lower != upper
    return DimensionReport(beta, lower, upper, None if ambiguous else upper, ambiguous)


def dimension_bounds(t: Tree) -> DimensionReport:
    """Lower/upper bounds on the SIG dimension of ``t`` and the exact value when they meet.

    A single edge has SIG dimension 1 regardless of the formulas.
    """
    report = bounds_for_beta(leaf_stats(t).beta)
    if t.n == 2:
        return DimensionReport(report.beta, report.lower, report.upper, 1, False)
    return report
