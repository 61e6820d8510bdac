"""Constructive SIG representations of trees under the L-infinity metric.

:func:`embed` places every vertex of a tree in ``ceil(log2(beta + 2))``
dimensions. The root of the special rooted tree sits at the origin with
radius 1 and its only child at the all-ones corner. Every other internal
vertex ``u`` hands its leaf (or pseudo-leaf) children the corners of its ball
that lie outside the parent's ball. Its normal children go on one edge of the
ball, nudged off the edge along a second axis. All coordinates are exact
rationals, so the result can be checked without tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InternalInvariantViolation, InvalidParam
from .geometry import (
    Box,
    Point,
    SignVector,
    contains_open,
    corner,
    corners,
    edge_other_endpoint,
    shift,
)
from .tree import Kind, RootedTree, Tree, build_special_rooted_tree, gen_star, leaf_stats


@dataclass(frozen=True)
class Placement:
    position: Point
    radius: Fraction
    super_radius: Fraction
    shift_axis: int | None = None
    attached_corner: SignVector | None = None
    attached_edge_axis: int | None = None


@dataclass(frozen=True)
class Representation:
    dimension: int
    placements: dict[int, Placement]
    tree: Tree
    rooted: RootedTree | None = None

    def positions(self) -> list[Point]:
        return [self.placements[v].position for v in range(self.tree.n)]

    def radii(self) -> list[Fraction]:
        return [self.placements[v].radius for v in range(self.tree.n)]


def target_dimension(beta: int) -> int:
    """``ceil(log2(beta + 2))`` via integer bit length."""
    if beta < 1:
        raise InvalidParam(f"beta must be >= 1, got {beta}")
    return (beta + 1).bit_length()


def _embed_single_edge(t: Tree) -> Representation:
    rooted = build_special_rooted_tree(t)
    one = Fraction(1)
    placements = {
        rooted.root: Placement((Fraction(0),), one, 2 * one),
        rooted.children[rooted.root][0]: Placement((one,), one, one, attached_corner=(1,)),
    }
    return Representation(1, placements, t, rooted)


def embed(t: Tree) -> Representation:
    """Build an exact SIG representation of ``t``.

    Raises:
        InternalInvariantViolation: when a vertex finds no free corner. This
            cannot happen for a correct implementation.
    """
    if t.n == 2:
        return _embed_single_edge(t)
    rt = build_special_rooted_tree(t)
    d = target_dimension(leaf_stats(t).beta)

    pos: dict[int, Point] = {}
    rad: dict[int, Fraction] = {}
    shift_axis: dict[int, int] = {}
    attached: dict[int, SignVector] = {}
    edge_axis: dict[int, int] = {}

    root = rt.root
    (top,) = rt.children[root]
    pos[root] = (Fraction(0),) * d
    rad[root] = Fraction(1)
    pos[top] = (Fraction(1),) * d
    rad[top] = rad[root] / (8 * (len(rt.normal[root]) + 1))
    attached[top] = (1,) * d

    for u in rt.order[1:]:
        kids = rt.children[u]
        if not kids:
            continue
        normal = rt.normal[u]
        t_count = len(normal)
        ru = rad[u]
        for y in kids:
            rad[y] = ru if rt.is_leaf(y) else ru / (8 * (t_count + 1))

        ball = Box(pos[u], ru)
        parent_ball = Box(pos[rt.parent[u]], rad[rt.parent[u]])
        outside = [(s, q) for s, q in corners(ball) if not contains_open(parent_ball, q)]
        others = rt.non_normal_children(u)
        if len(outside) < len(others):
            raise InternalInvariantViolation(
                u, f"{len(others)} non-normal children but only {len(outside)} free corners"
            )
        for y, (s, q) in zip(others, outside):
            pos[y] = q
            attached[y] = s
        if not normal:
            continue

        if rt.kind[u] is Kind.PSEUDO_LEAF:
            free = outside[len(others):]
            if not free:
                raise InternalInvariantViolation(u, "no corner left for the normal children")
            signs, q = free[0]
            l, j = 1, 2
        else:
            signs = tuple(-s for s in attached[u])
            q = corner(ball, signs)
            if not contains_open(parent_ball, q):
                raise InternalInvariantViolation(u, "antipodal corner is not inside the parent ball")
            l = shift_axis[u]
            j = 1 if l != 1 else 2

        q_far = edge_other_endpoint(ball, q, l)
        nudge = ru / (16 * (t_count + 1))
        for i, child in enumerate(normal, 1):
            step = (ru / 2) * (1 + Fraction(i, t_count + 1)) / (2 * ru)
            on_edge = tuple(a + step * (b - a) for a, b in zip(q, q_far))
            pos[child] = shift(on_edge, j, signs[j - 1], nudge)
            shift_axis[child] = j
            attached[child] = signs
            edge_axis[child] = l

    placements = {}
    for v in range(t.n):
        r = rad[v]
        placements[v] = Placement(
            position=pos[v],
            radius=r,
            super_radius=r if rt.is_leaf(v) else 2 * r,
            shift_axis=shift_axis.get(v),
            attached_corner=attached.get(v),
            attached_edge_axis=edge_axis.get(v),
        )
    return Representation(d, placements, t, rt)


def embed_star(m: int) -> Representation:
    """Center at the origin, the ``m`` leaves on distinct corners of ``B(0, 1)``.

    Uses ``max(1, ceil(log2 m))`` dimensions, one fewer than :func:`embed`
    would when ``m`` is a power of two.
    """
    if m < 1:
        raise InvalidParam(f"star needs m >= 1, got {m}")
    t = gen_star(m)
    one = Fraction(1)
    if m == 1:
        placements = {0: Placement((Fraction(0),), one, 2 * one), 1: Placement((one,), one, one, attached_corner=(1,))}
        return Representation(1, placements, t)
    d = max(1, (m - 1).bit_length())
    center = Box((Fraction(0),) * d, one)
    placements = {0: Placement(center.center, one, 2 * one)}
    for leaf, (s, q) in zip(range(1, m + 1), corners(center)):
        placements[leaf] = Placement(q, one, one, attached_corner=s)
    return Representation(d, placements, t)
