"""Exact, mechanical audit of the geometric facts an embedding must satisfy.

Each check reduces set containment or disjointness of L-infinity balls to a
centre-distance inequality: ``B(p, r)`` lies in ``B(q, R)`` iff
``dist(p, q) + r <= R``, and two open balls are disjoint iff
``dist(p, q) >= r + R``. Everything runs on coordinates scaled to a common
integer denominator, so no comparison is ever rounded.

Check names and what they assert:

``normal-offset``
    a normal child sits at distance ``r(u) + r(v)/2`` from its parent.
``reserved-corner``
    no leaf or pseudo-leaf child occupies the corner normal children hang from.
``one-corner-inside``
    a leaf or pseudo-leaf child has exactly one corner inside the parent
    ball, the one pointing back at the parent.
``two-corners-inside``
    a normal child has exactly two corners inside the parent ball, forming
    an edge along the attachment axis.
``free-corners``
    a pseudo-leaf has more than ``beta`` corners outside its parent ball, a
    normal vertex at least ``beta``.
``sibling-superballs-disjoint``, ``child-superball-nested``,
``descendant-ball-contained``, ``grandchild-separated``
    the super-ball nesting that keeps different subtrees apart.
``non-edge-disjoint``, ``edge-contact``
    balls of non-adjacent vertices are disjoint; adjacent ones meet, at
    distance at least the larger radius.
``nearest-radius``
    each stored radius equals the true nearest-neighbour distance.
``leaf-overlap-volume``
    a leaf's SIG ball overlaps its neighbour's in volume at least
    ``r_neighbour ** d``.
"""

from __future__ import annotations

import json
import operator
from dataclasses import dataclass, field
from fractions import Fraction

from . import kernels
from .errors import DuplicatePoints
from .geometry import Box, box_intersection_volume
from .sig import PointSet, nearest_neighbor_radii
from .tree import Kind, leaf_stats

RELATIONS = {
    "<": operator.lt,
    "<=": operator.le,
    "==": operator.eq,
    "!=": operator.ne,
    ">=": operator.ge,
    ">": operator.gt,
}

CHECK_NAMES = (
    "normal-offset",
    "reserved-corner",
    "one-corner-inside",
    "two-corners-inside",
    "free-corners",
    "sibling-superballs-disjoint",
    "child-superball-nested",
    "descendant-ball-contained",
    "grandchild-separated",
    "non-edge-disjoint",
    "edge-contact",
    "nearest-radius",
    "leaf-overlap-volume",
)


@dataclass(frozen=True)
class Failure:
    """A violated requirement ``lhs <relation> rhs`` at the given vertices."""

    vertices: tuple[int, ...]
    lhs: Fraction
    relation: str
    rhs: Fraction
    note: str = ""

    def holds(self) -> bool:
        """Re-evaluate the required inequality; False for a genuine failure."""
        return RELATIONS[self.relation](self.lhs, self.rhs)


@dataclass
class CheckResult:
    name: str
    checked: int = 0
    failures: list[Failure] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


@dataclass
class AuditReport:
    checks: list[CheckResult]

    @property
    def all_pass(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self, labels=None) -> dict:
        name = (lambda v: labels[v]) if labels is not None else (lambda v: v)
        return {
            "all_pass": self.all_pass,
            "checks": [
                {
                    "check": c.name,
                    "checked": c.checked,
                    "pass": c.passed,
                    "failures": [
                        {
                            "vertices": [name(v) for v in f.vertices],
                            "lhs": str(f.lhs),
                            "relation": f.relation,
                            "rhs": str(f.rhs),
                            "note": f.note,
                        }
                        for f in c.failures
                    ],
                }
                for c in self.checks
            ],
        }

    def to_json(self, labels=None, compact=False) -> str:
        return json.dumps(self.to_dict(labels), indent=None if compact else 2)

    def table(self, labels=None, max_failures=5) -> str:
        name = (lambda v: labels[v]) if labels is not None else (lambda v: v)
        width = max(len(c.name) for c in self.checks)
        lines = [f"{'check':<{width}}  {'checked':>8}  result"]
        for c in self.checks:
            lines.append(f"{c.name:<{width}}  {c.checked:>8}  {'PASS' if c.passed else 'FAIL'}")
            for f in c.failures[:max_failures]:
                who = ",".join(str(name(v)) for v in f.vertices)
                extra = f" ({f.note})" if f.note else ""
                lines.append(f"    at {who}: need {f.lhs} {f.relation} {f.rhs}{extra}")
            if len(c.failures) > max_failures:
                lines.append(f"    ... {len(c.failures) - max_failures} more")
        lines.append("all checks pass" if self.all_pass else "AUDIT FAILED")
        return "\n".join(lines)


class _Scaled:
    """Integer view of a representation: coordinates and radii times ``scale``."""

    def __init__(self, rep):
        n = rep.tree.n
        pl = [rep.placements[v] for v in range(n)]
        radii = [p.radius for p in pl] + [p.super_radius for p in pl]
        self.scale, self.rows, scaled = kernels.scale_to_integers([p.position for p in pl], radii)
        self.r = scaled[:n]
        self.R = scaled[n:]
        self.d = rep.dimension

    def frac(self, x: int) -> Fraction:
        return Fraction(x, self.scale)

    def distances(self, pairs):
        if not pairs:
            return []
        left, right = zip(*pairs)
        return kernels.pair_distances(self.rows, list(left), list(right))


def _require(result, vertices, lhs, relation, rhs, note="", scale=None):
    """Record one comparison. With ``scale``, ``lhs``/``rhs`` are scaled integers."""
    result.checked += 1
    if RELATIONS[relation](lhs, rhs):
        return True
    if scale is not None:
        lhs, rhs = Fraction(lhs, scale), Fraction(rhs, scale)
    result.failures.append(Failure(tuple(vertices), Fraction(lhs), relation, Fraction(rhs), note))
    return False


def _require_all(result, keys, lhs, relation, rhs, scale, note=""):
    """Bulk :func:`_require` over parallel lists of scaled integers."""
    op = RELATIONS[relation]
    result.checked += len(keys)
    for k, a, b in zip(keys, lhs, rhs):
        if not op(a, b):
            result.failures.append(Failure(tuple(k), Fraction(a, scale), relation, Fraction(b, scale), note))


def _inside_signs(child_row, r_child, parent_row, r_parent):
    """Per-axis signs ``s`` with ``child + s*r_child`` strictly inside the parent slab."""
    allowed = []
    for c, p in zip(child_row, parent_row):
        allowed.append(tuple(s for s in (-1, 1) if abs(c + s * r_child - p) < r_parent))
    return allowed


def _corner_checks(rep, sc: _Scaled, results, beta):
    rt = rep.rooted
    one = results["one-corner-inside"]
    two = results["two-corners-inside"]
    free = results["free-corners"]
    offset = results["normal-offset"]
    reserved = results["reserved-corner"]
    n_corners = 2 ** sc.d
    for v in rt.order[1:]:
        u = rt.parent[v]
        pv, pu, rv, ru = sc.rows[v], sc.rows[u], sc.r[v], sc.r[u]
        normal = rt.kind[v] is Kind.NORMAL
        target = two if normal else one
        diff = [a - b for a, b in zip(pv, pu)]
        zero_axes = sum(1 for x in diff if x == 0)
        if not _require(target, (u, v), Fraction(zero_axes), "==", Fraction(0), "axes where child and parent coincide"):
            continue
        s1 = tuple(1 if x > 0 else -1 for x in diff)
        allowed = _inside_signs(pv, rv, pu, ru)
        count = 1
        for a in allowed:
            count *= len(a)

        if normal:
            meta = rep.placements[v]
            _require(two, (u, v), Fraction(count), "==", Fraction(2), "corners of B(child) inside B(parent)")
            short = [k for k, x in enumerate(diff) if abs(x) < ru]
            if _require(two, (u, v), Fraction(len(short)), "==", Fraction(1), "axes with |offset| < r(parent)"):
                l = short[0]
                # inside corners: -S1, and S'' which agrees with S1 only on axis l
                expected = [(-1, 1) if k == l else (-s1[k],) for k in range(sc.d)]
                ok = [tuple(sorted(a)) for a in allowed] == expected
                _require(two, (u, v), Fraction(int(ok)), "==", Fraction(1), "inside corners are -S1 and S'' along the attachment edge")
                if meta.attached_edge_axis is not None:
                    _require(two, (u, v), Fraction(meta.attached_edge_axis), "==", Fraction(l + 1), "recorded edge axis")
                if meta.attached_corner is not None:
                    _require(two, (u, v), Fraction(int(tuple(meta.attached_corner) == s1)), "==", Fraction(1), "recorded attachment corner")
            if meta.shift_axis is not None and meta.attached_edge_axis is not None:
                _require(two, (u, v), Fraction(meta.shift_axis), "!=", Fraction(meta.attached_edge_axis), "shift axis vs edge axis")
            dist = max(abs(x) for x in diff)
            _require(offset, (u, v), 2 * dist, "==", 2 * ru + rv, "2*dist vs 2*r(parent) + r(child)", sc.scale)
            if meta.shift_axis is not None:
                j = meta.shift_axis - 1
                _require(offset, (u, v), abs(diff[j]), "==", dist, "distance attained on the shift axis", sc.scale)
        else:
            _require(one, (u, v), Fraction(count), "==", Fraction(1), "corners of B(child) inside B(parent)")
            at_corner = all(abs(x) == ru for x in diff)
            _require(one, (u, v), Fraction(int(at_corner)), "==", Fraction(1), "child sits on a corner of B(parent)")
            if count == 1:
                got = tuple(a[0] for a in allowed)
                _require(one, (u, v), Fraction(int(got == tuple(-s for s in s1))), "==", Fraction(1), "inside corner is p(child) - S1*r(child)")

        if rt.children[v]:
            outside = n_corners - count
            if normal:
                _require(free, (v,), Fraction(outside), ">=", Fraction(beta), "normal vertex")
            else:
                _require(free, (v,), Fraction(outside), ">", Fraction(beta), "pseudo-leaf")

    for u in rt.order[1:]:
        normal = rt.normal[u]
        if not normal:
            continue
        pu, ru = sc.rows[u], sc.r[u]
        hubs = {tuple(1 if a > b else -1 for a, b in zip(sc.rows[v], pu)) for v in normal}
        used = {tuple(p + s * ru for p, s in zip(pu, signs)) for signs in hubs}
        for y in rt.non_normal_children(u):
            _require(reserved, (u, y), Fraction(int(sc.rows[y] in used)), "==", Fraction(0), "child placed on the attachment corner")


def _superball_checks(rep, sc: _Scaled, results):
    rt = rep.rooted
    r, R = sc.r, sc.R

    sib = results["sibling-superballs-disjoint"]
    pairs = []
    for u in rt.order:
        kids = rt.children[u]
        pairs.extend((kids[a], kids[b]) for a in range(len(kids)) for b in range(a + 1, len(kids)))
    _require_all(sib, pairs, sc.distances(pairs), ">=", [R[v] + R[w] for v, w in pairs], sc.scale)

    nest = results["child-superball-nested"]
    pairs = [(rt.parent[v], v) for v in rt.order[1:]]
    for (u, v), dist in zip(pairs, sc.distances(pairs)):
        # leaf children touch the parent's super-ball boundary from inside
        rel = "<=" if rt.is_leaf(v) else "<"
        _require(nest, (u, v), dist + R[v], rel, R[u], scale=sc.scale)

    desc = results["descendant-ball-contained"]
    grand = results["grandchild-separated"]
    pairs = []
    gpairs = []
    for v in rt.order[1:]:
        a = rt.parent[v]
        hops = 1
        while True:
            pairs.append((a, v))
            if hops == 2:
                gpairs.append((a, v))
            if a == rt.root:
                break
            a = rt.parent[a]
            hops += 1
    dists = sc.distances(pairs)
    _require_all(desc, pairs, [x + r[v] for x, (_, v) in zip(dists, pairs)], "<=", [R[a] for a, _ in pairs], sc.scale)
    for (a, w), dist in zip(gpairs, sc.distances(gpairs)):
        _require(grand, (a, w), dist, ">=", r[a] + R[w], scale=sc.scale)


def _graph_checks(rep, sc: _Scaled, results):
    t = rep.tree
    frac = sc.frac
    r = sc.r
    non_edge = results["non-edge-disjoint"]
    contact = results["edge-contact"]
    close = set(kernels.close_pairs(sc.rows, r))
    n = t.n
    non_edge.checked += n * (n - 1) // 2 - len(t.edges)
    bad = sorted(p for p in close if p not in t.edges)
    for (u, v), dist in zip(bad, sc.distances(bad)):
        non_edge.failures.append(Failure((u, v), frac(dist), ">=", frac(r[u] + r[v]), "balls of non-adjacent vertices meet"))
    edges = sorted(t.edges)
    for (u, v), dist in zip(edges, sc.distances(edges)):
        _require(contact, (u, v), dist, "<", r[u] + r[v], "adjacent balls meet", sc.scale)
        _require(contact, (u, v), dist, ">=", max(r[u], r[v]), "distance at least the larger radius", sc.scale)


def _radius_checks(rep, results):
    t = rep.tree
    nearest = results["nearest-radius"]
    volume = results["leaf-overlap-volume"]
    positions = tuple(rep.placements[v].position for v in range(t.n))
    try:
        sig_r = nearest_neighbor_radii(PointSet(rep.dimension, tuple(range(t.n)), positions))
    except DuplicatePoints as exc:
        a, b = exc.labels
        nearest.checked += 1
        nearest.failures.append(Failure((a, b), Fraction(0), ">", Fraction(0), "duplicate positions"))
        return
    for v in range(t.n):
        _require(nearest, (v,), rep.placements[v].radius, "==", sig_r[v], "stored radius vs nearest-neighbour distance")
    d = rep.dimension
    for y in range(t.n):
        if not t.is_leaf(y):
            continue
        (z,) = t.adjacency[y]
        vol = box_intersection_volume(Box(positions[y], sig_r[y]), Box(positions[z], sig_r[z]))
        _require(volume, (y, z), vol, ">=", sig_r[z] ** d, "overlap volume vs r_neighbour^d")


def audit(rep) -> AuditReport:
    """Run every check on ``rep`` and collect exact witnesses for failures.

    Structural checks need ``rep.rooted``; representations without one (for
    instance hand-built star embeddings) get only the graph-level checks.
    """
    results = {name: CheckResult(name) for name in CHECK_NAMES}
    sc = _Scaled(rep)
    if rep.rooted is not None:
        beta = leaf_stats(rep.tree).beta
        _corner_checks(rep, sc, results, beta)
        _superball_checks(rep, sc, results)
    _graph_checks(rep, sc, results)
    _radius_checks(rep, results)
    return AuditReport([results[name] for name in CHECK_NAMES])
