"""JSON and text formats for representations, point sets and edge lists.

Representation JSON::

    {"dimension": d,
     "vertices": [{"id": 7, "position": ["1", "-1/8"], "radius": "1/8",
                   "super_radius": "1/4", "shift_axis": null,
                   "attached_corner": [1, -1], "attached_edge_axis": null}, ...]}

Rationals are strings in lowest terms. ``id`` is the vertex label from the
tree file. A point set file has the same shape; only ``id`` and ``position``
are read from it.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .embedding import Placement, Representation
from .errors import ParseError
from .geometry import format_rational, parse_rational
from .sig import PointSet
from .tree import Tree, build_special_rooted_tree


def representation_to_dict(rep: Representation) -> dict:
    labels = rep.tree.labels
    vertices = []
    for v in range(rep.tree.n):
        p = rep.placements[v]
        vertices.append(
            {
                "id": labels[v],
                "position": [format_rational(x) for x in p.position],
                "radius": format_rational(p.radius),
                "super_radius": format_rational(p.super_radius),
                "shift_axis": p.shift_axis,
                "attached_corner": list(p.attached_corner) if p.attached_corner is not None else None,
                "attached_edge_axis": p.attached_edge_axis,
            }
        )
    return {"dimension": rep.dimension, "vertices": vertices}


def representation_to_json(rep: Representation, compact: bool = False) -> str:
    if compact:
        return json.dumps(representation_to_dict(rep), separators=(",", ":"))
    return json.dumps(representation_to_dict(rep), indent=2)


def _load(text: str) -> dict:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict) or "vertices" not in data or "dimension" not in data:
        raise ParseError("expected an object with 'dimension' and 'vertices'")
    if not isinstance(data["dimension"], int) or data["dimension"] < 1:
        raise ParseError("'dimension' must be a positive integer")
    if not isinstance(data["vertices"], list):
        raise ParseError("'vertices' must be a list")
    return data


def _rational(value, what) -> Fraction:
    try:
        return parse_rational(value)
    except (TypeError, ValueError, ZeroDivisionError):
        raise ParseError(f"{what}: not a rational string: {value!r}") from None


def _position(entry, dim) -> tuple[Fraction, ...]:
    pos = entry.get("position")
    if not isinstance(pos, list) or len(pos) != dim:
        raise ParseError(f"vertex {entry.get('id')!r}: position must be a list of {dim} rationals")
    return tuple(_rational(x, f"vertex {entry.get('id')!r} position") for x in pos)


def representation_from_json(text: str, tree: Tree) -> Representation:
    """Rebuild a representation of ``tree`` from JSON text.

    Raises:
        ParseError: malformed JSON, or ids that do not match the tree's vertices.
    """
    data = _load(text)
    dim = data["dimension"]
    index = {lab: i for i, lab in enumerate(tree.labels)}
    placements = {}
    for entry in data["vertices"]:
        if not isinstance(entry, dict) or "id" not in entry:
            raise ParseError("every vertex entry needs an 'id'")
        label = entry["id"]
        if label not in index:
            raise ParseError(f"vertex id {label!r} does not occur in the tree")
        v = index[label]
        if v in placements:
            raise ParseError(f"vertex id {label!r} appears twice")
        radius = _rational(entry.get("radius"), f"vertex {label!r} radius")
        if radius <= 0:
            raise ParseError(f"vertex {label!r}: radius must be positive")
        sup = entry.get("super_radius")
        corner = entry.get("attached_corner")
        placements[v] = Placement(
            position=_position(entry, dim),
            radius=radius,
            super_radius=_rational(sup, f"vertex {label!r} super_radius") if sup is not None else 2 * radius,
            shift_axis=entry.get("shift_axis"),
            attached_corner=tuple(corner) if corner is not None else None,
            attached_edge_axis=entry.get("attached_edge_axis"),
        )
    missing = [tree.labels[v] for v in range(tree.n) if v not in placements]
    if missing:
        raise ParseError(f"no placement for vertices {missing}")
    return Representation(dim, placements, tree, build_special_rooted_tree(tree))


def pointset_from_json(text: str) -> PointSet:
    data = _load(text)
    dim = data["dimension"]
    labels = []
    points = []
    for entry in data["vertices"]:
        if not isinstance(entry, dict) or "id" not in entry:
            raise ParseError("every vertex entry needs an 'id'")
        labels.append(entry["id"])
        points.append(_position(entry, dim))
    if len(set(labels)) != len(labels):
        raise ParseError("point ids must be unique")
    if len(points) < 2:
        raise ParseError(f"a SIG needs at least 2 points, got {len(points)}")
    return PointSet(dim, tuple(labels), tuple(points))


def pointset_to_json(ps: PointSet, compact: bool = False) -> str:
    data = {
        "dimension": ps.dimension,
        "vertices": [
            {"id": lab, "position": [format_rational(x) for x in p]} for lab, p in zip(ps.labels, ps.points)
        ],
    }
    return json.dumps(data, separators=(",", ":")) if compact else json.dumps(data, indent=2)


def edges_to_text(edges) -> str:
    return "".join(f"{a} {b}\n" for a, b in edges)
