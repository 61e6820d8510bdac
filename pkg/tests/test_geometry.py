import itertools
import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sigdim.errors import DimensionMismatch, NotACorner
from sigdim.geometry import (
    Box,
    box_intersection_volume,
    boxes_intersect_open,
    contains_open,
    corners,
    edge_other_endpoint,
    format_rational,
    linf_distance,
    parse_rational,
    point,
    shift,
)


def test_linf_distance_examples():
    assert linf_distance(point(0, 0), point(0, 0)) == 0
    assert linf_distance(point(0, 0), point(1, -3)) == 3
    assert linf_distance(point(F(1, 8), 0), point(0, F(1, 2))) == F(1, 2)


def test_linf_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        linf_distance(point(0), point(0, 0))


def test_corners_examples():
    assert corners(Box(point(0), F(1))) == [((-1,), point(-1)), ((1,), point(1))]
    assert [q for _, q in corners(Box(point(0, 0), F(1)))] == [point(-1, -1), point(-1, 1), point(1, -1), point(1, 1)]
    got = [q for _, q in corners(Box(point(1, 1), F(1, 8)))]
    assert got == [point(F(7, 8), F(7, 8)), point(F(7, 8), F(9, 8)), point(F(9, 8), F(7, 8)), point(F(9, 8), F(9, 8))]


def test_edge_other_endpoint():
    b = Box(point(0, 0), F(1))
    assert edge_other_endpoint(b, point(1, 1), 1) == point(-1, 1)
    assert edge_other_endpoint(b, point(1, 1), 2) == point(1, -1)
    small = Box(point(1, 1), F(1, 8))
    assert edge_other_endpoint(small, point(F(9, 8), F(9, 8)), 1) == point(F(7, 8), F(9, 8))
    with pytest.raises(NotACorner):
        edge_other_endpoint(b, point(1, 0), 1)


def test_shift():
    assert shift(point(0, 0), 2, 1, F(1, 16)) == point(0, F(1, 16))
    assert shift(point(1, 1), 1, -1, F(1, 4)) == point(F(3, 4), 1)
    z = point(F(2, 3), 5, -1)
    assert shift(shift(z, 3, 1, F(1, 7)), 3, -1, F(1, 7)) == z


def test_contains_open():
    b = Box(point(0, 0), F(1))
    assert contains_open(b, point(0, 0))
    assert not contains_open(b, point(1, 0))
    assert not contains_open(b, point(F(1, 2), -1))
    assert contains_open(b, point(F(7, 8), F(-7, 8)))
    with pytest.raises(DimensionMismatch):
        contains_open(b, point(0))


def test_boxes_intersect_open():
    assert boxes_intersect_open(Box(point(0, 0), F(1)), Box(point(0, 0), F(1)))
    assert not boxes_intersect_open(Box(point(0), F(1)), Box(point(2), F(1)))
    assert boxes_intersect_open(Box(point(0, 0), F(1)), Box(point(F(3, 2), 0), F(1)))


def test_intersection_volume_examples():
    assert box_intersection_volume(Box(point(0, 0), F(1)), Box(point(0, 0), F(1))) == 4
    assert box_intersection_volume(Box(point(0, 0), F(1)), Box(point(1, 0), F(1))) == 2
    assert box_intersection_volume(Box(point(0, 0), F(1)), Box(point(5, 0), F(1))) == 0


def test_serialization():
    assert format_rational(F(3)) == "3"
    assert format_rational(F(-2, 16)) == "-1/8"
    assert parse_rational("-1/8") == F(-1, 8)
    assert parse_rational("−1/8") == F(-1, 8)
    with pytest.raises(TypeError):
        parse_rational(0.5)


rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
radii = st.fractions(min_value=F(1, 12), max_value=10, max_denominator=12)


def points(d):
    return st.lists(rationals, min_size=d, max_size=d).map(tuple)


@st.composite
def point_triples(draw):
    d = draw(st.integers(1, 4))
    return draw(points(d)), draw(points(d)), draw(points(d))


@st.composite
def box_pairs(draw, max_d=3):
    d = draw(st.integers(1, max_d))
    return Box(draw(points(d)), draw(radii)), Box(draw(points(d)), draw(radii))


@settings(max_examples=300)
@given(point_triples())
def test_linf_is_a_metric(pqr):
    p, q, r = pqr
    assert linf_distance(p, q) >= 0
    assert (linf_distance(p, q) == 0) == (p == q)
    assert linf_distance(p, q) == linf_distance(q, p)
    assert linf_distance(p, r) <= linf_distance(p, q) + linf_distance(q, r)


@settings(max_examples=100)
@given(st.integers(1, 5), st.data())
def test_corners_sit_at_radius(d, data):
    b = Box(data.draw(points(d)), data.draw(radii))
    cs = corners(b)
    assert len(cs) == 2 ** d
    assert len({q for _, q in cs}) == 2 ** d
    assert all(linf_distance(b.center, q) == b.radius for _, q in cs)


@settings(max_examples=300)
@given(box_pairs(max_d=4))
def test_intersect_iff_positive_volume(ab):
    a, b = ab
    assert boxes_intersect_open(a, b) == (box_intersection_volume(a, b) > 0)
    assert box_intersection_volume(a, a) == (2 * a.radius) ** a.dimension


def _cell_count_volume(a, b):
    """Independent oracle: count unit cells of a common grid lying in both boxes."""
    scale = math.lcm(*(x.denominator for box in (a, b) for x in box.center + (box.radius,)))
    per_axis = []
    for ca, cb in zip(a.center, b.center):
        lo = [int((c - r) * scale) for c, r in ((ca, a.radius), (cb, b.radius))]
        hi = [int((c + r) * scale) for c, r in ((ca, a.radius), (cb, b.radius))]
        cells = [k for k in range(min(lo), max(hi)) if all(l <= k and k + 1 <= h for l, h in zip(lo, hi))]
        per_axis.append(len(cells))
    return F(math.prod(per_axis), scale ** len(per_axis))


small = st.fractions(min_value=-3, max_value=3, max_denominator=4)
small_r = st.fractions(min_value=F(1, 4), max_value=2, max_denominator=4)


@settings(max_examples=200)
@given(st.integers(1, 3), st.data())
def test_volume_matches_cell_count(d, data):
    pts = st.lists(small, min_size=d, max_size=d).map(tuple)
    a = Box(data.draw(pts), data.draw(small_r))
    b = Box(data.draw(pts), data.draw(small_r))
    assert box_intersection_volume(a, b) == _cell_count_volume(a, b)


def test_corner_order_is_lexicographic():
    signs = [s for s, _ in corners(Box(point(0, 0, 0), F(1)))]
    assert signs == list(itertools.product((-1, 1), repeat=3))
