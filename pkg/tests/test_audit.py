import json
from dataclasses import replace
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sigdim.audit import CHECK_NAMES, audit
from sigdim.embedding import Representation, embed, embed_star
from sigdim.geometry import linf_distance
from sigdim.sig import is_sig_representation
from sigdim.tree import Kind, gen_caterpillar, gen_h_graph, gen_path, gen_random_tree, gen_star


def corrupt(rep, v, **changes):
    placements = dict(rep.placements)
    placements[v] = replace(placements[v], **changes)
    return Representation(rep.dimension, placements, rep.tree, rep.rooted)


@pytest.mark.parametrize(
    "t", [gen_path(2), gen_path(3), gen_path(60), gen_star(5), gen_h_graph(7), gen_random_tree(200, 11)]
)
def test_clean_embeddings_pass(t):
    report = audit(embed(t))
    assert report.all_pass, report.table()
    assert [c.name for c in report.checks] == list(CHECK_NAMES)


def test_star_audit_includes_volume():
    report = audit(embed(gen_star(5)))
    assert report.all_pass
    assert report.check("leaf-overlap-volume").checked == 5


def test_every_structural_check_runs():
    report = audit(embed(gen_random_tree(300, 4)))
    assert all(c.checked > 0 for c in report.checks)


def test_hand_built_star_gets_graph_checks_only():
    report = audit(embed_star(16))
    assert report.all_pass
    assert report.check("one-corner-inside").checked == 0
    assert report.check("nearest-radius").checked == 17


def test_doubled_radius_is_caught():
    rep = embed(gen_random_tree(40, 9))
    v = 7
    bad = corrupt(rep, v, radius=2 * rep.placements[v].radius)
    report = audit(bad)
    assert not report.all_pass
    fails = report.check("nearest-radius").failures
    assert [f.vertices for f in fails] == [(v,)]
    f = fails[0]
    assert f.lhs == 2 * rep.placements[v].radius and f.rhs == rep.placements[v].radius
    assert not f.holds()


def test_moved_normal_child_is_caught():
    t = gen_random_tree(120, 3)
    rep = embed(t)
    v = next(v for v, k in rep.rooted.kind.items() if k is Kind.NORMAL)
    pv = rep.placements[v]
    j = pv.shift_axis - 1
    bumped = pv.position[:j] + (pv.position[j] + pv.radius / 3,) + pv.position[j + 1:]
    report = audit(corrupt(rep, v, position=bumped))
    fails = report.check("normal-offset").failures
    assert fails and all(f.vertices == (rep.rooted.parent[v], v) for f in fails)


def test_failures_carry_reverifiable_witnesses():
    t = gen_caterpillar(12, 4, 8)
    rep = embed(t)
    rt = rep.rooted
    # shove one leaf onto its sibling's corner: siblings collide and radii shrink
    u = next(u for u in rt.order if len(rt.leaves[u]) >= 2)
    a, b = rt.leaves[u][:2]
    bad = corrupt(rep, b, position=tuple(x + F(1, 10**6) for x in rep.placements[a].position))
    report = audit(bad)
    assert not report.all_pass
    for check in report.checks:
        for f in check.failures:
            assert not f.holds()
    sib = report.check("sibling-superballs-disjoint").failures
    assert sib
    for f in sib:
        v, w = f.vertices
        pv, pw = bad.placements[v], bad.placements[w]
        assert f.lhs == linf_distance(pv.position, pw.position)
        assert f.rhs == pv.super_radius + pw.super_radius


def test_report_serialization():
    report = audit(embed(gen_path(5)))
    data = json.loads(report.to_json())
    assert data["all_pass"] is True
    assert {c["check"] for c in data["checks"]} == set(CHECK_NAMES)
    assert "all checks pass" in report.table()


trees = st.one_of(
    st.builds(gen_random_tree, st.integers(3, 120), st.integers(0, 2**64 - 1)),
    st.builds(gen_caterpillar, st.integers(2, 30), st.integers(0, 7), st.integers(0, 2**32)),
    st.builds(gen_h_graph, st.integers(1, 20)),
)


@settings(max_examples=60, deadline=None)
@given(trees)
def test_audit_passes_on_random_trees(t):
    assert audit(embed(t)).all_pass


@settings(max_examples=60, deadline=None)
@given(trees, st.data())
def test_graph_checks_agree_with_sig_oracle(t, data):
    rep = embed(t)
    if data.draw(st.booleans()):
        v = data.draw(st.integers(0, t.n - 1))
        pos = rep.placements[v].position
        k = data.draw(st.integers(0, rep.dimension - 1))
        step = data.draw(st.fractions(min_value=F(-2), max_value=F(2), max_denominator=64))
        rep = corrupt(rep, v, position=pos[:k] + (pos[k] + step,) + pos[k + 1:])
    if len({p.position for p in rep.placements.values()}) < t.n:
        return
    report = audit(rep)
    check = is_sig_representation(t, rep)
    if report.check("nearest-radius").passed:
        graph_ok = report.check("non-edge-disjoint").passed and not any(
            f.relation == "<" for f in report.check("edge-contact").failures
        )
        assert graph_ok == (not check.missing_edges and not check.extra_edges)
