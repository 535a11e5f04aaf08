import math

import numpy as np
import pytest

from tsglab.actions import Model, VertexAction, build, plan
from tsglab.edges import (
    ArcAssignmentError,
    assign_arcs,
    check_h1,
    check_h3,
    check_h4,
    check_h5,
    full_report,
    required_pairs,
)
from tsglab.geometry import ModelConfig, Realization, realize, representation
from tsglab.perm import GroupAction, Permutation, closure, from_cycles, standard_group

S4 = standard_group("S4")

REFERENCES = ([("S4", m) for m in (24, 4, 8, 12, 20, 28)]
              + [("A5", m) for m in (60, 61, 5, 20, 80)]
              + [("A4", m) for m in (16, 13, 17)])


@pytest.fixture(scope="module")
def realized():
    out = {}
    for g, m in REFERENCES:
        p = plan(g, m)
        va = build(p)
        out[(g, m)] = (va, realize(p, va))
    return out


# ------------------------------------------------------------ required pairs


def test_s4_4_pairs_are_the_tetrahedron_edges(realized):
    va, _ = realized[("S4", 4)]
    assert len(required_pairs(va)) == 6


def test_free_only_plans_have_no_pinned_pairs(realized):
    for key in (("S4", 24), ("A5", 60)):
        va, _ = realized[key]
        assert required_pairs(va) == []


def test_a5_80_pairs_are_same_edge_points(realized):
    va, _ = realized[("A5", 80)]
    pairs = required_pairs(va)
    assert len(pairs) == 10
    # both members of each pair carry the simplex-edge label
    for u, v in pairs:
        assert va.labels[u] == va.labels[v] == "simplex_edge"


def test_s4_8_pairs_join_twin_tetra_vertices(realized):
    va, _ = realized[("S4", 8)]
    assert len(required_pairs(va)) == 4


# ------------------------------------------------------------------- arcs


@pytest.mark.parametrize("key,count", [
    (("S4", 4), 6), (("S4", 8), 4), (("S4", 12), 6), (("S4", 20), 10),
    (("A5", 5), 10), (("A5", 20), 10), (("A5", 80), 10), (("A4", 17), 4),
])
def test_arc_counts(realized, key, count):
    va, r = realized[key]
    arcs = assign_arcs(va, r)
    assert len(arcs) == count


def test_arc_endpoints_are_pair_coordinates(realized):
    va, r = realized[("S4", 12)]
    for (u, v), arc in assign_arcs(va, r).items():
        ends = {0.0: r.coords[u], 1.0: r.coords[v]}
        for s, target in ends.items():
            assert np.linalg.norm(arc.point_at(s) - target) < 1e-8


def test_arc_interiors_vertex_free(realized):
    for key in (("S4", 20), ("A5", 80), ("A4", 17)):
        va, r = realized[key]
        for arc in assign_arcs(va, r).values():
            for v in range(r.m):
                if v in arc.pair:
                    continue
                assert not arc.interior_contains_point(r.coords[v], margin=1e-9)


def test_arc_assignment_is_equivariant_as_pair_map(realized):
    va, r = realized[("A5", 20)]
    arcs = assign_arcs(va, r)
    for f in va.action.group.elements:
        img = va.action.act[f].images
        for (u, v) in arcs:
            x, y = sorted((img[u], img[v]))
            assert (x, y) in arcs


# -------------------------------------------------------------- hypotheses


@pytest.mark.parametrize("key", REFERENCES)
def test_all_references_pass_everything(realized, key):
    va, r = realized[key]
    rep = full_report(va, r)
    assert rep.overall, (key, rep.details)


def test_h1_vacuous_for_unique_fixer(realized):
    va, r = realized[("S4", 4)]
    assert check_h1(va, r)


def test_h3_arc_fixed_by_edge_reversing_involution(realized):
    va, r = realized[("S4", 12)]
    arcs = assign_arcs(va, r)
    (u, v), arc = next(iter(arcs.items()))
    # some involution swaps u and v; it must map the arc onto itself
    swappers = [e for e in S4.elements
                if va.action.act[e].images[u] == v and va.action.act[e].images[v] == u]
    assert swappers
    for f in swappers:
        assert np.linalg.norm(r.rep[f] @ arc.midpoint - arc.midpoint) < 1e-8


def test_h4_on_natural_a5(realized):
    va, r = realized[("A5", 5)]
    assert check_h4(va)


def test_h5_transposition_circles_unshared(realized):
    va, r = realized[("S4", 12)]
    assert check_h5(va, r)


# ------------------------------------------------------- corrupted fixtures


def test_fixture_wrong_circle_vertex_fails(realized):
    va, r = realized[("S4", 12)]
    bad_coords = r.coords.copy()
    # drag one edge vertex onto a different transposition's circle
    other = next(e for e in S4.elements if e.order() == 2 and not e.is_even()
                 and not r.circle_of(e).contains(bad_coords[0], 1e-6))
    bad_coords[0] = r.circle_of(other).point_at(0.37)
    bad = Realization(r.plan, va, r.model, r.config, r.rep, bad_coords)
    report = full_report(va, bad)
    assert not report.h2
    assert not report.overall
    assert "arc_error" in report.details


def test_fixture_midpoint_parameter_rejected():
    with pytest.raises(ValueError, match="midpoint"):
        ModelConfig(t=0.5)


def _interchanger_fixes_three_action() -> VertexAction:
    # natural S4 on 4 letters plus 3 global fixed points: any transposition
    # swaps a pair while fixing 2 + 3 = 5 > 2 vertices
    act = {}
    for e in S4.elements:
        act[e] = Permutation(tuple(e.images) + (4, 5, 6))
    ga = GroupAction(S4, 7, act)
    return VertexAction(ga, ("nat",) * 4 + ("pin",) * 3, ())


def test_fixture_interchanger_fixing_three_fails_h4():
    va = _interchanger_fixes_three_action()
    assert not check_h4(va)


def _pair_at_circle_intersection() -> tuple[VertexAction, Realization]:
    # two vertices at the poles: even elements fix both, odd ones swap them;
    # the pair is pinned by elements with different circles, breaking h1
    reg = {e: i for i, e in enumerate(S4.elements)}
    act = {}
    for e in S4.elements:
        first = (0, 1) if e.is_even() else (1, 0)
        rest = tuple(2 + reg[e * x] for x in S4.elements)
        act[e] = Permutation(first + rest)
    ga = GroupAction(S4, 26, act)
    va = VertexAction(ga, ("pole",) * 2 + ("free",) * 24, ())
    rep = representation(S4, Model.TETRA_FULL)
    rng = np.random.default_rng(2)
    base = rng.standard_normal(4)
    base /= np.linalg.norm(base)
    coords = np.vstack([[0, 0, 0, 1.0], [0, 0, 0, -1.0]] + [rep[x] @ base for x in S4.elements])
    return va, Realization(None, va, Model.TETRA_FULL, ModelConfig(), rep, coords)


def test_fixture_pair_at_intersection_fails_h1():
    va, r = _pair_at_circle_intersection()
    assert not check_h1(va, r)
    report = full_report(va, r)
    assert not report.overall


# ------------------------------------------------- h4 reduction soundness


def _embeds_in_proper_arc(n: int) -> bool:
    # direct check: n points on a line segment, each pair joined inside it;
    # the outermost pair's edge passes through every interior vertex
    if n <= 1:
        return True
    from itertools import combinations, permutations

    for order in permutations(range(n)):
        pos = {v: i for i, v in enumerate(order)}
        ok = True
        for u, v in combinations(range(n), 2):
            lo, hi = sorted((pos[u], pos[v]))
            if any(lo < pos[w] < hi for w in range(n) if w not in (u, v)):
                ok = False
                break
        if ok:
            return True
    return False


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_h4_cap_equals_direct_arc_embedder(n):
    assert _embeds_in_proper_arc(n) == (n <= 2)
