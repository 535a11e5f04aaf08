"""Certificates that the edges of K_m can be laid down equivariantly.

Once the vertices sit on the sphere invariantly, the edges embed without
collisions provided the five conditions below hold; the checker verifies
each one on a realization and constructs the witness arc system for the
pairs that are pinned to fixed circles.

    h1  a pair fixed pointwise by two non-trivial elements forces the two
        elements to share one fixed circle
    h2  every pinned pair bounds an arc of its circle whose interior is
        free of vertices, and the arcs' interiors are pairwise disjoint
    h3  any element leaving an arc's boundary pair or an interior point
        invariant maps the arc onto itself; arcs map onto arcs of image
        pairs (the assignment commutes with the action)
    h4  an element that swaps some pair may fix at most 2 vertices (the
        fixed vertices span a complete subgraph that must fit in a proper
        sub-arc of a circle)
    h5  an element that swaps some pair has a non-empty fixed circle that
        no other non-trivial element shares

Free pairs need none of this; they are routed away from the fixed-point
set, which the certificate does not model explicitly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .actions import VertexAction
from .geometry import FixedCircle, Realization, circles_intersection
from .perm import Permutation, is_faithful, vertex_stabilizers

PAIR_TOL = 1e-8
ANGLE_EPS = 1e-9


class ArcAssignmentError(RuntimeError):
    """The gray-arc system cannot be built as specified."""


class NonConsecutivePairError(ArcAssignmentError):
    """Both candidate arcs between a pinned pair contain other vertices."""


@dataclass(frozen=True)
class Arc:
    """An arc of a fixed circle: start angle plus signed sweep to the end.

    Interior angles are start + s*sweep for s in (0, 1); the endpoints are
    exactly the embedded coordinates of the pair.
    """

    pair: tuple[int, int]
    fixer: Permutation          # a non-trivial element whose circle carries the arc
    circle: FixedCircle
    start: float
    sweep: float

    def angle_at(self, s: float) -> float:
        return self.start + s * self.sweep

    def point_at(self, s: float) -> np.ndarray:
        return self.circle.point_at(self.angle_at(s))

    @property
    def midpoint(self) -> np.ndarray:
        return self.point_at(0.5)

    def interior_contains_angle(self, phi: float, margin: float = ANGLE_EPS) -> bool:
        span = abs(self.sweep)
        rel = (phi - self.start) % (2 * math.pi)
        if self.sweep < 0:
            rel = (2 * math.pi - rel) % (2 * math.pi)
        return margin < rel < span - margin

    def interior_contains_point(self, p: np.ndarray, margin: float = ANGLE_EPS) -> bool:
        if not self.circle.contains(p, tol=PAIR_TOL):
            return False
        return self.interior_contains_angle(self.circle.angle_of(p), margin)


ArcAssignment = dict[tuple[int, int], Arc]


@dataclass
class HypothesisReport:
    h1: bool
    h2: bool
    h3: bool
    h4: bool
    h5: bool
    arcs: Optional[ArcAssignment]
    details: dict = field(default_factory=dict)

    @property
    def overall(self) -> bool:
        return self.h1 and self.h2 and self.h3 and self.h4 and self.h5


def required_pairs(va: VertexAction) -> list[tuple[int, int]]:
    """All vertex pairs pointwise fixed by some non-trivial element.

    In a complete graph every pair is adjacent, so these are exactly the
    pairs whose edge must run inside a fixed circle.
    """
    a = va.action
    if not is_faithful(a):
        raise ValueError("required_pairs needs a faithful action")
    stabs = vertex_stabilizers(a)
    ident = a.group.identity
    pinned = [v for v in range(a.m) if len(stabs[v]) > 1]
    out = []
    for i, u in enumerate(pinned):
        for v in pinned[i + 1:]:
            if len(stabs[u] & stabs[v]) > 1:
                out.append((u, v))
    return out


def _nontrivial_fixers(va: VertexAction, u: int, v: int) -> list[Permutation]:
    a = va.action
    return [e for e in a.group.elements
            if not e.is_identity()
            and a.act[e].images[u] == u and a.act[e].images[v] == v]


def check_h1(va: VertexAction, r: Realization) -> bool:
    """All non-trivial fixers of each pinned pair share one fixed circle."""
    for u, v in required_pairs(va):
        fixers = _nontrivial_fixers(va, u, v)
        circles = [r.circle_of(e) for e in fixers]
        if any(c.empty for c in circles):
            return False
        first = circles[0]
        if any(not first.same_circle(c) for c in circles[1:]):
            return False
    return True


def _vertices_on_circle(r: Realization, circle: FixedCircle) -> list[int]:
    return [v for v in range(r.m) if circle.contains(r.coords[v], tol=PAIR_TOL)]


def assign_arcs(va: VertexAction, r: Realization) -> ArcAssignment:
    """Pick the witness arc for every pinned pair.

    The pair's two endpoints cut its circle into two arcs; the one whose
    interior contains no vertex is chosen (the shorter one when both
    qualify).  Afterwards all arc interiors are verified pairwise disjoint,
    including across circles, where two arcs could only meet in the two
    intersection points of their circles.
    """
    if not check_h1(va, r):
        raise ArcAssignmentError("pairs are fixed by elements with different circles")
    arcs: ArcAssignment = {}
    for u, v in required_pairs(va):
        fixers = _nontrivial_fixers(va, u, v)
        fixer = fixers[0]
        circle = r.circle_of(fixer)
        pu, pv = r.coords[u], r.coords[v]
        if not (circle.contains(pu, PAIR_TOL) and circle.contains(pv, PAIR_TOL)):
            raise ArcAssignmentError(
                f"pair ({u}, {v}) does not sit on the fixed circle of {fixer}")
        a_u, a_v = circle.angle_of(pu), circle.angle_of(pv)
        ccw = (a_v - a_u) % (2 * math.pi)
        candidates = [Arc((u, v), fixer, circle, a_u, ccw),
                      Arc((u, v), fixer, circle, a_u, ccw - 2 * math.pi)]
        others = [w for w in _vertices_on_circle(r, circle) if w not in (u, v)]
        open_arcs = [
            arc for arc in candidates
            if not any(arc.interior_contains_point(r.coords[w], margin=1e-7) for w in others)
        ]
        if not open_arcs:
            raise NonConsecutivePairError(
                f"pair ({u}, {v}) is separated by other vertices on its circle")
        arcs[(u, v)] = min(open_arcs, key=lambda a: abs(a.sweep))
    _verify_disjoint_interiors(r, arcs)
    return arcs


def _verify_disjoint_interiors(r: Realization, arcs: ArcAssignment):
    items = list(arcs.values())
    for i, a in enumerate(items):
        for b in items[i + 1:]:
            if a.circle.same_circle(b.circle):
                for s in (0.0, 1.0):
                    if a.interior_contains_angle(b.angle_at(s)) or \
                       b.interior_contains_angle(a.angle_at(s)):
                        raise ArcAssignmentError(
                            f"arcs of {a.pair} and {b.pair} overlap on their circle")
                if a.interior_contains_angle(b.angle_at(0.5)) or \
                   b.interior_contains_angle(a.angle_at(0.5)):
                    raise ArcAssignmentError(
                        f"arcs of {a.pair} and {b.pair} overlap on their circle")
            else:
                crossings = circles_intersection(a.circle, b.circle)
                for p in crossings:
                    if a.interior_contains_point(p) and b.interior_contains_point(p):
                        raise ArcAssignmentError(
                            f"arcs of {a.pair} and {b.pair} cross at a circle intersection")


def _image_pair(va: VertexAction, f: Permutation, pair: tuple[int, int]) -> tuple[int, int]:
    img = va.action.act[f].images
    x, y = img[pair[0]], img[pair[1]]
    return (x, y) if x < y else (y, x)


def check_h3(va: VertexAction, r: Realization, arcs: ArcAssignment) -> bool:
    """Equivariance of the arc system.

    For every element f and arc A over pair P: the image of A must be the
    assigned arc of f(P) as a point set.  Arcs with equal endpoints agree
    as point sets exactly when their midpoints agree.  Elements fixing an
    interior point of A (their circles cross there, or they carry the arc's
    own circle) must map A onto itself.
    """
    for f in va.action.group.elements:
        mat = r.rep[f]
        for pair, arc in arcs.items():
            target = arcs.get(_image_pair(va, f, pair))
            if target is None:
                return False
            moved_mid = mat @ arc.midpoint
            if float(np.linalg.norm(moved_mid - target.midpoint)) > PAIR_TOL:
                return False
            if f.is_identity():
                continue
            # interior fixed point of f on this arc forces f(A) = A
            fc = r.circle_of(f)
            if fc.empty:
                continue
            if fc.same_circle(arc.circle):
                fixes_interior = True
            else:
                crossings = circles_intersection(fc, arc.circle)
                fixes_interior = any(arc.interior_contains_point(p) for p in crossings)
            if fixes_interior and target is not arcs[pair]:
                return False
    return True


def _interchangers(va: VertexAction) -> list[Permutation]:
    out = []
    for e in va.action.group.elements:
        if e.is_identity():
            continue
        if any(len(c) == 2 for c in va.action.act[e].cycles()):
            out.append(e)
    return out


def check_h4(va: VertexAction) -> bool:
    """Pair-swapping elements may fix at most two vertices.

    The vertices fixed by such an element span a complete subgraph that has
    to embed in a proper sub-arc of the element's circle, which a complete
    graph does exactly when it has at most 2 vertices.
    """
    for e in _interchangers(va):
        img = va.action.act[e].images
        if sum(1 for v in range(va.m) if img[v] == v) > 2:
            return False
    return True


def check_h5(va: VertexAction, r: Realization) -> bool:
    """Pair-swapping elements are rotations with unshared circles."""
    nontrivial = [e for e in va.action.group.elements if not e.is_identity()]
    for g in _interchangers(va):
        cg = r.circle_of(g)
        if cg.empty:
            return False
        for h in nontrivial:
            if h != g and cg.same_circle(r.circle_of(h)):
                return False
    return True


def full_report(va: VertexAction, r: Realization) -> HypothesisReport:
    """Run all five checks and build the arc system; any failure flips the
    overall verdict, with the reason recorded in details."""
    details: dict = {}
    h1 = check_h1(va, r)
    arcs: Optional[ArcAssignment] = None
    if h1:
        try:
            arcs = assign_arcs(va, r)
            h2 = True
            details["arc_count"] = len(arcs)
        except ArcAssignmentError as err:
            h2 = False
            details["arc_error"] = str(err)
    else:
        h2 = False
        details["arc_error"] = "pair fixers disagree on circles"
    h3 = check_h3(va, r, arcs) if arcs is not None else False
    h4 = check_h4(va)
    h5 = check_h5(va, r)
    return HypothesisReport(h1, h2, h3, h4, h5, arcs, details)
