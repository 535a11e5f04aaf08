"""Matrix models on the unit 3-sphere for the planned vertex actions.

Four models, all inside SO(4):

    TETRA_ROT   A4 as rotations of a tetrahedron in the equatorial 3-space,
                last axis untouched: every element pointwise fixes a circle
                through the two poles.
    TETRA_FULL  S4 via the 3-dimensional standard representation plus the
                parity character on the last axis.  Odd elements flip the
                poles; order-4 elements act freely (no fixed points).
    DODECA_ROT  A5 as the rotation group of an icosahedron/dodecahedron in
                the equatorial 3-space, last axis untouched.  Every element
                is a rotation about a circle through the poles.
    SIMPLEX4    A5 permuting the five vertices of a regular 4-simplex, i.e.
                the sum-zero subspace of 5-space.  Order-5 elements are
                glide rotations with empty fixed sets.

A non-identity special-orthogonal 4x4 matrix either fixes a geodesic
circle of the sphere pointwise (its +1 eigenplane) or fixes nothing; the
realizer leans on that dichotomy throughout.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

import numpy as np

from .actions import BuiltPart, Model, OrbitPlan, VertexAction, restricted_group
from .perm import (
    GroupAction,
    PermGroup,
    Permutation,
    coset_transversal,
    closure,
    from_cycles,
    standard_group,
)
from .profiles import FixedVertexProfile

ORTHO_TOL = 1e-9
HOM_TOL = 1e-8
INVARIANCE_TOL = 1e-9
ON_CIRCLE_TOL = 1e-9
CIRCLE_EQ_TOL = 1e-8
MIN_VERTEX_SEP = 1e-6
FREE_CIRCLE_CLEARANCE = 0.05
FREE_ORBIT_SEP = 1e-3
_SV_ZERO = 1e-7
_SV_AMBIGUOUS = 1e-6


class PrecisionError(RuntimeError):
    """Numerically ambiguous eigenstructure; results would be unreliable."""


class UnsupportedGeometryError(RuntimeError):
    """Raised for plans whose edges need knotting; no matrix model applies."""


class PlacementError(RuntimeError):
    """Free-orbit base point sampling failed the separation requirements."""


def default_seed() -> int:
    return int(os.environ.get("TSGLAB_SEED", "0"))


@dataclass(frozen=True)
class ModelConfig:
    """Geometry knobs: twin-tetra latitude, edge-point parameter, rng seed."""

    theta: float = math.pi / 6
    t: float = 1.0 / 3.0
    seed: Optional[int] = None

    def __post_init__(self):
        if not 0.0 < self.theta < math.pi / 2:
            raise ValueError(f"theta must lie strictly between 0 and pi/2, got {self.theta}")
        if not 0.0 < self.t < 0.5:
            raise ValueError(
                f"edge parameter t must lie strictly between 0 and 1/2, got {self.t}; "
                "t = 1/2 would land on edge midpoints, which edge-reversing involutions fix")

    @property
    def rng_seed(self) -> int:
        return default_seed() if self.seed is None else self.seed


@dataclass(frozen=True)
class FixedCircle:
    """The pointwise-fixed set of an isometry: a geodesic circle stored as an
    orthonormal basis of its plane, or the EMPTY marker (basis None)."""

    basis: Optional[np.ndarray]  # shape (2, 4), orthonormal rows

    @property
    def empty(self) -> bool:
        return self.basis is None

    def projector(self) -> np.ndarray:
        if self.empty:
            raise ValueError("empty fixed set has no plane")
        return self.basis.T @ self.basis

    def residual(self, p: np.ndarray) -> float:
        return float(np.linalg.norm(p - self.projector() @ p))

    def contains(self, p: np.ndarray, tol: float = ON_CIRCLE_TOL) -> bool:
        return not self.empty and self.residual(p) <= tol

    def angle_of(self, p: np.ndarray) -> float:
        x, y = float(self.basis[0] @ p), float(self.basis[1] @ p)
        return math.atan2(y, x)

    def point_at(self, angle: float) -> np.ndarray:
        return math.cos(angle) * self.basis[0] + math.sin(angle) * self.basis[1]

    def same_circle(self, other: "FixedCircle", tol: float = CIRCLE_EQ_TOL) -> bool:
        if self.empty or other.empty:
            return self.empty and other.empty
        return float(np.abs(self.projector() - other.projector()).max()) <= tol


def circles_intersection(c1: FixedCircle, c2: FixedCircle, tol: float = CIRCLE_EQ_TOL) -> np.ndarray:
    """Intersection points of two distinct fixed circles: 0 or 2 antipodes."""
    if c1.same_circle(c2):
        raise ValueError("circles coincide")
    # shared directions = eigenvectors of P1 @ P2 restricted to both planes
    stack = np.vstack([np.eye(4) - c1.projector(), np.eye(4) - c2.projector()])
    _, s, vt = np.linalg.svd(stack)
    line = vt[s < tol * 10]
    if line.shape[0] == 0:
        return np.empty((0, 4))
    if line.shape[0] > 1:
        raise PrecisionError("distinct circles sharing a 2-plane")
    v = line[0] / np.linalg.norm(line[0])
    return np.vstack([v, -v])


def _canonical_rows(rows: np.ndarray) -> np.ndarray:
    out = []
    for r in rows:
        k = int(np.argmax(np.abs(r)))
        out.append(-r if r[k] < 0 else r)
    return np.array(sorted(out, key=lambda r: tuple(np.round(r, 9))))


def fixed_set(matrix: np.ndarray) -> FixedCircle:
    """+1 eigenplane of a special-orthogonal matrix, via the kernel of M - I.

    The identity is rejected (it fixes the whole sphere, not a circle), and
    singular values falling in the ambiguous band raise PrecisionError
    rather than guessing a dimension.
    """
    m = np.asarray(matrix, dtype=float)
    if m.shape != (4, 4):
        raise ValueError("expected a 4x4 matrix")
    _, s, vt = np.linalg.svd(m - np.eye(4))
    if np.any((s >= _SV_ZERO) & (s < _SV_AMBIGUOUS)):
        raise PrecisionError(f"singular values too close to zero to classify: {s}")
    dim = int(np.sum(s < _SV_ZERO))
    if dim == 4:
        raise ValueError("identity matrix fixes the whole sphere; not a circle")
    if dim == 0:
        return FixedCircle(None)
    if dim != 2:
        raise PrecisionError(f"fixed subspace of dimension {dim}; SO(4) allows only 0, 2 or 4")
    return FixedCircle(_canonical_rows(vt[-2:]))


# ------------------------------------------------------------------ bases


def _sumzero_basis(n: int) -> np.ndarray:
    rows = []
    for k in range(1, n):
        v = np.array([1.0] * k + [-float(k)] + [0.0] * (n - k - 1))
        rows.append(v / np.linalg.norm(v))
    return np.array(rows)


_B4 = _sumzero_basis(4)  # 3 x 4
_B5 = _sumzero_basis(5)  # 4 x 5


def _perm_matrix(p: Permutation) -> np.ndarray:
    n = p.degree
    mat = np.zeros((n, n))
    for i in range(n):
        mat[p.images[i], i] = 1.0
    return mat


def _tetra_std(p: Permutation) -> np.ndarray:
    return _B4 @ _perm_matrix(p) @ _B4.T


def tetra_corner(i: int) -> np.ndarray:
    """Corner of the regular tetrahedron, embedded in the equator x4 = 0."""
    v = _B4 @ (np.eye(4)[i] - 0.25)
    v /= np.linalg.norm(v)
    return np.concatenate([v, [0.0]])


def simplex_corner(i: int) -> np.ndarray:
    v = _B5 @ (np.eye(5)[i] - 0.2)
    return v / np.linalg.norm(v)


POLE = np.array([0.0, 0.0, 0.0, 1.0])


# --------------------------------------------------------- icosahedral A5


@lru_cache(maxsize=None)
def _icosahedral_table() -> dict[tuple[int, ...], np.ndarray]:
    """The 60 rotations of an icosahedron, keyed by the even permutation
    they induce on the five triples of mutually orthogonal 2-fold axes."""
    phi = (1 + math.sqrt(5)) / 2
    verts = []
    for s1 in (1.0, -1.0):
        for s2 in (1.0, -1.0):
            v = np.array([0.0, s1, s2 * phi])
            for _ in range(3):
                v = np.array([v[1], v[2], v[0]])
                verts.append(v.copy())
    verts = np.array(verts)
    verts /= np.linalg.norm(verts[0])
    dots = verts @ verts.T
    edges = [(i, j) for i in range(12) for j in range(12) if i != j and dots[i, j] > 0.3]
    assert len(edges) == 60

    def frame(i: int, j: int) -> np.ndarray:
        u = verts[i]
        w = verts[j] - float(verts[j] @ u) * u
        w /= np.linalg.norm(w)
        return np.column_stack([u, w, np.cross(u, w)])

    f0_inv = frame(*edges[0]).T
    mats, seen = [], set()
    for i, j in edges:
        rot = frame(i, j) @ f0_inv
        key = tuple(np.round(rot, 8).ravel())
        if key not in seen:
            seen.add(key)
            mats.append(rot)
    assert len(mats) == 60

    def canon_axis(v: np.ndarray) -> np.ndarray:
        k = int(np.argmax(np.abs(v)))
        return -v if v[k] < 0 else v

    axis_vecs: list[np.ndarray] = []
    for rot in mats:
        if abs(np.trace(rot) + 1) < 1e-8:  # rotation by pi; involutions are symmetric
            w, vecs = np.linalg.eigh(rot)
            a = canon_axis(vecs[:, int(np.argmax(w))])
            if all(abs(float(a @ b)) < 1 - 1e-6 for b in axis_vecs):
                axis_vecs.append(a)
    assert len(axis_vecs) == 15
    axis_vecs.sort(key=lambda a: tuple(np.round(a, 8)))

    def nearest_axis(v: np.ndarray) -> int:
        dots = [abs(float(v @ a)) for a in axis_vecs]
        k = int(np.argmax(dots))
        assert dots[k] > 1 - 1e-6, "rotated axis matches no stored axis"
        return k

    triple_of = [-1] * 15
    triples: list[list[int]] = []
    for i in range(15):
        if triple_of[i] >= 0:
            continue
        members = [i] + [j for j in range(15) if j != i
                         and abs(float(axis_vecs[i] @ axis_vecs[j])) < 1e-6]
        assert len(members) == 3
        for k in members:
            triple_of[k] = len(triples)
        triples.append(members)
    assert len(triples) == 5

    table: dict[tuple[int, ...], np.ndarray] = {}
    for rot in mats:
        images = tuple(triple_of[nearest_axis(rot @ axis_vecs[triple[0]])]
                       for triple in triples)
        p = Permutation(images)
        assert p.is_even()
        table[p.images] = rot
    assert len(table) == 60
    # spot-check the labeling is a homomorphism
    for a in list(table)[:6]:
        for b in list(table)[:6]:
            prod = Permutation(a) * Permutation(b)
            err = np.abs(table[prod.images] - table[a] @ table[b]).max()
            assert err < 1e-9, "triple labeling is not multiplicative"
    return table


# --------------------------------------------------------- representations


def _block(r3: np.ndarray, last: float) -> np.ndarray:
    out = np.zeros((4, 4))
    out[:3, :3] = r3
    out[3, 3] = last
    return out


_MODEL_DEGREE = {Model.TETRA_ROT: 4, Model.TETRA_FULL: 4,
                 Model.DODECA_ROT: 5, Model.SIMPLEX4: 5}


def representation(group: PermGroup, model: Model) -> dict[Permutation, np.ndarray]:
    """Faithful map from group elements to SO(4) matrices for the model."""
    if group.degree != _MODEL_DEGREE[model]:
        raise ValueError(f"{model.value} needs degree-{_MODEL_DEGREE[model]} permutations, "
                         f"got degree {group.degree}")
    if model in (Model.TETRA_ROT, Model.DODECA_ROT, Model.SIMPLEX4):
        if any(not e.is_even() for e in group.elements):
            raise ValueError(f"{model.value} represents even permutations only")
    rep = {}
    for e in group.elements:
        if model is Model.TETRA_ROT:
            mat = _block(_tetra_std(e), 1.0)
        elif model is Model.TETRA_FULL:
            mat = _block(_tetra_std(e), 1.0 if e.is_even() else -1.0)
        elif model is Model.DODECA_ROT:
            mat = _block(_icosahedral_table()[e.images], 1.0)
        else:
            mat = _B5 @ _perm_matrix(e) @ _B5.T
        rep[e] = mat
    return rep


def circles_of(rep: dict[Permutation, np.ndarray]) -> dict[Permutation, FixedCircle]:
    return {e: fixed_set(m) for e, m in rep.items() if not e.is_identity()}


# ----------------------------------------------------------- orbit coords


_PART_BASE_EDGE = {"tetra_edge": (2, 3), "simplex_edge": (3, 4)}
_PART_MODELS = {
    "tetra_corners": (Model.TETRA_FULL, Model.TETRA_ROT),
    "twin_tetra": (Model.TETRA_FULL,),
    "tetra_edge": (Model.TETRA_FULL,),
    "simplex_corners": (Model.SIMPLEX4,),
    "simplex_edge": (Model.SIMPLEX4,),
    "center": (Model.TETRA_ROT, Model.DODECA_ROT),
}


def _edge_point(corner_a: np.ndarray, corner_b: np.ndarray, t: float) -> np.ndarray:
    p = (1 - t) * corner_a + t * corner_b
    return p / np.linalg.norm(p)


def _part_base_point(model: Model, kind: str, config: ModelConfig) -> np.ndarray:
    if kind == "twin_tetra":
        c = tetra_corner(3)[:3]
        return np.concatenate([math.cos(config.theta) * c, [math.sin(config.theta)]])
    if kind == "tetra_edge":
        i, j = _PART_BASE_EDGE[kind]
        return _edge_point(tetra_corner(i), tetra_corner(j), config.t)
    if kind == "simplex_edge":
        i, j = _PART_BASE_EDGE[kind]
        return _edge_point(simplex_corner(i), simplex_corner(j), config.t)
    if kind == "center":
        return POLE.copy()
    raise ValueError(f"part kind {kind!r} has no base point")


def _natural_corner(model: Model, i: int) -> np.ndarray:
    if model in (Model.TETRA_FULL, Model.TETRA_ROT):
        return tetra_corner(i)
    return simplex_corner(i)


def part_coords(model: Model, part: BuiltPart, rep: dict[Permutation, np.ndarray],
                config: ModelConfig) -> np.ndarray:
    """Coordinates for one built orbit block, aligned with its indexing."""
    if part.kind in ("tetra_corners", "knotted_k4", "simplex_corners"):
        n = 4 if part.kind != "simplex_corners" else 5
        return np.array([_natural_corner(model, i) for i in range(n)])
    if part.kind == "center":
        return POLE.reshape(1, 4).copy()
    base = _part_base_point(model, part.kind, config)
    return np.array([rep[r] @ base for r in part.reps])


def special_orbit_coords(model: Model, kind: str, config: ModelConfig | None = None,
                         ) -> np.ndarray:
    """Standalone coordinates for a special part, in canonical coset order.

    Verifies unit norms, setwise invariance and the planned stabilizer
    sizes before returning.
    """
    config = config or ModelConfig()
    if kind not in _PART_MODELS or model not in _PART_MODELS[kind]:
        raise ValueError(f"part {kind!r} is not defined in model {model.value}")
    group_name = {"tetra_corners": "S4" if model is Model.TETRA_FULL else "A4",
                  "twin_tetra": "S4", "tetra_edge": "S4",
                  "simplex_corners": "A5", "simplex_edge": "A5",
                  "center": "A4" if model is Model.TETRA_ROT else "A5"}[kind]
    g = standard_group(group_name)
    rep = representation(g, model)
    sub = {
        "tetra_corners": lambda: frozenset(e for e in g.elements if e.images[3] == 3),
        "simplex_corners": lambda: frozenset(e for e in g.elements if e.images[4] == 4),
        "twin_tetra": lambda: closure((from_cycles(4, (0, 1, 2)),), 4),
        "tetra_edge": lambda: closure((from_cycles(4, (0, 1)),), 4),
        "simplex_edge": lambda: closure((from_cycles(5, (0, 1, 2)),), 5),
        "center": lambda: g.element_set,
    }[kind]()
    if kind in ("tetra_corners", "simplex_corners", "center"):
        coords = (np.array([_natural_corner(model, i) for i in range(g.degree)])
                  if kind != "center" else POLE.reshape(1, 4))
    else:
        reps = coset_transversal(g, sub)
        base = _part_base_point(model, kind, config)
        coords = np.array([rep[r] @ base for r in reps])
    _verify_part(coords, rep, len(sub))
    return coords


def _verify_part(coords: np.ndarray, rep: dict[Permutation, np.ndarray], stab_size: int):
    if np.abs(np.linalg.norm(coords, axis=1) - 1).max() > ORTHO_TOL:
        raise AssertionError("part coordinates are not unit vectors")
    for mat in rep.values():
        moved = coords @ mat.T
        dists = np.linalg.norm(moved[:, None, :] - coords[None, :, :], axis=2)
        if np.abs(dists.min(axis=1)).max() > INVARIANCE_TOL:
            raise AssertionError("part coordinates are not setwise invariant")
    fixed_counts = sum(
        int((np.linalg.norm(coords @ mat.T - coords, axis=1) < INVARIANCE_TOL).sum())
        for mat in rep.values())
    if fixed_counts != len(coords) * stab_size:
        raise AssertionError(
            f"stabilizers have total size {fixed_counts}, planned {len(coords) * stab_size}")


_MODEL_DEFAULT_GROUP = {Model.TETRA_ROT: "A4", Model.TETRA_FULL: "S4",
                        Model.DODECA_ROT: "A5", Model.SIMPLEX4: "A5"}


def free_orbit_coords(model: Model, group: Optional[PermGroup] = None, n: int = 1,
                      config: ModelConfig | None = None,
                      avoid: Optional[np.ndarray] = None) -> list[np.ndarray]:
    """n regular orbits from base points sampled clear of every fixed circle.

    Each base point keeps distance >= 0.05 from all fixed-point circles, and
    all produced points stay pairwise >= 1e-3 apart (also from `avoid`).
    Deterministic for a fixed seed.  The group defaults to the model's full
    symmetry group.
    """
    if n < 1:
        raise ValueError("need n >= 1 free orbits")
    group = group or standard_group(_MODEL_DEFAULT_GROUP[model])
    config = config or ModelConfig()
    rep = representation(group, model)
    circles = [c for c in circles_of(rep).values() if not c.empty]
    rng = np.random.default_rng(config.rng_seed)
    placed = [] if avoid is None else [np.asarray(avoid)]
    orbits = []
    mats = [rep[e] for e in group.elements]
    for _ in range(n):
        for attempt in range(400):
            p = rng.standard_normal(4)
            p /= np.linalg.norm(p)
            if circles and min(c.residual(p) for c in circles) < FREE_CIRCLE_CLEARANCE:
                continue
            orbit = np.array([mat @ p for mat in mats])
            pool = np.vstack(placed + [orbit]) if placed else orbit
            diff = np.linalg.norm(pool[:, None, :] - pool[None, :, :], axis=2)
            np.fill_diagonal(diff, np.inf)
            if diff.min() < FREE_ORBIT_SEP:
                continue
            orbits.append(orbit)
            placed.append(orbit)
            break
        else:
            raise PlacementError(f"could not place free orbit after 400 attempts (n={n})")
    return orbits


# ------------------------------------------------------------ realization


@dataclass
class Realization:
    """A vertex action made concrete: matrices plus coordinates on the sphere."""

    plan: OrbitPlan
    vertex_action: VertexAction
    model: Model
    config: ModelConfig
    rep: dict[Permutation, np.ndarray]       # for the acting (possibly restricted) group
    coords: np.ndarray                       # (m, 4)
    parent_rep: Optional[dict[Permutation, np.ndarray]] = None
    circles: dict[Permutation, FixedCircle] = field(default_factory=dict)

    @property
    def group(self) -> PermGroup:
        return self.vertex_action.action.group

    @property
    def m(self) -> int:
        return self.vertex_action.m

    def circle_of(self, e: Permutation) -> FixedCircle:
        if not self.circles:
            self.circles = circles_of(self.rep)
        return self.circles[e]

    def validate(self):
        validate_realization(self)


def _max_hom_error(group: PermGroup, rep: dict[Permutation, np.ndarray]) -> float:
    els = group.elements
    idx = {e: i for i, e in enumerate(els)}
    mats = np.array([rep[e] for e in els])
    err = 0.0
    for i, a in enumerate(els):
        prods = np.einsum("ij,njk->nik", mats[i], mats)
        targets = np.array([mats[idx[a * b]] for b in els])
        err = max(err, float(np.abs(prods - targets).max()))
    return err


def validate_realization(r: Realization):
    group = r.group
    mats = np.array([r.rep[e] for e in group.elements])
    eye = np.eye(4)
    ortho = max(float(np.abs(m.T @ m - eye).max()) for m in mats)
    if ortho > ORTHO_TOL:
        raise AssertionError(f"matrices not orthogonal to tolerance: {ortho}")
    dets = np.linalg.det(mats)
    if np.abs(dets - 1).max() > ORTHO_TOL * 10:
        raise AssertionError("matrices must have determinant +1")
    hom = _max_hom_error(group, r.rep)
    if hom > HOM_TOL:
        raise AssertionError(f"representation homomorphism error {hom}")
    act = r.vertex_action.action
    for e in group.elements:
        moved = r.coords @ r.rep[e].T
        target = r.coords[list(act.act[e].images)]
        if float(np.abs(moved - target).max()) > INVARIANCE_TOL:
            raise AssertionError(f"coordinates do not realize the action of {e}")
    diff = np.linalg.norm(r.coords[:, None, :] - r.coords[None, :, :], axis=2)
    np.fill_diagonal(diff, np.inf)
    if diff.min() < MIN_VERTEX_SEP:
        raise AssertionError(f"vertices too close: {diff.min()}")
    mp = _profile_counts_from_action(r)
    gp = _profile_counts_geometric(r)
    if mp != gp:
        raise AssertionError(f"geometric profile {gp} != combinatorial profile {mp}")


def realize(p: OrbitPlan, va: Optional[VertexAction] = None,
            config: ModelConfig | None = None) -> Realization:
    """Assemble matrices and coordinates for a plan (and its built action)."""
    from .actions import build

    if p.knotted:
        raise UnsupportedGeometryError(
            f"K_{p.m} with group {p.group} needs knotted edges; no matrix model is provided")
    config = config or ModelConfig()
    va = va or build(p)
    parent_group = standard_group(p.building_group)
    rep_full = representation(parent_group, p.model)

    special = [b for b in va.parts if b.kind != "free"]
    coords_blocks: dict[int, np.ndarray] = {}
    fixed_coords = []
    for i, b in enumerate(va.parts):
        if b.kind != "free":
            block = part_coords(p.model, b, rep_full, config)
            coords_blocks[i] = block
            fixed_coords.append(block)
    n_free = sum(1 for b in va.parts if b.kind == "free")
    if n_free:
        avoid = np.vstack(fixed_coords) if fixed_coords else None
        orbits = free_orbit_coords(p.model, parent_group, n_free, config, avoid=avoid)
        it = iter(orbits)
        for i, b in enumerate(va.parts):
            if b.kind == "free":
                coords_blocks[i] = next(it)
    coords = np.vstack([coords_blocks[i] for i in range(len(va.parts))])

    sub = restricted_group(p)
    if sub is None:
        rep = rep_full
        parent_rep = None
    else:
        rep = {e: rep_full[e] for e in sub.elements}
        parent_rep = rep_full
    r = Realization(p, va, p.model, config, rep, coords, parent_rep)
    r.validate()
    return r


# --------------------------------------------------------------- profiles


def _profile_counts_from_action(r: Realization) -> dict:
    act = r.vertex_action.action
    out = {}
    for label, members in r.group.classes.items():
        if label.order == 1:
            continue
        vals = {sum(1 for v in range(act.m) if act.act[e].images[v] == v) for e in members}
        assert len(vals) == 1
        out[label] = vals.pop()
    return out


def _profile_counts_geometric(r: Realization) -> dict:
    out = {}
    for label, members in r.group.classes.items():
        if label.order == 1:
            continue
        vals = set()
        for e in members:
            circle = r.circle_of(e)
            if circle.empty:
                vals.add(0)
            else:
                vals.add(int(sum(1 for p in r.coords if circle.contains(p))))
        if len(vals) != 1:
            raise AssertionError(f"geometric counts differ within class {label}: {vals}")
        out[label] = vals.pop()
    return out


def geometric_profile(r: Realization) -> FixedVertexProfile:
    """Count vertices on each element's fixed circle; must agree with the
    combinatorial measured profile (validated at construction)."""
    counts = _profile_counts_geometric(r)
    kw = {"n2": 0, "n3": 0}
    for label, n in counts.items():
        if label.order == 2 and label.in_even_subgroup:
            kw["n2"] = n
        elif label.order == 2:
            kw["n2p"] = n
        elif label.order == 3:
            kw["n3"] = n
        elif label.order == 4:
            kw["n4"] = n
        elif label.order == 5:
            kw["n5"] = n
    return FixedVertexProfile(r.group.name, n1=r.m, **kw)
