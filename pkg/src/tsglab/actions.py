"""Explicit vertex actions for every admissible (group, m).

A plan names the orbits to lay down: free (regular) orbits plus at most a
couple of special ones tied to a polyhedron.  Part kinds and their sizes:

    free             one regular orbit, |G| points
    tetra_corners    the 4 corners of a tetrahedron (natural action)
    twin_tetra       corners of two nested tetrahedra, 8 points
                     (cosets of a 3-cycle subgroup of S4)
    tetra_edge       2 points per tetrahedron edge, 12 points
                     (cosets of a transposition subgroup of S4)
    simplex_corners  the 5 vertices of a regular 4-simplex (natural A5)
    simplex_edge     2 points per 4-simplex edge, 20 points
                     (cosets of a 3-cycle subgroup of A5)
    center           a single point fixed by the whole group
    knotted_k4/k5    the two small cases that need knotted edges; their
                     combinatorial actions are recorded, geometry is not

For A4 most residues are reached by building the S4 or A5 action on the
same vertices and restricting to an A4 subgroup; the re-embedding argument
that cuts the symmetry group down needs an edge no non-trivial element
fixes pointwise, which has_free_edge certifies.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .perm import (
    GroupAction,
    PermGroup,
    Permutation,
    a4_inside_a5,
    burnside_orbit_count,
    closure,
    coset_transversal,
    fixed_count,
    from_cycles,
    identity,
    is_faithful,
    restrict_action,
    standard_group,
    vertex_stabilizers,
)
from .profiles import FixedVertexProfile, NotAdmissibleError, necessity_check


class Model(str, Enum):
    """Geometric model carrying a plan (consumed by the realizer)."""

    TETRA_ROT = "tetra_rot"        # A4 rotations of a tetrahedron, poles fixed
    TETRA_FULL = "tetra_full"      # S4 on a tetrahedron, parity twist on the 4th axis
    DODECA_ROT = "dodeca_rot"      # A5 rotations of a dodecahedron, poles fixed
    SIMPLEX4 = "simplex4"          # A5 permuting the vertices of a regular 4-simplex


PART_SIZES = {
    "tetra_corners": 4,
    "twin_tetra": 8,
    "tetra_edge": 12,
    "simplex_corners": 5,
    "simplex_edge": 20,
    "center": 1,
    "knotted_k4": 4,
    "knotted_k5": 5,
}

RESTRICT_EVEN_S4 = "a4_in_s4"   # even elements of S4
RESTRICT_STAB_A5 = "a4_in_a5"   # even permutations fixing letter 4

# orbits contributed by one part instance, by restriction
_ORBITS_PER_PART = {
    None: {"free": 1, "tetra_corners": 1, "twin_tetra": 1, "tetra_edge": 1,
           "simplex_corners": 1, "simplex_edge": 1, "center": 1,
           "knotted_k4": 1, "knotted_k5": 2},
    RESTRICT_EVEN_S4: {"free": 2, "tetra_corners": 1, "twin_tetra": 2, "tetra_edge": 1},
    RESTRICT_STAB_A5: {"free": 5, "simplex_corners": 2, "simplex_edge": 3, "center": 1},
}


@dataclass(frozen=True)
class PartSpec:
    kind: str
    count: int = 1  # only free parts repeat

    def __post_init__(self):
        if self.kind != "free" and self.kind not in PART_SIZES:
            raise ValueError(f"unknown part kind {self.kind!r}")
        if self.count < 1:
            raise ValueError("part count must be positive")
        if self.kind != "free" and self.count != 1:
            raise ValueError("only free parts carry a multiplicity")


@dataclass(frozen=True)
class OrbitPlan:
    group: str                      # the group the action realizes
    m: int
    parts: tuple[PartSpec, ...]
    model: Model
    restriction: Optional[str] = None
    knotted: bool = False

    @property
    def building_group(self) -> str:
        """Group whose orbits are laid down (the parent for restrictions)."""
        if self.restriction == RESTRICT_EVEN_S4:
            return "S4"
        if self.restriction == RESTRICT_STAB_A5:
            return "A5"
        return self.group

    def part_size(self, spec: PartSpec) -> int:
        from .perm import GROUP_ORDER

        if spec.kind == "free":
            return GROUP_ORDER[self.building_group] * spec.count
        return PART_SIZES[spec.kind]

    @property
    def orbit_count(self) -> int:
        """Expected orbit count of the built action (restriction splits orbits)."""
        table = _ORBITS_PER_PART[self.restriction]
        return sum(table[s.kind] * s.count for s in self.parts)

    def __post_init__(self):
        total = sum(self.part_size(s) for s in self.parts)
        if total != self.m:
            raise ValueError(f"part sizes sum to {total}, expected m={self.m}")


def plan(group: str, m: int) -> OrbitPlan:
    """The construction recipe for an admissible (group, m)."""
    verdict = necessity_check(group, m)
    if not verdict.admissible:
        raise NotAdmissibleError(
            f"K_{m} admits no embedding with symmetry group {group}: {verdict.violated_rule.text}")

    def free(group_name: str, n: int) -> list[PartSpec]:
        from .perm import GROUP_ORDER

        assert n * GROUP_ORDER[group_name] >= 0
        return [PartSpec("free", n)] if n else []

    if group == "S4":
        k = m % 24
        extras = {0: [], 4: ["tetra_corners"], 8: ["twin_tetra"],
                  12: ["tetra_edge"], 20: ["twin_tetra", "tetra_edge"]}[k]
        parts = free("S4", m // 24) + [PartSpec(e) for e in extras]
        return OrbitPlan("S4", m, tuple(parts), Model.TETRA_FULL)

    if group == "A5":
        k = m % 60
        extras = {0: [], 1: ["center"], 5: ["simplex_corners"], 20: ["simplex_edge"]}[k]
        model = Model.DODECA_ROT if k in (0, 1) else Model.SIMPLEX4
        parts = free("A5", m // 60) + [PartSpec(e) for e in extras]
        return OrbitPlan("A5", m, tuple(parts), model)

    # A4
    if m == 4:
        return OrbitPlan("A4", 4, (PartSpec("knotted_k4"),), Model.TETRA_ROT, knotted=True)
    if m == 5:
        return OrbitPlan("A4", 5, (PartSpec("knotted_k5"),), Model.TETRA_ROT, knotted=True)
    if m % 12 in (0, 4, 8):
        if m % 24 == 16:
            # m = 12(2n+1) + 4: an odd number of free A4 orbits plus corners
            n_free = (m - 4) // 12
            parts = free("A4", n_free) + [PartSpec("tetra_corners")]
            return OrbitPlan("A4", m, tuple(parts), Model.TETRA_ROT)
        sub = plan("S4", m)
        return OrbitPlan("A4", m, sub.parts, sub.model, restriction=RESTRICT_EVEN_S4)
    if m % 60 in (1, 5):
        sub = plan("A5", m)
        return OrbitPlan("A4", m, sub.parts, sub.model, restriction=RESTRICT_STAB_A5)
    if m % 12 == 1:
        parts = free("A4", (m - 1) // 12) + [PartSpec("center")]
        return OrbitPlan("A4", m, tuple(parts), Model.TETRA_ROT)
    if m % 12 == 5:
        parts = free("A4", (m - 5) // 12) + [PartSpec("tetra_corners"), PartSpec("center")]
        return OrbitPlan("A4", m, tuple(parts), Model.TETRA_ROT)
    raise AssertionError(f"admissible m={m} for A4 fell through the case split")


# subgroups whose cosets realize each special part
_PART_SUBGROUP = {
    "twin_tetra": lambda: closure((from_cycles(4, (0, 1, 2)),), 4),
    "tetra_edge": lambda: closure((from_cycles(4, (0, 1)),), 4),
    "simplex_edge": lambda: closure((from_cycles(5, (0, 1, 2)),), 5),
}

_NATURAL_PARTS = {"tetra_corners", "simplex_corners", "knotted_k4"}


@dataclass(frozen=True)
class BuiltPart:
    """One realized orbit block: vertex range plus the coset data that
    pins its geometry (reps is None for natural and center parts)."""

    kind: str
    label: str
    start: int
    size: int
    reps: Optional[tuple[Permutation, ...]]
    stabilizer: tuple[Permutation, ...]


@dataclass
class VertexAction:
    """A faithful action on m labeled vertices, with part bookkeeping."""

    action: GroupAction
    labels: tuple[str, ...]
    parts: tuple[BuiltPart, ...]
    plan: Optional[OrbitPlan] = None
    parent: Optional[GroupAction] = None  # unrestricted action, when restricted

    @property
    def m(self) -> int:
        return self.action.m


def _acting_group(p: OrbitPlan) -> PermGroup:
    return standard_group(p.building_group)


def restricted_group(p: OrbitPlan) -> Optional[PermGroup]:
    if p.restriction == RESTRICT_EVEN_S4:
        return standard_group("A4")
    if p.restriction == RESTRICT_STAB_A5:
        return a4_inside_a5()
    return None


def build(p: OrbitPlan) -> VertexAction:
    """Materialize a plan as an explicit faithful permutation action."""
    g = _acting_group(p)
    blocks: list[BuiltPart] = []
    offset = 0

    def add(kind: str, label: str, size: int, reps, stab):
        nonlocal offset
        blocks.append(BuiltPart(kind, label, offset, size, reps, tuple(stab)))
        offset += size

    for i, spec in enumerate(p.parts):
        if spec.kind == "free":
            reps = tuple(g.elements)
            for j in range(spec.count):
                add("free", f"free{j}", g.order, reps, (g.identity,))
        elif spec.kind in _NATURAL_PARTS:
            add(spec.kind, spec.kind, PART_SIZES[spec.kind], None, ())
        elif spec.kind == "center":
            add("center", "center", 1, None, g.elements)
        elif spec.kind == "knotted_k5":
            add("knotted_k4", "knotted_k4", 4, None, ())
            add("center", "center", 1, None, g.elements)
        else:
            h = _PART_SUBGROUP[spec.kind]()
            reps = tuple(coset_transversal(g, h))
            add(spec.kind, spec.kind, len(reps), reps, sorted(h))

    m = offset
    if m != p.m:
        raise AssertionError(f"built {m} vertices, plan says {p.m}")

    # local index maps for coset blocks
    member_index: dict[int, dict[Permutation, int]] = {}
    for b_idx, b in enumerate(blocks):
        if b.reps is not None and b.kind != "tetra_corners":
            idx = {}
            stab = b.stabilizer if b.stabilizer else (g.identity,)
            for i, r in enumerate(b.reps):
                for h in stab:
                    idx[r * h] = i
            member_index[b_idx] = idx

    act: dict[Permutation, Permutation] = {}
    for e in g.elements:
        images = []
        for b_idx, b in enumerate(blocks):
            if b.reps is None:
                if b.kind == "center":
                    images.append(b.start)
                else:  # natural part: act by the permutation itself
                    images.extend(b.start + e.images[i] for i in range(b.size))
            else:
                idx = member_index[b_idx]
                images.extend(b.start + idx[e * b.reps[i]] for i in range(b.size))
        act[e] = Permutation(tuple(images))

    full = GroupAction(g, m, act)
    labels = tuple(b.label for b in blocks for _ in range(b.size))

    sub = restricted_group(p)
    if sub is None:
        va = VertexAction(full, labels, tuple(blocks), p)
    else:
        va = VertexAction(restrict_action(full, sub), labels, tuple(blocks), p, parent=full)
    if not is_faithful(va.action):
        raise AssertionError("built action is not faithful")
    return va


class FixedVertexPropertyError(RuntimeError):
    """Raised when elements of one class fix different numbers of vertices."""


def measured_profile(va: VertexAction) -> FixedVertexProfile:
    """Count fixed vertices per element class, asserting the counts are
    constant on classes (they must be, for any action this module builds)."""
    a = va.action
    g = a.group
    counts = {}
    for label, members in g.classes.items():
        vals = {fixed_count(a, e) for e in members}
        if len(vals) != 1:
            raise FixedVertexPropertyError(
                f"class {label} fixes {sorted(vals)} vertices; construction bug")
        if label.order > 1:
            counts[label] = vals.pop()
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
    return FixedVertexProfile(g.name, n1=a.m, **kw)


def has_free_edge(va: VertexAction, in_parent: bool = False) -> bool:
    """Does some vertex pair have trivial pointwise stabilizer?

    Searches every pair rather than trusting a designated one.  With
    in_parent=True the test runs against the unrestricted action (the
    stronger condition the re-embedding argument actually needs).
    """
    a = va.parent if (in_parent and va.parent is not None) else va.action
    if a.m < 2:
        raise ValueError("need at least two vertices")
    stabs = vertex_stabilizers(a)
    trivial = frozenset([a.group.identity])
    free_vs = [v for v in range(a.m) if stabs[v] == trivial]
    if len(free_vs) >= 2:
        return True
    for u in range(a.m):
        for v in range(u + 1, a.m):
            if stabs[u] & stabs[v] == trivial:
                return True
    return False


def action_summary(va: VertexAction) -> dict:
    return {
        "group": va.action.group.name,
        "m": va.m,
        "orbits": burnside_orbit_count(va.action),
        "profile": measured_profile(va).key(),
    }
