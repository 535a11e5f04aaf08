"""Self-contained realization files: write, read back, re-check everything.

A certificate stores the acting group's permutations, their 4x4 matrices,
the vertex coordinates with part labels, the witness arc system and the
hypothesis verdicts.  Verification reconstructs all objects from the file
alone and re-runs every invariant; nothing is trusted.
"""

from __future__ import annotations

import json
import math
import os
import tempfile
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .actions import Model, VertexAction, measured_profile
from .edges import Arc, full_report
from .geometry import (
    HOM_TOL,
    INVARIANCE_TOL,
    MIN_VERTEX_SEP,
    ModelConfig,
    ORTHO_TOL,
    Realization,
    _max_hom_error,
    geometric_profile,
)
from .perm import (
    GroupAction,
    PermGroup,
    Permutation,
    burnside_orbit_count,
    is_faithful,
)

SCHEMA_VERSION = 1

_TOP_KEYS = {"schema_version", "group", "m", "model", "restriction",
             "elements", "vertices", "arcs", "report"}


class SchemaError(ValueError):
    """File shape does not match the certificate schema."""


class VerificationFailure(RuntimeError):
    def __init__(self, check: str, message: str):
        super().__init__(f"{check}: {message}")
        self.check = check


def certificate_dict(r: Realization, report) -> dict:
    va = r.vertex_action
    act = va.action
    elements = []
    for e in act.group.elements:
        elements.append({
            "perm": list(e.images),
            "matrix": [float(x) for x in np.asarray(r.rep[e]).ravel()],  # row-major
            "vertex_images": list(act.act[e].images),
        })
    vertices = [
        {"id": i, "part": va.labels[i], "coords": [float(x) for x in r.coords[i]]}
        for i in range(r.m)
    ]
    arcs = []
    if report.arcs:
        for (u, v), arc in sorted(report.arcs.items()):
            arcs.append({
                "pair": [u, v],
                "fixer": list(arc.fixer.images),
                "basis": [[float(x) for x in row] for row in arc.circle.basis],
                "start": float(arc.start),
                "sweep": float(arc.sweep),
            })
    profile = measured_profile(va)
    return {
        "schema_version": SCHEMA_VERSION,
        "group": act.group.name,
        "m": r.m,
        "model": {
            "tag": r.model.value,
            "theta": float(r.config.theta),
            "t": float(r.config.t),
            "seed": r.config.rng_seed,
        },
        "restriction": r.plan.restriction if r.plan else None,
        "elements": elements,
        "vertices": vertices,
        "arcs": arcs,
        "report": {
            "h1": report.h1, "h2": report.h2, "h3": report.h3,
            "h4": report.h4, "h5": report.h5,
            "profile": {k: v for k, v in [
                ("n2", profile.n2), ("n2p", profile.n2p), ("n3", profile.n3),
                ("n4", profile.n4), ("n5", profile.n5)] if v is not None},
            "orbit_count": burnside_orbit_count(act),
        },
    }


def write_certificate(path: str, r: Realization, report) -> None:
    """Serialize atomically; identical inputs produce identical bytes."""
    payload = json.dumps(certificate_dict(r, report), sort_keys=True, indent=1)
    directory = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(payload)
            fh.write("\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def read_certificate(path: str) -> dict:
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as err:
            raise SchemaError(f"not valid JSON: {err}") from err
    _check_schema(data)
    return data


def _check_schema(data: dict) -> None:
    if not isinstance(data, dict) or set(data) != _TOP_KEYS:
        raise SchemaError(f"top-level keys must be {sorted(_TOP_KEYS)}")
    if data["schema_version"] != SCHEMA_VERSION:
        raise SchemaError(f"schema version {data['schema_version']} != {SCHEMA_VERSION}")
    for section, keys in (("model", {"tag", "theta", "t", "seed"}),):
        if set(data[section]) != keys:
            raise SchemaError(f"{section} must have keys {sorted(keys)}")
    for e in data["elements"]:
        if set(e) != {"perm", "matrix", "vertex_images"} or len(e["matrix"]) != 16:
            raise SchemaError("element records need perm, 16-entry matrix, vertex_images")
    for v in data["vertices"]:
        if set(v) != {"id", "part", "coords"} or len(v["coords"]) != 4:
            raise SchemaError("vertex records need id, part, 4 coords")
    for a in data["arcs"]:
        if set(a) != {"pair", "fixer", "basis", "start", "sweep"}:
            raise SchemaError("arc records need pair, fixer, basis, start, sweep")


@dataclass
class CheckResult:
    name: str
    ok: bool
    message: str = ""


def _rebuild(data: dict) -> tuple[VertexAction, Realization]:
    name = data["group"]
    perms = [Permutation(tuple(e["perm"])) for e in data["elements"]]
    degree = perms[0].degree
    pool = frozenset(perms)
    for a in perms:
        if a.inverse() not in pool:
            raise AssertionError(f"stored elements not closed under inverse at {a.images}")
        for b in perms:
            if a * b not in pool:
                raise AssertionError(f"stored elements not closed under product at {a.images} * {b.images}")
    group = PermGroup(name, degree, perms, [])
    act = {}
    rep = {}
    for e in data["elements"]:
        p = Permutation(tuple(e["perm"]))
        act[p] = Permutation(tuple(e["vertex_images"]))
        rep[p] = np.array(e["matrix"], dtype=float).reshape(4, 4)
    m = data["m"]
    ga = GroupAction(group, m, act)
    labels = tuple(v["part"] for v in sorted(data["vertices"], key=lambda v: v["id"]))
    va = VertexAction(ga, labels, ())
    coords = np.array([v["coords"] for v in sorted(data["vertices"], key=lambda v: v["id"])])
    cfg = ModelConfig(theta=data["model"]["theta"], t=data["model"]["t"],
                      seed=data["model"]["seed"])
    real = Realization(None, va, Model(data["model"]["tag"]), cfg, rep, coords)
    return va, real


def verify_certificate(data: dict) -> list[CheckResult]:
    """Re-run every check from file contents alone, in a fixed order.

    Stops at the first failure so callers can name the broken invariant.
    """
    results: list[CheckResult] = []

    def run(name: str, fn) -> bool:
        try:
            fn()
        except VerificationFailure:
            raise
        except Exception as err:
            results.append(CheckResult(name, False, str(err)))
            return False
        results.append(CheckResult(name, True))
        return True

    state: dict = {}

    def rebuild():
        state["va"], state["real"] = _rebuild(data)

    if not run("group-closure", rebuild):
        return results
    va: VertexAction = state["va"]
    real: Realization = state["real"]
    group = va.action.group

    def check_action_hom():
        for e1 in group.elements:
            for e2 in group.elements:
                if va.action.act[e1 * e2] != va.action.act[e1] * va.action.act[e2]:
                    raise AssertionError(f"vertex permutations break at {e1.images} * {e2.images}")
        if not is_faithful(va.action):
            raise AssertionError("vertex action is not faithful")

    if not run("action-homomorphism", check_action_hom):
        return results

    def check_matrices():
        eye = np.eye(4)
        for e, mat in real.rep.items():
            if float(np.abs(mat.T @ mat - eye).max()) > ORTHO_TOL:
                raise AssertionError(f"matrix of {e.images} not orthogonal")
            if abs(float(np.linalg.det(mat)) - 1.0) > ORTHO_TOL * 10:
                raise AssertionError(f"matrix of {e.images} has determinant != +1")
        err = _max_hom_error(group, real.rep)
        if err > HOM_TOL:
            raise AssertionError(f"matrix homomorphism error {err}")

    if not run("homomorphism", check_matrices):
        return results

    def check_invariance():
        for e in group.elements:
            moved = real.coords @ real.rep[e].T
            target = real.coords[list(va.action.act[e].images)]
            err = float(np.abs(moved - target).max())
            if err > INVARIANCE_TOL:
                raise AssertionError(f"element {e.images} moves vertices off their images by {err}")

    if not run("invariance", check_invariance):
        return results

    def check_separation():
        diff = np.linalg.norm(real.coords[:, None, :] - real.coords[None, :, :], axis=2)
        np.fill_diagonal(diff, np.inf)
        if float(diff.min()) < MIN_VERTEX_SEP:
            raise AssertionError(f"vertices only {diff.min()} apart")

    if not run("separation", check_separation):
        return results

    def check_profile():
        measured = measured_profile(va)
        geo = geometric_profile(real)
        if measured.key() != geo.key():
            raise AssertionError(f"combinatorial {measured.key()} != geometric {geo.key()}")
        stored = data["report"]["profile"]
        expect = {k: v for k, v in [
            ("n2", measured.n2), ("n2p", measured.n2p), ("n3", measured.n3),
            ("n4", measured.n4), ("n5", measured.n5)] if v is not None}
        if stored != expect:
            raise AssertionError(f"stored profile {stored} != recomputed {expect}")

    if not run("profile", check_profile):
        return results

    def check_orbits():
        count = burnside_orbit_count(va.action)
        if count != data["report"]["orbit_count"]:
            raise AssertionError(f"orbit count {count} != stored {data['report']['orbit_count']}")

    if not run("burnside", check_orbits):
        return results

    def check_hypotheses():
        report = full_report(va, real)
        if not report.overall:
            raise AssertionError(f"hypothesis checks failed: {report.details}")
        flags = {k: data["report"][k] for k in ("h1", "h2", "h3", "h4", "h5")}
        if not all(flags.values()):
            raise AssertionError(f"stored flags claim a failure: {flags}")
        fresh = report.arcs or {}
        stored_pairs = {tuple(a["pair"]) for a in data["arcs"]}
        if stored_pairs != set(fresh):
            raise AssertionError("stored arc pairs differ from recomputed assignment")
        for rec in data["arcs"]:
            arc = fresh[tuple(rec["pair"])]
            basis = np.array(rec["basis"])
            stored_arc = Arc(tuple(rec["pair"]), Permutation(tuple(rec["fixer"])),
                             type(arc.circle)(basis), rec["start"], rec["sweep"])
            if float(np.linalg.norm(stored_arc.midpoint - arc.midpoint)) > 1e-8 or \
               float(np.linalg.norm(stored_arc.point_at(0) - arc.point_at(0))) > 1e-8:
                raise AssertionError(f"stored arc for pair {rec['pair']} differs from recomputed")

    run("edge-hypotheses", check_hypotheses)
    return results


def first_failure(results: list[CheckResult]) -> Optional[CheckResult]:
    for res in results:
        if not res.ok:
            return res
    return None
