"""Nerves of convex families, certificate checking and the Helly-type harness."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .complex import Face, SimplicialComplex, _canonical, helly_fill, skeleton
from .geometry import (Point, Polytope, affine_dimension, affine_map, as_point,
                       feasible_common_point)


class FamilyError(ValueError):
    pass


@dataclass(frozen=True)
class ConvexFamily:
    ambient_dim: int
    members: tuple[tuple[str, Polytope], ...]

    def __post_init__(self):
        members = tuple((label, poly) for label, poly in self.members)
        if not members:
            raise FamilyError("a family needs at least one member")
        labels = [label for label, _ in members]
        if len(set(labels)) != len(labels):
            raise FamilyError("member labels must be unique")
        for label, poly in members:
            if not isinstance(label, str) or not label or "," in label:
                raise FamilyError(f"bad member label {label!r}")
            if poly.ambient_dim != self.ambient_dim:
                raise FamilyError(f"member {label!r} lives in R^{poly.ambient_dim}, "
                                  f"family in R^{self.ambient_dim}")
        object.__setattr__(self, "members", members)

    @classmethod
    def of(cls, members: dict[str, Polytope] | Iterable[tuple[str, Polytope]]) -> ConvexFamily:
        items = list(members.items() if isinstance(members, dict) else members)
        if not items:
            raise FamilyError("a family needs at least one member")
        return cls(items[0][1].ambient_dim, tuple(items))

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(label for label, _ in self.members)

    def __getitem__(self, label: str) -> Polytope:
        for lab, poly in self.members:
            if lab == label:
                return poly
        raise KeyError(label)

    def __len__(self) -> int:
        return len(self.members)

    def map(self, fn) -> ConvexFamily:
        return ConvexFamily.of([(label, fn(poly)) for label, poly in self.members])


def intersecting_subfamilies(F: ConvexFamily, max_size: int) -> list[Face]:
    """All label tuples of size <= max_size whose sets share a point.

    Grown by size; a subfamily is only tested when all of its one-smaller
    subfamilies intersect, since emptiness is inherited by supersets.
    """
    polys = dict(F.members)
    labels = sorted(polys)
    level = {(v,) for v in labels}
    found = list(level)
    size = 1
    while level and size < max_size:
        size += 1
        nxt = set()
        for f in sorted(level):
            for v in labels:
                if v <= f[-1]:
                    continue
                cand = f + (v,)
                if any(cand[:i] + cand[i + 1:] not in level for i in range(size - 1)):
                    continue
                if feasible_common_point([polys[u] for u in cand]) is not None:
                    nxt.add(cand)
        found.extend(nxt)
        level = nxt
    return found


def nerve_skeleton(F: ConvexFamily, k: int) -> SimplicialComplex:
    """k-skeleton of the nerve; beyond size d+1 faces follow from Helly's theorem."""
    if k < 1:
        raise FamilyError("k must be >= 1")
    d = F.ambient_dim
    faces = intersecting_subfamilies(F, min(k + 1, d + 1))
    K = _canonical(frozenset(f) for f in faces)
    if k > d:
        K = skeleton(helly_fill(K, d + 1), k)
    return K


def full_nerve(F: ConvexFamily) -> SimplicialComplex:
    d = F.ambient_dim
    return helly_fill(nerve_skeleton(F, d), d + 1)


def face_key(face: Iterable[str]) -> str:
    return ",".join(sorted(face))


@dataclass(frozen=True)
class Certificate:
    """One point per maximal face plus optional per-vertex padding points."""
    face_points: dict[str, Point]
    padding_points: dict[str, tuple[Point, ...]] = field(default_factory=dict)


@dataclass(frozen=True)
class Verdict:
    accepted: bool
    diagnostics: str

    def __bool__(self) -> bool:
        return self.accepted


class CertificateError(ValueError):
    pass


def realize_certificate(K: SimplicialComplex, d: int, cert: Certificate) -> ConvexFamily:
    """Family whose set for v is the hull of the points of maximal faces through v."""
    keys = {face_key(m): m for m in K.maximal_faces}
    for key in cert.face_points:
        if key not in keys:
            raise CertificateError(f"face point given for non-maximal face {key!r}")
    for v in cert.padding_points:
        if v not in K.vertices:
            raise CertificateError(f"padding points given for unknown vertex {v!r}")
    points: dict[str, list[Point]] = {v: [] for v in K.vertices}
    for key, m in keys.items():
        if key not in cert.face_points:
            raise CertificateError(f"missing face point for {key!r}")
        p = as_point(cert.face_points[key])
        if len(p) != d:
            raise CertificateError(f"face point for {key!r} has length {len(p)}, expected {d}")
        for v in m:
            points[v].append(p)
    for v, pad in cert.padding_points.items():
        for p in pad:
            p = as_point(p)
            if len(p) != d:
                raise CertificateError(f"padding point for {v!r} has length {len(p)}, expected {d}")
            points[v].append(p)
    return ConvexFamily(d, tuple((v, Polytope.hull(points[v])) for v in K.vertices))


def verify_certificate(K: SimplicialComplex, k: int, j: int, d: int,
                       cert: Certificate) -> Verdict:
    if not 0 <= j <= d:
        raise CertificateError("need 0 <= j <= d")
    if k < 1:
        raise CertificateError("need k >= 1")
    F = realize_certificate(K, d, cert)
    for v, poly in F.members:
        dim = affine_dimension(poly)
        if dim != j:
            return Verdict(False, f"set {v} has affine dimension {dim}, expected {j}")
    N = nerve_skeleton(F, k)
    if N != K:
        diff = _first_difference(N, K)
        return Verdict(False, diff)
    return Verdict(True, "ok")


def _first_difference(N: SimplicialComplex, K: SimplicialComplex) -> str:
    extra = [f for f in N.faces() if not K.is_face(f)]
    missing = [f for f in K.faces() if not N.is_face(f)]
    cands = [(f, "face {} is in the realized skeleton but not in K") for f in extra[:1]]
    cands += [(f, "face {} of K is not realized") for f in missing[:1]]
    f, msg = min(cands, key=lambda c: (len(c[0]), c[0]))
    return msg.format(face_key(f))


def certificate_from_realization(F: ConvexFamily, K: SimplicialComplex,
                                 j: int | None = None) -> Certificate:
    """Certificate built from a realizing family of K.

    Face points sit in the common intersection of each maximal face.  When
    ``j`` is given, each vertex is padded with original generators until its
    rebuilt set reaches affine dimension j; padding stays inside the original
    set so no intersection is created.
    """
    face_points = {}
    for m in K.maximal_faces:
        p = feasible_common_point([F[v] for v in m])
        if p is None:
            raise CertificateError(f"family does not realize face {face_key(m)}")
        face_points[face_key(m)] = p
    padding: dict[str, tuple[Point, ...]] = {}
    if j is not None:
        for v in K.vertices:
            pts = [face_points[face_key(m)] for m in K.maximal_faces if v in m]
            pad: list[Point] = []
            dim = affine_dimension(Polytope.hull(pts))
            for g in F[v].generators:
                if dim >= j:
                    break
                trial = affine_dimension(Polytope.hull(pts + pad + [g]))
                if trial > dim:
                    pad.append(g)
                    dim = trial
            if pad:
                padding[v] = tuple(pad)
    return Certificate(face_points, padding)


@dataclass(frozen=True)
class HellyReport:
    j: int
    premise_holds: bool
    conclusion_holds: bool
    reconstruction_ok: bool

    @property
    def consistent(self) -> bool:
        return (not self.premise_holds or self.conclusion_holds) and self.reconstruction_ok


def check_helly_type(F: ConvexFamily, j: int) -> HellyReport:
    """Check the Helly-type statement for sets of dimension at most j.

    premise: every j+2 or fewer members meet; conclusion: all members meet;
    reconstruction: the nerve equals the fill of its (j+1)-skeleton at h=j+2.
    """
    if j < 0:
        raise FamilyError("j must be >= 0")
    for label, poly in F.members:
        if affine_dimension(poly) > j:
            raise FamilyError(f"member {label!r} has affine dimension above {j}")
    n = len(F)
    low = nerve_skeleton(F, j + 1)
    premise = all(low.is_face(c) for s in range(1, min(n, j + 2) + 1)
                  for c in combinations(F.labels, s))
    N = full_nerve(F)
    conclusion = N.maximal_faces == (tuple(sorted(F.labels)),)
    rebuilt = helly_fill(low, j + 2)
    return HellyReport(j, premise, conclusion, rebuilt == N)


def transform_family(F: ConvexFamily, scale, shift: Sequence) -> ConvexFamily:
    return F.map(lambda P: affine_map(P, scale, shift))


def relabel_family(F: ConvexFamily, mapping: dict[str, str]) -> ConvexFamily:
    return ConvexFamily.of([(mapping[label], poly) for label, poly in F.members])

