"""JSON readers and writers for complexes, polytopes, families and certificates.

Rationals travel as strings "p/q" (or "p"); writers emit canonical documents
so identical inputs always serialize to identical bytes.
"""
from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from .complex import SimplicialComplex, make_complex
from .geometry import GeometryError, Polytope, as_point
from .nerve import Certificate, ConvexFamily


class FormatError(ValueError):
    pass


def dumps(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def load_path(path: str | Path) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: malformed JSON ({exc.msg} at line {exc.lineno})") from exc


def rational_to_json(x: Fraction) -> str:
    return str(x)


def point_to_json(p) -> list[str]:
    return [str(c) for c in p]


def point_from_json(doc) -> tuple[Fraction, ...]:
    if not isinstance(doc, list):
        raise FormatError("a point must be a JSON array")
    try:
        return as_point(doc)
    except GeometryError as exc:
        raise FormatError(str(exc)) from exc


def complex_to_json(K: SimplicialComplex) -> dict:
    return {"vertices": list(K.vertices), "maximal_faces": [list(m) for m in K.maximal_faces]}


def complex_from_json(doc) -> SimplicialComplex:
    if not isinstance(doc, dict) or "maximal_faces" not in doc:
        raise FormatError("complex JSON needs a 'maximal_faces' array")
    faces = doc["maximal_faces"]
    if not isinstance(faces, list) or not all(isinstance(f, list) for f in faces):
        raise FormatError("'maximal_faces' must be an array of arrays")
    verts = doc.get("vertices")
    if verts is not None and not isinstance(verts, list):
        raise FormatError("'vertices' must be an array")
    return make_complex(faces, vertices=verts)


def polytope_to_json(P: Polytope) -> dict:
    return {"ambient_dim": P.ambient_dim, "generators": [point_to_json(g) for g in P.generators]}


def polytope_from_json(doc) -> Polytope:
    if not isinstance(doc, dict) or "generators" not in doc:
        raise FormatError("polytope JSON needs 'generators'")
    gens = [point_from_json(g) for g in doc["generators"]]
    if not gens:
        raise FormatError("polytope needs at least one generator")
    d = doc.get("ambient_dim", len(gens[0]))
    if not isinstance(d, int):
        raise FormatError("'ambient_dim' must be an integer")
    return Polytope(d, tuple(gens))


def family_to_json(F: ConvexFamily) -> dict:
    return {
        "ambient_dim": F.ambient_dim,
        "members": [{"label": label, "generators": [point_to_json(g) for g in P.generators]}
                    for label, P in F.members],
    }


def family_from_json(doc) -> ConvexFamily:
    if not isinstance(doc, dict) or "ambient_dim" not in doc or "members" not in doc:
        raise FormatError("family JSON needs 'ambient_dim' and 'members'")
    d = doc["ambient_dim"]
    if not isinstance(d, int) or isinstance(d, bool):
        raise FormatError("'ambient_dim' must be an integer")
    members = []
    for m in doc["members"]:
        if not isinstance(m, dict) or "label" not in m or "generators" not in m:
            raise FormatError("each member needs 'label' and 'generators'")
        gens = tuple(point_from_json(g) for g in m["generators"])
        members.append((m["label"], Polytope(d, gens)))
    return ConvexFamily(d, tuple(members))


def certificate_to_json(cert: Certificate) -> dict:
    return {
        "face_points": {k: point_to_json(p) for k, p in cert.face_points.items()},
        "padding_points": {v: [point_to_json(p) for p in pts]
                           for v, pts in cert.padding_points.items()},
    }


def certificate_from_json(doc) -> Certificate:
    if not isinstance(doc, dict) or not isinstance(doc.get("face_points"), dict):
        raise FormatError("certificate JSON needs a 'face_points' object")
    faces = {",".join(sorted(k.split(","))): point_from_json(p)
             for k, p in doc["face_points"].items()}
    pad_doc = doc.get("padding_points", {})
    if not isinstance(pad_doc, dict):
        raise FormatError("'padding_points' must be an object")
    padding = {v: tuple(point_from_json(p) for p in pts) for v, pts in pad_doc.items()}
    return Certificate(faces, padding)


def intervals_to_family_json(intervals: dict[str, tuple[Fraction, Fraction]]) -> dict:
    return {
        "ambient_dim": 1,
        "members": [{"label": v, "generators": [[str(lo)], [str(hi)]]}
                    for v, (lo, hi) in sorted(intervals.items())],
    }

