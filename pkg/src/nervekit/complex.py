"""Abstract simplicial complexes stored by their maximal faces.

A complex is kept in one canonical form: vertex labels sorted, every maximal
face a sorted tuple, and the list of maximal faces sorted lexicographically.
Structural equality of two :class:`SimplicialComplex` values is therefore the
same thing as equality of the complexes they describe.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

Face = tuple[str, ...]


class ComplexError(ValueError):
    """Raised for malformed complex input."""


@dataclass(frozen=True)
class SimplicialComplex:
    vertices: tuple[str, ...]
    maximal_faces: tuple[Face, ...]

    def __post_init__(self):
        seen = set()
        for face in self.maximal_faces:
            if not face:
                raise ComplexError("maximal faces must be nonempty")
            seen.update(face)
        if seen != set(self.vertices):
            raise ComplexError("every vertex must lie in some maximal face")

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, face) -> bool:
        return self.is_face(face)

    def is_face(self, face: Iterable[str]) -> bool:
        s = set(face)
        if not s:
            return True
        return any(s.issubset(m) for m in self.maximal_faces)

    def faces(self, max_size: int | None = None) -> Iterator[Face]:
        """Yield every nonempty face once, in canonical order."""
        top = max((len(m) for m in self.maximal_faces), default=0)
        if max_size is not None:
            top = min(top, max_size)
        for size in range(1, top + 1):
            level = set()
            for m in self.maximal_faces:
                if len(m) >= size:
                    level.update(combinations(m, size))
            yield from sorted(level)

    def face_count(self) -> int:
        return sum(1 for _ in self.faces())

    def __str__(self) -> str:
        return "{" + ", ".join("{" + ",".join(m) + "}" for m in self.maximal_faces) + "}"


def _maximal(faces: Iterable[frozenset]) -> list[frozenset]:
    # larger faces first so each face only needs checking against kept ones
    ordered = sorted(set(faces), key=len, reverse=True)
    kept: list[frozenset] = []
    for f in ordered:
        if not any(f <= g for g in kept):
            kept.append(f)
    return kept


def make_complex(faces: Iterable[Iterable[str]],
                 vertices: Iterable[str] | None = None) -> SimplicialComplex:
    """Build the complex generated by ``faces``.

    ``vertices`` optionally declares the ground set; declared vertices that
    occur in no face become isolated (singleton maximal faces).
    """
    faces = [frozenset(_check_label(v) for v in f) for f in faces]
    if any(not f for f in faces):
        raise ComplexError("empty face")
    if vertices is not None:
        vertices = [_check_label(v) for v in vertices]
        if len(set(vertices)) != len(vertices):
            raise ComplexError("duplicate vertex label declaration")
        declared = set(vertices)
        for f in faces:
            unknown = f - declared
            if unknown:
                raise ComplexError(f"face uses undeclared vertex {sorted(unknown)[0]!r}")
        covered = set().union(*faces) if faces else set()
        faces.extend(frozenset([v]) for v in declared - covered)
    return _canonical(faces)


def _canonical(faces: Iterable[frozenset]) -> SimplicialComplex:
    maximal = sorted(tuple(sorted(f)) for f in _maximal(faces))
    verts = tuple(sorted(set().union(*maximal))) if maximal else ()
    return SimplicialComplex(verts, tuple(maximal))


def _check_label(v) -> str:
    if not isinstance(v, str) or not v:
        raise ComplexError(f"vertex labels must be nonempty strings, got {v!r}")
    return v


def dimension(K: SimplicialComplex) -> int:
    """Largest face size minus one; -1 for the empty complex."""
    return max((len(m) for m in K.maximal_faces), default=0) - 1


def skeleton(K: SimplicialComplex, k: int) -> SimplicialComplex:
    if k < 0:
        raise ComplexError("skeleton dimension must be >= 0")
    out = []
    for m in K.maximal_faces:
        if len(m) <= k + 1:
            out.append(frozenset(m))
        else:
            out.extend(frozenset(c) for c in combinations(m, k + 1))
    return _canonical(out)


def suspension(K: SimplicialComplex, a: str, b: str) -> SimplicialComplex:
    """Join K with the two-point complex {a}, {b}."""
    _check_label(a)
    _check_label(b)
    if a == b:
        raise ComplexError("suspension apexes must differ")
    clash = {a, b} & set(K.vertices)
    if clash:
        raise ComplexError(f"apex label {sorted(clash)[0]!r} already in the ground set")
    if not K.maximal_faces:
        return _canonical([frozenset([a]), frozenset([b])])
    out = []
    for m in K.maximal_faces:
        out.append(frozenset(m) | {a})
        out.append(frozenset(m) | {b})
    return _canonical(out)


def helly_fill(S: SimplicialComplex, h: int) -> SimplicialComplex:
    """Largest complex on S's ground set whose faces of size <= h are S's.

    A set belongs to the result iff every subset of at most ``h`` elements is
    a face of S.  Faces above size h are grown level by level: f + {v} is
    kept when all of its one-smaller subsets were kept on the previous level.
    """
    if h < 2:
        raise ComplexError("Helly number must be >= 2")
    low = [frozenset(f) for f in S.faces(max_size=h)]
    level = {tuple(f) for f in S.faces(max_size=h) if len(f) == h}
    out = list(low)
    adj: dict[str, set[str]] = {v: set() for v in S.vertices}
    for u, v in one_skeleton_edges(S):
        adj[u].add(v)
        adj[v].add(u)
    while level:
        nxt = set()
        for f in level:
            for v in adj[f[-1]] & adj[f[0]]:
                if v <= f[-1]:
                    continue
                cand = f + (v,)
                if all(cand[:i] + cand[i + 1:] in level for i in range(len(cand) - 1)):
                    nxt.add(cand)
        out.extend(frozenset(f) for f in nxt)
        level = nxt
    return _canonical(out)


def one_skeleton_edges(K: SimplicialComplex) -> list[tuple[str, str]]:
    edges = set()
    for m in K.maximal_faces:
        edges.update(combinations(m, 2))
    return sorted(edges)


def relabel(K: SimplicialComplex, mapping: dict[str, str]) -> SimplicialComplex:
    if len(set(mapping[v] for v in K.vertices)) != len(K.vertices):
        raise ComplexError("relabeling must be injective")
    return _canonical(frozenset(mapping[v] for v in m) for m in K.maximal_faces)
