"""Interval graph recognition and the polynomial decider for R(k,1,1)."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .complex import SimplicialComplex, dimension, one_skeleton_edges
from .geometry import Polytope
from .nerve import ConvexFamily, nerve_skeleton
from .pqtree import consecutive_ones_order


@dataclass(frozen=True)
class Graph:
    vertices: tuple[str, ...]
    edges: frozenset[frozenset[str]]

    def __post_init__(self):
        vs = set(self.vertices)
        if len(vs) != len(self.vertices):
            raise ValueError("duplicate vertex")
        for e in self.edges:
            if len(e) != 2:
                raise ValueError("edges join two distinct vertices")
            if not e <= vs:
                raise ValueError(f"edge {sorted(e)} uses an undeclared vertex")

    @classmethod
    def from_edges(cls, vertices: Iterable[str], edges: Iterable[Iterable[str]]) -> Graph:
        return cls(tuple(vertices), frozenset(frozenset(e) for e in edges))

    @classmethod
    def one_skeleton(cls, K: SimplicialComplex) -> Graph:
        return cls.from_edges(K.vertices, one_skeleton_edges(K))

    def adjacency(self) -> dict[str, set[str]]:
        adj: dict[str, set[str]] = {v: set() for v in self.vertices}
        for e in self.edges:
            u, v = tuple(e)
            adj[u].add(v)
            adj[v].add(u)
        return adj


IntervalRealization = dict[str, tuple[Fraction, Fraction]]


def lex_bfs(vertices, adj) -> list[str]:
    """Lexicographic BFS by partition refinement; ties go to the earliest vertex."""
    parts = [list(vertices)]
    order = []
    while parts:
        v = parts[0].pop(0)
        if not parts[0]:
            parts.pop(0)
        order.append(v)
        refined = []
        for part in parts:
            inside = [u for u in part if u in adj[v]]
            outside = [u for u in part if u not in adj[v]]
            refined.extend(p for p in (inside, outside) if p)
        parts = refined
    return order


def perfect_elimination_order(G: Graph) -> list[str] | None:
    """Reverse Lex-BFS order if it is a perfect elimination order, else None."""
    adj = G.adjacency()
    peo = lex_bfs(G.vertices, adj)[::-1]
    pos = {v: i for i, v in enumerate(peo)}
    for v in peo:
        later = [u for u in adj[v] if pos[u] > pos[v]]
        if not later:
            continue
        parent = min(later, key=pos.__getitem__)
        if any(u != parent and u not in adj[parent] for u in later):
            return None
    return peo


def chordal_maximal_cliques(G: Graph, peo: list[str]) -> list[frozenset[str]]:
    adj = G.adjacency()
    pos = {v: i for i, v in enumerate(peo)}
    cands = [frozenset([v] + [u for u in adj[v] if pos[u] > pos[v]]) for v in peo]
    cands = sorted(set(cands), key=lambda c: (-len(c), sorted(c)))
    cliques: list[frozenset[str]] = []
    for c in cands:
        if not any(c <= k for k in cliques):
            cliques.append(c)
    return cliques


def recognize_interval(G: Graph) -> IntervalRealization | None:
    """Closed intervals of positive length realizing G, or None.

    Interval graphs are the chordal graphs whose maximal cliques can be
    ordered so that the cliques through each vertex are consecutive.
    """
    if not G.vertices:
        return {}
    peo = perfect_elimination_order(G)
    if peo is None:
        return None
    cliques = chordal_maximal_cliques(G, peo)
    rows = [[i for i, c in enumerate(cliques) if v in c] for v in G.vertices]
    order = consecutive_ones_order(list(range(len(cliques))), rows)
    if order is None:
        return None
    at = {c: i for i, c in enumerate(order)}
    half = Fraction(1, 2)
    out = {}
    for v, row in zip(G.vertices, rows):
        idx = [at[i] for i in row]
        out[v] = (Fraction(min(idx)), max(idx) + half)
    if not _realizes(G, out):
        raise AssertionError("interval realization does not reproduce the graph")
    return out


def _realizes(G: Graph, intervals: IntervalRealization) -> bool:
    vs = list(G.vertices)
    for i, u in enumerate(vs):
        for v in vs[i + 1:]:
            (a, b), (c, d) = intervals[u], intervals[v]
            meet = max(a, c) <= min(b, d)
            if meet != (frozenset((u, v)) in G.edges):
                return False
    return True


def interval_family(intervals: IntervalRealization) -> ConvexFamily:
    return ConvexFamily.of([(v, Polytope(1, ((lo,), (hi,)))) for v, (lo, hi) in intervals.items()])


def _first_missing_clique(K: SimplicialComplex, adj: dict[str, set[str]], limit: int):
    """First clique of at most ``limit`` vertices that is not a face of K.

    Cliques are grown from smaller ones that are faces; a non-face stops the
    search, so the enumeration only ever walks faces of K.
    """
    level = [(v,) for v in K.vertices]
    size = 1
    while level and size < limit:
        size += 1
        nxt = []
        for c in level:
            common = set.intersection(*(adj[u] for u in c))
            for v in sorted(common):
                if v <= c[-1]:
                    continue
                cand = c + (v,)
                if not K.is_face(cand):
                    return cand
                nxt.append(cand)
        level = nxt
    return None


@dataclass(frozen=True)
class Decision:
    answer: bool
    reason: str
    witness: ConvexFamily | None = None

    def __bool__(self) -> bool:
        return self.answer


def decide_R_k11(K: SimplicialComplex, k: int) -> Decision:
    """Is K the k-skeleton of the nerve of intervals (segments) on a line?"""
    if k < 1:
        raise ValueError("k must be >= 1")
    G = Graph.one_skeleton(K)
    adj = G.adjacency()
    for m in K.maximal_faces:
        assert all(v in adj[u] for u in m for v in m if u != v)
    intervals = recognize_interval(G)
    if intervals is None:
        return Decision(False, "one-skeleton is not an interval graph")
    if dimension(K) > k:
        return Decision(False, f"dimension {dimension(K)} exceeds {k}")
    missing = _first_missing_clique(K, adj, k + 1)
    if missing is not None:
        return Decision(False, f"clique {','.join(missing)} is not a face")
    family = interval_family(intervals) if intervals else None
    if family is not None and nerve_skeleton(family, k) != K:
        raise AssertionError("witness family does not realize K")
    return Decision(True, "ok", family)
