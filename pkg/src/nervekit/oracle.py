"""Brute-force oracles and seeded instance generators for differential tests."""
from __future__ import annotations

import math
import random
import string
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .complex import SimplicialComplex, _canonical, make_complex, relabel, skeleton
from .geometry import Polytope, affine_dimension, feasible_common_point
from .nerve import ConvexFamily

MAX_BRUTE_MEMBERS = 12
MAX_INTERVAL_VERTICES = 5
DENOMINATORS = (1, 2, 3, 4)


def brute_nerve(F: ConvexFamily) -> SimplicialComplex:
    """Nerve by testing all 2^n - 1 subfamilies, no pruning, no Helly."""
    if len(F) > MAX_BRUTE_MEMBERS:
        raise ValueError(f"brute_nerve is limited to {MAX_BRUTE_MEMBERS} members")
    polys = dict(F.members)
    labels = sorted(polys)
    faces = []
    for size in range(1, len(labels) + 1):
        for sub in combinations(labels, size):
            if feasible_common_point([polys[v] for v in sub]) is not None:
                faces.append(frozenset(sub))
    return _canonical(faces)


def _endpoint_orders(n: int):
    """Every left-to-right order of 2n distinct endpoints, L_i before R_i.

    Yields (left, right) position lists.
    """
    left = [0] * n
    right = [0] * n
    state = [0] * n  # 0 unopened, 1 open, 2 closed

    def rec(pos):
        if pos == 2 * n:
            yield tuple(left), tuple(right)
            return
        for i in range(n):
            if state[i] == 0:
                state[i], left[i] = 1, pos
                yield from rec(pos + 1)
                state[i] = 0
            elif state[i] == 1:
                state[i], right[i] = 2, pos
                yield from rec(pos + 1)
                state[i] = 1

    yield from rec(0)


@lru_cache(maxsize=None)
def interval_nerves(n: int) -> tuple[SimplicialComplex, ...]:
    """All nerves of n labelled intervals of positive length, labels '0'..'n-1'.

    Touching endpoints can always be pulled apart without changing the nerve,
    so orders of distinct endpoints cover every case.  Orders are grouped by
    their combinatorial signature and one exact family per signature goes
    through :func:`brute_nerve`.
    """
    if n > MAX_INTERVAL_VERTICES:
        raise ValueError(f"interval enumeration is limited to {MAX_INTERVAL_VERTICES} vertices")
    subsets = [s for size in range(1, n + 1) for s in combinations(range(n), size)]
    reps = {}
    for left, right in _endpoint_orders(n):
        sig = frozenset(s for s in subsets
                        if max(left[i] for i in s) < min(right[i] for i in s))
        reps.setdefault(sig, (left, right))
    out = []
    for left, right in reps.values():
        F = ConvexFamily.of([(str(i), Polytope(1, ((Fraction(left[i]),), (Fraction(right[i]),))))
                             for i in range(n)])
        out.append(brute_nerve(F))
    return tuple(sorted(set(out), key=lambda K: K.maximal_faces))


def brute_interval_decide(K: SimplicialComplex, k: int) -> bool:
    n = len(K.vertices)
    if n > MAX_INTERVAL_VERTICES:
        raise ValueError(f"brute_interval_decide is limited to {MAX_INTERVAL_VERTICES} vertices")
    if n == 0:
        return True
    names = {str(i): v for i, v in enumerate(K.vertices)}
    return any(skeleton(relabel(N, names), k) == K for N in interval_nerves(n))


def brute_interval_graph(vertices, edges) -> bool:
    """Whether some order of interval endpoints realizes the graph.

    Endpoints are placed left to right.  Opening v requires every open
    interval to be a neighbour; closing v requires every neighbour to have
    opened already.  Reachable (opened, closed) states are memoized.
    """
    verts = list(vertices)
    idx = {v: i for i, v in enumerate(verts)}
    nbr = [0] * len(verts)
    for u, v in edges:
        nbr[idx[u]] |= 1 << idx[v]
        nbr[idx[v]] |= 1 << idx[u]
    full = (1 << len(verts)) - 1

    @lru_cache(maxsize=None)
    def search(opened: int, closed: int) -> bool:
        if closed == full:
            return True
        active = opened & ~closed
        for i in range(len(verts)):
            bit = 1 << i
            if not opened & bit:
                if active & ~nbr[i] == 0 and search(opened | bit, closed):
                    return True
            elif not closed & bit:
                if nbr[i] & ~opened == 0 and search(opened, closed | bit):
                    return True
        return False

    return search(0, 0)


@dataclass(frozen=True)
class GeneratorConfig:
    """Parameters of :func:`random_family`.

    ``flat_pool`` caps the number of distinct flats (shared flats make
    intersections likely); ``anchor`` routes every flat through one common
    point and puts that point into most members; ``exact_dim`` redraws a
    member until its affine dimension equals the flat dimension.
    """
    seed: int
    count: int
    ambient_dim: int
    flat_dim: int | None = None
    coordinate_bound: int = 4
    max_generators: int = 4
    exact_dim: bool = False
    flat_pool: int | None = None
    anchor: bool = False

    def __post_init__(self):
        if self.count < 1:
            raise ValueError("count must be >= 1")
        if self.ambient_dim < 1:
            raise ValueError("ambient_dim must be >= 1")
        if self.flat_dim is not None and not 0 <= self.flat_dim <= self.ambient_dim:
            raise ValueError("flat_dim must lie in [0, ambient_dim]")
        if self.coordinate_bound < 1 or self.max_generators < 1:
            raise ValueError("coordinate_bound and max_generators must be >= 1")
        if self.flat_pool is not None and self.flat_pool < 1:
            raise ValueError("flat_pool must be >= 1")


def _rational(rng: random.Random, bound: Fraction) -> Fraction:
    q = rng.choice(DENOMINATORS)
    top = math.floor(bound * q)
    return Fraction(rng.randint(-top, top), q)


def member_labels(n: int) -> list[str]:
    if n <= 26:
        return list(string.ascii_uppercase[:n])
    return [f"v{i}" for i in range(n)]


def _random_flat(rng, d, f, bound, origin):
    while True:
        basis = [tuple(_rational(rng, Fraction(1)) for _ in range(d)) for _ in range(f)]
        if f == 0 or affine_dimension(Polytope(d, ((Fraction(0),) * d,) + tuple(basis))) == f:
            break
    if origin is None:
        origin = tuple(_rational(rng, Fraction(bound, 2)) for _ in range(d))
    return origin, basis


def random_family(cfg: GeneratorConfig) -> ConvexFamily:
    rng = random.Random(cfg.seed)
    d = cfg.ambient_dim
    f = d if cfg.flat_dim is None else cfg.flat_dim
    bound = Fraction(cfg.coordinate_bound)
    anchor = tuple(_rational(rng, bound / 2) for _ in range(d)) if cfg.anchor else None
    pool = []
    members = []
    for label in member_labels(cfg.count):
        if f < d:
            if cfg.flat_pool is None or len(pool) < cfg.flat_pool:
                pool.append(_random_flat(rng, d, f, cfg.coordinate_bound, anchor))
                flat = pool[-1]
            else:
                flat = rng.choice(pool)
        while True:
            npts = rng.randint(1, cfg.max_generators)
            if cfg.exact_dim:
                npts = max(npts, f + 1)
            if f == d:
                pts = [tuple(_rational(rng, bound) for _ in range(d)) for _ in range(npts)]
            else:
                origin, basis = flat
                # keeps |coordinate| <= bound: |origin| <= bound/2, |basis| <= 1
                step = bound / (2 * max(f, 1))
                pts = []
                for _ in range(npts):
                    t = [_rational(rng, step) for _ in range(f)]
                    pts.append(tuple(origin[i] + sum((t[r] * basis[r][i] for r in range(f)),
                                                     Fraction(0)) for i in range(d)))
            if anchor is not None and rng.random() < 0.75:
                pts.append(anchor)
            poly = Polytope.hull(pts)
            if not cfg.exact_dim or affine_dimension(poly) == f:
                break
        members.append((label, poly))
    return ConvexFamily(d, tuple(members))


def all_complexes(n: int) -> list[SimplicialComplex]:
    """Every complex on the ground set of the first n lowercase letters."""
    verts = list(string.ascii_lowercase[:n])
    subsets = [frozenset(s) for size in range(n, 0, -1) for s in combinations(verts, size)]
    out = []

    def rec(i, chosen):
        if i == len(subsets):
            if chosen and frozenset().union(*chosen) == set(verts):
                out.append(make_complex(chosen))
            return
        s = subsets[i]
        if not any(s <= c for c in chosen):
            rec(i + 1, chosen + [s])
        rec(i + 1, chosen)

    rec(0, [])
    return out


def random_complex(rng: random.Random, n: int, max_faces: int = 5) -> SimplicialComplex:
    verts = list(string.ascii_lowercase[:n])
    faces = [rng.sample(verts, rng.randint(1, rng.randint(1, n)))
             for _ in range(rng.randint(1, max_faces))]
    return make_complex(faces, vertices=verts)
