"""Exact convex geometry on V-polytopes with rational coordinates.

Every set is the convex hull of finitely many generator points.  No function
here compares against a tolerance; all arithmetic is in :class:`Fraction`.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .lp import find_nonnegative_solution

Point = tuple[Fraction, ...]


class GeometryError(ValueError):
    pass


def as_rational(v) -> Fraction:
    if isinstance(v, float):
        raise GeometryError(f"refusing lossy float coordinate {v!r}; use 'p/q' strings")
    if isinstance(v, bool):
        raise GeometryError("booleans are not coordinates")
    try:
        return Fraction(v)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise GeometryError(f"not a rational number: {v!r}") from exc


def as_point(coords: Iterable) -> Point:
    p = tuple(as_rational(c) for c in coords)
    if not p:
        raise GeometryError("points need at least one coordinate")
    return p


@dataclass(frozen=True)
class Polytope:
    """Convex hull of ``generators`` in R^ambient_dim.

    Redundant generators are allowed.
    """
    ambient_dim: int
    generators: tuple[Point, ...]

    def __post_init__(self):
        gens = tuple(as_point(g) for g in self.generators)
        if not gens:
            raise GeometryError("a polytope needs at least one generator")
        if self.ambient_dim < 1:
            raise GeometryError("ambient dimension must be >= 1")
        for g in gens:
            if len(g) != self.ambient_dim:
                raise GeometryError(
                    f"generator of length {len(g)} in ambient dimension {self.ambient_dim}")
        object.__setattr__(self, "generators", gens)

    @classmethod
    def hull(cls, points: Iterable[Iterable]) -> Polytope:
        pts = [as_point(p) for p in points]
        if not pts:
            raise GeometryError("a polytope needs at least one generator")
        return cls(len(pts[0]), tuple(dict.fromkeys(pts)))

    def __contains__(self, x) -> bool:
        return contains(self, as_point(x))


@dataclass(frozen=True)
class Hyperplane:
    """The set {x : normal . x = offset}."""
    normal: tuple[Fraction, ...]
    offset: Fraction

    def __post_init__(self):
        n = as_point(self.normal)
        if all(c == 0 for c in n):
            raise GeometryError("hyperplane normal must be nonzero")
        object.__setattr__(self, "normal", n)
        object.__setattr__(self, "offset", as_rational(self.offset))

    @property
    def ambient_dim(self) -> int:
        return len(self.normal)

    def side(self, x: Sequence[Fraction]) -> int:
        """Sign of normal.x - offset."""
        s = dot(self.normal, x) - self.offset
        return (s > 0) - (s < 0)


def dot(u, v) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def _rank_basis(vectors: Iterable[Sequence[Fraction]]) -> list[list[Fraction]]:
    """Row-echelon basis (Gaussian elimination) of the span of ``vectors``."""
    rows: list[list[Fraction]] = []
    pivots: list[int] = []
    for v in vectors:
        v = list(v)
        for row, p in zip(rows, pivots):
            if v[p]:
                f = v[p] / row[p]
                v = [a - f * b for a, b in zip(v, row)]
        lead = next((i for i, a in enumerate(v) if a), None)
        if lead is not None:
            rows.append(v)
            pivots.append(lead)
    return rows


def _directions(P: Polytope) -> list[list[Fraction]]:
    v0 = P.generators[0]
    return [[a - b for a, b in zip(v, v0)] for v in P.generators[1:]]


def affine_dimension(P: Polytope) -> int:
    return len(_rank_basis(_directions(P)))


def feasible_common_point(sets: Sequence[Polytope]) -> Point | None:
    """A point lying in every hull of ``sets``, or None if they share none.

    Unknowns are convex-combination weights, one block per set; each block
    sums to one and every block must produce the same point as the first.
    """
    if not sets:
        raise GeometryError("need at least one set")
    d = sets[0].ambient_dim
    for s in sets:
        if s.ambient_dim != d:
            raise GeometryError("ambient dimension mismatch")
    if len(sets) == 1:
        return sets[0].generators[0]
    sizes = [len(s.generators) for s in sets]
    n = sum(sizes)
    offsets = [sum(sizes[:i]) for i in range(len(sets))]
    A: list[list[Fraction]] = []
    b: list[Fraction] = []
    zero = Fraction(0)
    for i, s in enumerate(sets):
        row = [zero] * n
        for t in range(sizes[i]):
            row[offsets[i] + t] = Fraction(1)
        A.append(row)
        b.append(Fraction(1))
    first = sets[0]
    for i, s in enumerate(sets[1:], start=1):
        for axis in range(d):
            row = [zero] * n
            for t, g in enumerate(first.generators):
                row[t] = g[axis]
            for t, g in enumerate(s.generators):
                row[offsets[i] + t] = -g[axis]
            A.append(row)
            b.append(zero)
    lam = find_nonnegative_solution(A, b)
    if lam is None:
        return None
    return tuple(sum((lam[t] * g[axis] for t, g in enumerate(first.generators)), zero)
                 for axis in range(d))


def contains(P: Polytope, x: Point) -> bool:
    if len(x) != P.ambient_dim:
        raise GeometryError("ambient dimension mismatch")
    return feasible_common_point([P, Polytope(P.ambient_dim, (x,))]) is not None


def separating_hyperplane(A: Polytope, B: Polytope) -> Hyperplane:
    """Strict separator with A on the negative side and B on the positive side.

    Solves the Farkas alternative of the intersection LP: find (c, t) with
    c.a <= t - 1 on A's generators and c.b >= t + 1 on B's.  It is feasible
    exactly when the hulls are disjoint.
    """
    d = A.ambient_dim
    if B.ambient_dim != d:
        raise GeometryError("ambient dimension mismatch")
    na, nb = len(A.generators), len(B.generators)
    # columns: c+ (d), c- (d), t+, t-, slacks for A, slacks for B
    width = 2 * d + 2 + na + nb
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for i, a in enumerate(A.generators):
        row = [Fraction(0)] * width
        row[:d] = a
        row[d:2 * d] = [-v for v in a]
        row[2 * d], row[2 * d + 1] = Fraction(-1), Fraction(1)
        row[2 * d + 2 + i] = Fraction(1)
        rows.append(row)
        rhs.append(Fraction(-1))
    for i, g in enumerate(B.generators):
        row = [Fraction(0)] * width
        row[:d] = g
        row[d:2 * d] = [-v for v in g]
        row[2 * d], row[2 * d + 1] = Fraction(-1), Fraction(1)
        row[2 * d + 2 + na + i] = Fraction(-1)
        rows.append(row)
        rhs.append(Fraction(1))
    sol = find_nonnegative_solution(rows, rhs)
    if sol is None:
        raise GeometryError("sets intersect; no separating hyperplane")
    normal = tuple(sol[i] - sol[d + i] for i in range(d))
    h = Hyperplane(normal, sol[2 * d] - sol[2 * d + 1])
    assert all(h.side(a) < 0 for a in A.generators)
    assert all(h.side(g) > 0 for g in B.generators)
    return h


@dataclass(frozen=True)
class HyperplaneChart:
    """Affine coordinates on a hyperplane: x = origin + sum_i t_i basis[i]."""
    hyperplane: Hyperplane
    origin: Point
    basis: tuple[Point, ...]

    def __post_init__(self):
        h = self.hyperplane
        d = h.ambient_dim
        if len(self.origin) != d or h.side(self.origin) != 0:
            raise GeometryError("chart origin must lie on the hyperplane")
        if len(self.basis) != d - 1:
            raise GeometryError("degenerate chart: wrong number of basis vectors")
        for v in self.basis:
            if len(v) != d or dot(h.normal, v) != 0:
                raise GeometryError("degenerate chart: basis vector leaves the hyperplane")
        if len(_rank_basis(self.basis)) != d - 1:
            raise GeometryError("degenerate chart: basis does not span the hyperplane")

    def lift(self, t: Sequence[Fraction]) -> Point:
        x = list(self.origin)
        for ti, v in zip(t, self.basis):
            for axis in range(len(x)):
                x[axis] += ti * v[axis]
        return tuple(x)

    def coordinates(self, x: Sequence[Fraction]) -> Point:
        """Chart coordinates of a point already on the hyperplane."""
        d = len(x)
        k = len(self.basis)
        # solve sum_i t_i basis[i] = x - origin by elimination on d x k system
        aug = [[self.basis[i][axis] for i in range(k)] + [x[axis] - self.origin[axis]]
               for axis in range(d)]
        t = _solve(aug, k)
        if t is None:
            raise GeometryError("point is not on the chart's hyperplane")
        return tuple(t)


def _solve(aug: list[list[Fraction]], k: int) -> list[Fraction] | None:
    rows = [r[:] for r in aug]
    piv_cols = []
    r = 0
    for c in range(k):
        p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        pv = rows[r][c]
        rows[r] = [v / pv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        piv_cols.append(c)
        r += 1
    if any(row[-1] for row in rows[r:]):
        return None
    t = [Fraction(0)] * k
    for i, c in enumerate(piv_cols):
        t[c] = rows[i][-1]
    return t


def hyperplane_chart(h: Hyperplane) -> HyperplaneChart:
    """Deterministic chart: solve the normal's equation for its pivot axis.

    The pivot is the axis of largest |normal| component (first on ties); the
    chart coordinates of a point are then its remaining coordinates.
    """
    n = h.normal
    d = len(n)
    piv = max(range(d), key=lambda i: (abs(n[i]), -i))
    origin = [Fraction(0)] * d
    origin[piv] = h.offset / n[piv]
    basis = []
    for axis in range(d):
        if axis == piv:
            continue
        v = [Fraction(0)] * d
        v[axis] = Fraction(1)
        v[piv] = -n[axis] / n[piv]
        basis.append(tuple(v))
    return HyperplaneChart(h, tuple(origin), tuple(basis))


def slice_polytope(P: Polytope, h: Hyperplane,
                   chart: HyperplaneChart | None = None) -> Polytope | None:
    """conv(P) intersected with h, expressed in ``chart`` coordinates.

    The intersection is the hull of generators on h together with the
    crossing point of every generator pair on strictly opposite sides.
    Returns None when the intersection is empty.
    """
    if P.ambient_dim != h.ambient_dim:
        raise GeometryError("ambient dimension mismatch")
    if P.ambient_dim < 2:
        raise GeometryError("cannot slice in dimension 1: the chart would be 0-dimensional")
    if chart is None:
        chart = hyperplane_chart(h)
    elif chart.hyperplane != h:
        raise GeometryError("chart belongs to a different hyperplane")
    vals = [dot(h.normal, g) - h.offset for g in P.generators]
    pts = [g for g, s in zip(P.generators, vals) if s == 0]
    neg = [(g, s) for g, s in zip(P.generators, vals) if s < 0]
    pos = [(g, s) for g, s in zip(P.generators, vals) if s > 0]
    for u, su in neg:
        for w, sw in pos:
            lam = su / (su - sw)
            pts.append(tuple(a + lam * (b - a) for a, b in zip(u, w)))
    if not pts:
        return None
    coords = [chart.coordinates(p) for p in dict.fromkeys(pts)]
    return prune_generators(Polytope(len(coords[0]), tuple(coords)))


def prune_generators(P: Polytope) -> Polytope:
    """Drop duplicate generators and generators inside the hull of the rest."""
    gens = list(dict.fromkeys(P.generators))
    i = 0
    while i < len(gens) and len(gens) > 1:
        rest = gens[:i] + gens[i + 1:]
        if contains(Polytope(P.ambient_dim, tuple(rest)), gens[i]):
            gens = rest
        else:
            i += 1
    return Polytope(P.ambient_dim, tuple(gens))


def prism(P: Polytope, lo, hi) -> Polytope:
    lo, hi = as_rational(lo), as_rational(hi)
    if not lo < hi:
        raise GeometryError("prism needs lo < hi")
    gens = [g + (lo,) for g in P.generators] + [g + (hi,) for g in P.generators]
    return Polytope(P.ambient_dim + 1, tuple(gens))


def extrusion_direction(P: Polytope) -> Point:
    """First standard basis vector outside the direction space of P."""
    span = _rank_basis(_directions(P))
    d = P.ambient_dim
    for axis in range(d):
        e = [Fraction(0)] * d
        e[axis] = Fraction(1)
        if len(_rank_basis(span + [e])) > len(span):
            return tuple(e)
    raise GeometryError("polytope is already full-dimensional")


def extrude(P: Polytope, eps) -> Polytope:
    eps = as_rational(eps)
    if eps <= 0:
        raise GeometryError("extrusion length must be positive")
    u = extrusion_direction(P)
    moved = [tuple(a + eps * b for a, b in zip(g, u)) for g in P.generators]
    return Polytope(P.ambient_dim, P.generators + tuple(moved))


def embed(P: Polytope) -> Polytope:
    return Polytope(P.ambient_dim + 1, tuple(g + (Fraction(0),) for g in P.generators))


def affine_map(P: Polytope, scale, shift: Sequence) -> Polytope:
    """Image of P under x -> scale * x + shift (scale a nonzero rational)."""
    scale = as_rational(scale)
    if scale == 0:
        raise GeometryError("scale must be nonzero")
    shift = as_point(shift)
    return Polytope(P.ambient_dim,
                    tuple(tuple(scale * a + s for a, s in zip(g, shift)) for g in P.generators))


def bounding_box(polytopes: Iterable[Polytope]) -> tuple[Point, Point]:
    polys = list(polytopes)
    d = polys[0].ambient_dim
    gens = [g for p in polys for g in p.generators]
    return (tuple(min(g[i] for g in gens) for i in range(d)),
            tuple(max(g[i] for g in gens) for i in range(d)))


def box(lo: Sequence[Fraction], hi: Sequence[Fraction]) -> Polytope:
    """Axis-parallel box; axes with lo == hi contribute no extent."""
    pts = [()]
    for a, b in zip(lo, hi):
        choices = (a,) if a == b else (a, b)
        pts = [p + (c,) for p in pts for c in choices]
    return Polytope(len(lo), tuple(pts))
