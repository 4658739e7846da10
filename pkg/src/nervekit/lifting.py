"""Suspension lift/projection and the embed/extrude constructions on families."""
from __future__ import annotations

import logging
from fractions import Fraction

from .geometry import (GeometryError, affine_dimension, bounding_box, box, embed,
                       extrude, feasible_common_point, hyperplane_chart, prism,
                       separating_hyperplane, slice_polytope)
from .nerve import ConvexFamily, FamilyError, full_nerve

log = logging.getLogger(__name__)

PRISM_LO, PRISM_HI = Fraction(-2), Fraction(2)
MARGIN = Fraction(1)


def lift_suspension(F: ConvexFamily, j: int, a: str, b: str) -> ConvexFamily:
    """Realize the suspension of N(F) in one dimension higher.

    Each set becomes its prism over [-2, 2].  The apex sets sit at height 1
    and -1: flat boxes when j = d-1, slabs [1, 3/2] and [-3/2, -1] when
    j = d so that they are (j+1)-dimensional as well.
    """
    d = F.ambient_dim
    if j not in (d - 1, d):
        raise FamilyError(f"lifting needs j in {{d-1, d}}, got j={j}, d={d}")
    if a == b:
        raise FamilyError("apex labels must differ")
    for label in (a, b):
        if label in F.labels:
            raise FamilyError(f"apex label {label!r} already used in the family")
    for label, poly in F.members:
        dim = affine_dimension(poly)
        if dim != j:
            raise FamilyError(f"member {label!r} has affine dimension {dim}, expected {j}")
    members = [(label, prism(poly, PRISM_LO, PRISM_HI)) for label, poly in F.members]
    lo, hi = bounding_box(poly for _, poly in F.members)
    lo = tuple(x - MARGIN for x in lo)
    hi = tuple(x + MARGIN for x in hi)
    if j == d - 1:
        top = box(lo + (Fraction(1),), hi + (Fraction(1),))
        bottom = box(lo + (Fraction(-1),), hi + (Fraction(-1),))
    else:
        top = box(lo + (Fraction(1),), hi + (Fraction(3, 2),))
        bottom = box(lo + (Fraction(-3, 2),), hi + (Fraction(-1),))
    members += [(a, top), (b, bottom)]
    return ConvexFamily(d + 1, tuple(members))


def project_suspension(F2: ConvexFamily, a: str, b: str) -> ConvexFamily:
    """Cut a realization of a suspension by a hyperplane separating the apexes."""
    for label in (a, b):
        if label not in F2.labels:
            raise FamilyError(f"no member labelled {label!r}")
    if a == b:
        raise FamilyError("apex labels must differ")
    A, B = F2[a], F2[b]
    try:
        h = separating_hyperplane(A, B)
    except GeometryError as exc:
        raise FamilyError(f"apex sets {a!r} and {b!r} intersect") from exc
    chart = hyperplane_chart(h)
    members = []
    for label, poly in F2.members:
        if label in (a, b):
            continue
        cut = slice_polytope(poly, h, chart)
        if cut is None:
            meets_both = (feasible_common_point([poly, A]) is not None
                          and feasible_common_point([poly, B]) is not None)
            if meets_both:
                raise AssertionError(f"member {label!r} meets both apexes but misses the cut")
            log.warning("dropping member %r: it does not meet both apex sets", label)
            continue
        members.append((label, cut))
    if not members:
        raise FamilyError("no member crosses the separating hyperplane")
    return ConvexFamily(F2.ambient_dim - 1, tuple(members))


def embed_family(F: ConvexFamily) -> ConvexFamily:
    return ConvexFamily(F.ambient_dim + 1, tuple((label, embed(p)) for label, p in F.members))


def extrusion_length(F: ConvexFamily, start: Fraction = Fraction(1),
                     max_halvings: int = 64) -> Fraction:
    """Largest length ``start / 2**i`` whose extrusion keeps the nerve of F."""
    for label, poly in F.members:
        if affine_dimension(poly) >= F.ambient_dim:
            raise FamilyError(f"member {label!r} is already full-dimensional")
    target = full_nerve(F)
    eps = Fraction(start)
    for _ in range(max_halvings):
        if full_nerve(F.map(lambda p: extrude(p, eps))) == target:
            return eps
        eps /= 2
    raise FamilyError("no extrusion length preserved the nerve")


def extrude_family(F: ConvexFamily) -> ConvexFamily:
    """Thicken every member by one dimension without changing the nerve."""
    eps = extrusion_length(F)
    return F.map(lambda p: extrude(p, eps))
