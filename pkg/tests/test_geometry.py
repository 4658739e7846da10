import random
from fractions import Fraction as Q
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from nervekit.geometry import (GeometryError, Hyperplane, HyperplaneChart, Polytope,
                               affine_dimension, contains, dot, embed, extrude,
                               feasible_common_point, hyperplane_chart, prism,
                               separating_hyperplane, slice_polytope)
from nervekit.lp import check_nonnegative_solution, find_nonnegative_solution


def P(*pts):
    return Polytope.hull([[Q(c) for c in p] for p in pts])


def seg(lo, hi):
    return P((lo,), (hi,))


# ---------------------------------------------------------------- exact LP

def _solve_square(cols, b):
    """Unique solution of the system with the given columns, if any."""
    m, k = len(b), len(cols)
    aug = [[cols[c][r] for c in range(k)] + [b[r]] for r in range(m)]
    row = 0
    piv = []
    for c in range(k):
        p = next((i for i in range(row, m) if aug[i][c]), None)
        if p is None:
            return None  # dependent columns
        aug[row], aug[p] = aug[p], aug[row]
        pv = aug[row][c]
        aug[row] = [v / pv for v in aug[row]]
        for i in range(m):
            if i != row and aug[i][c]:
                f = aug[i][c]
                aug[i] = [a - f * bb for a, bb in zip(aug[i], aug[row])]
        piv.append(c)
        row += 1
    if any(r[-1] for r in aug[row:]):
        return None
    return [aug[i][-1] for i in range(k)]


def basic_solution_oracle(A, b):
    """Feasibility of Ax=b, x>=0 by enumerating candidate bases."""
    m, n = len(A), len(A[0])
    columns = [[A[r][c] for r in range(m)] for c in range(n)]
    for size in range(0, min(m, n) + 1):
        for S in combinations(range(n), size):
            x = _solve_square([columns[c] for c in S], b)
            if x is not None and all(v >= 0 for v in x):
                return True
    return False


def test_lp_agrees_with_basis_enumeration():
    rng = random.Random(11)
    for _ in range(600):
        m, n = rng.randint(1, 4), rng.randint(1, 6)
        A = [[Q(rng.randint(-3, 3), rng.choice([1, 2, 3])) for _ in range(n)] for _ in range(m)]
        b = [Q(rng.randint(-3, 3)) for _ in range(m)]
        x = find_nonnegative_solution(A, b)
        assert (x is not None) == basic_solution_oracle(A, b)
        if x is not None:
            assert check_nonnegative_solution(A, b, x)


def test_lp_degenerate_cycling_example():
    # Beale's classic cycling instance in equality form (slacks appended)
    A = [[Q(1, 4), Q(-8), Q(-1), Q(9), Q(1), Q(0), Q(0)],
         [Q(1, 2), Q(-12), Q(-1, 2), Q(3), Q(0), Q(1), Q(0)],
         [Q(0), Q(0), Q(1), Q(0), Q(0), Q(0), Q(1)]]
    b = [Q(0), Q(0), Q(1)]
    x = find_nonnegative_solution(A, b)
    assert x is not None and check_nonnegative_solution(A, b, x)


# ---------------------------------------------------------- affine dimension

@pytest.mark.parametrize("pts,dim", [
    ([(0, 0)], 0),
    ([(0, 0), (1, 1)], 1),
    ([(0, 0), (1, 0), (0, 1)], 2),
    ([(0, 0), (1, 1), (2, 2), (3, 3)], 1),
    ([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0)], 2),
])
def test_affine_dimension(pts, dim):
    assert affine_dimension(P(*pts)) == dim


# --------------------------------------------------------- common points

class TestFeasibleCommonPoint:
    def test_disjoint_intervals(self):
        assert feasible_common_point([seg(0, 1), seg(2, 3)]) is None

    def test_overlapping_intervals(self):
        x = feasible_common_point([seg(0, 2), seg(1, 3)])
        assert x is not None and 1 <= x[0] <= 2
        assert contains(seg(0, 2), x) and contains(seg(1, 3), x)

    def test_triangle_sides(self):
        a, b, c = (0, 0), (1, 0), (0, 1)
        sides = [P(a, b), P(b, c), P(c, a)]
        assert feasible_common_point(sides) is None
        for s, t in combinations(sides, 2):
            assert feasible_common_point([s, t]) is not None

    def test_dimension_mismatch(self):
        with pytest.raises(GeometryError):
            feasible_common_point([seg(0, 1), P((0, 0))])

    @settings(max_examples=300)
    @given(st.lists(st.tuples(st.fractions(-5, 5, max_denominator=4),
                              st.fractions(-5, 5, max_denominator=4)), min_size=1, max_size=5))
    def test_interval_oracle(self, ends):
        intervals = [(min(a, b), max(a, b)) for a, b in ends]
        x = feasible_common_point([seg(lo, hi) for lo, hi in intervals])
        expected = max(lo for lo, _ in intervals) <= min(hi for _, hi in intervals)
        assert (x is not None) == expected
        if x is not None:
            assert all(lo <= x[0] <= hi for lo, hi in intervals)

    def test_witness_is_member_of_every_set(self):
        rng = random.Random(3)
        for _ in range(60):
            d = rng.randint(1, 3)
            sets = [Polytope.hull([[Q(rng.randint(-3, 3), rng.choice([1, 2]))
                                    for _ in range(d)] for _ in range(rng.randint(1, 4))])
                    for _ in range(rng.randint(1, 3))]
            x = feasible_common_point(sets)
            if x is not None:
                assert all(contains(s, x) for s in sets)


# ----------------------------------------------------------- separation

class TestSeparatingHyperplane:
    def check(self, A, B):
        h = separating_hyperplane(A, B)
        assert all(h.side(a) < 0 for a in A.generators)
        assert all(h.side(b) > 0 for b in B.generators)
        return h

    def test_points(self):
        self.check(P((0,)), P((1,)))

    def test_unit_squares(self):
        sq = lambda o: P((o, o), (o + 1, o), (o, o + 1), (o + 1, o + 1))  # noqa: E731
        self.check(sq(0), sq(2))

    def test_vertical_segments(self):
        h = self.check(P((0, 0), (0, 1)), P((1, 0), (1, 1)))
        assert h.normal[1] == 0 and h.normal[0] > 0

    def test_intersecting_raises(self):
        with pytest.raises(GeometryError):
            separating_hyperplane(seg(0, 2), seg(1, 3))

    def test_random_disjoint_pairs(self):
        rng = random.Random(8)
        done = 0
        while done < 80:
            d = rng.randint(1, 3)
            A, B = (Polytope.hull([[Q(rng.randint(-4, 4), rng.choice([1, 2, 3]))
                                    for _ in range(d)] for _ in range(rng.randint(1, 4))])
                    for _ in range(2))
            if feasible_common_point([A, B]) is None:
                self.check(A, B)
                done += 1


# --------------------------------------------------------------- slicing

class TestSlice:
    def test_cube(self):
        cube = P(*[(x, y, z) for x in (0, 1) for y in (0, 1) for z in (0, 1)])
        h = Hyperplane((0, 0, 1), Q(1, 2))
        out = slice_polytope(cube, h)
        assert set(out.generators) == {(Q(x), Q(y)) for x in (0, 1) for y in (0, 1)}

    def test_segment_to_point(self):
        out = slice_polytope(P((0, 0, -1), (0, 0, 1)), Hyperplane((0, 0, 1), 0))
        assert out.generators == ((Q(0), Q(0)),)

    def test_triangle(self):
        out = slice_polytope(P((0, 0), (2, 0), (0, 2)), Hyperplane((1, 0), 1))
        assert sorted(out.generators) == [(Q(0),), (Q(1),)]

    def test_miss(self):
        assert slice_polytope(P((0, 0), (1, 0)), Hyperplane((0, 1), 5)) is None

    def test_degenerate_chart_rejected(self):
        h = Hyperplane((0, 0, 1), 0)
        with pytest.raises(GeometryError):
            HyperplaneChart(h, (Q(0), Q(0), Q(0)), ((Q(1), Q(0), Q(0)), (Q(2), Q(0), Q(0))))
        with pytest.raises(GeometryError):
            HyperplaneChart(h, (Q(0), Q(0), Q(0)), ((Q(1), Q(0), Q(0)),))
        with pytest.raises(GeometryError):
            HyperplaneChart(h, (Q(0), Q(0), Q(1)), ((Q(1), Q(0), Q(0)), (Q(0), Q(1), Q(0))))

    def test_random_slices_lie_in_polytope_and_plane(self):
        rng = random.Random(2024)
        checked = 0
        for _ in range(500):
            d = rng.randint(2, 4)
            poly = Polytope.hull([[Q(rng.randint(-4, 4), rng.choice([1, 2])) for _ in range(d)]
                                  for _ in range(rng.randint(1, 6))])
            normal = [Q(rng.randint(-2, 2)) for _ in range(d)]
            if not any(normal):
                normal[0] = Q(1)
            h = Hyperplane(tuple(normal), Q(rng.randint(-3, 3), rng.choice([1, 2])))
            chart = hyperplane_chart(h)
            out = slice_polytope(poly, h, chart)
            if out is None:
                continue
            lifted = [chart.lift(g) for g in out.generators]
            for x in lifted:
                assert h.side(x) == 0 and contains(poly, x)
            w = [Q(rng.randint(1, 5)) for _ in lifted]
            tot = sum(w)
            mix = tuple(sum(wi * x[i] for wi, x in zip(w, lifted)) / tot for i in range(d))
            assert h.side(mix) == 0 and contains(poly, mix)
            checked += 1
        assert checked > 100


# ------------------------------------------------- prism / extrude / embed

@pytest.mark.parametrize("pts,lo,hi", [
    ([(0,)], -2, 2),
    ([(0,), (1,)], -2, 2),
    ([(0, 0), (1, 0), (0, 1)], 0, 1),
])
def test_prism(pts, lo, hi):
    base = P(*pts)
    out = prism(base, lo, hi)
    assert out.ambient_dim == base.ambient_dim + 1
    assert affine_dimension(out) == affine_dimension(base) + 1


def test_prism_rectangle_generators():
    out = prism(seg(0, 1), -2, 2)
    assert set(out.generators) == {(Q(x), Q(y)) for x in (0, 1) for y in (-2, 2)}


def test_prism_rejects_empty_range():
    with pytest.raises(GeometryError):
        prism(seg(0, 1), 1, 1)


@pytest.mark.parametrize("pts,eps", [
    ([(0, 0)], 1),
    ([(0, 0), (1, 0)], Q(1, 4)),
    ([(0, 0, 0), (1, 1, 1)], Q(1, 8)),
])
def test_extrude(pts, eps):
    base = P(*pts)
    out = extrude(base, eps)
    assert affine_dimension(out) == affine_dimension(base) + 1
    assert out.ambient_dim == base.ambient_dim


def test_extrude_uses_first_free_axis():
    out = extrude(P((0, 0), (1, 0)), Q(1, 4))
    assert (Q(0), Q(1, 4)) in out.generators


def test_extrude_full_dimensional_rejected():
    with pytest.raises(GeometryError):
        extrude(seg(0, 1), 1)


@pytest.mark.parametrize("pts", [[(1,)], [(0,), (1,)], [(0, 0), (1, 0), (0, 1)]])
def test_embed(pts):
    base = P(*pts)
    out = embed(base)
    assert out.ambient_dim == base.ambient_dim + 1
    assert affine_dimension(out) == affine_dimension(base)
    assert all(g[-1] == 0 for g in out.generators)


def test_no_floats_accepted():
    with pytest.raises(GeometryError):
        Polytope.hull([[0.5]])


def test_dot():
    assert dot((Q(1, 2), Q(3)), (Q(2), Q(1, 3))) == 2
