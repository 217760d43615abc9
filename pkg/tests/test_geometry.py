import random

import pytest

from cpl import (
    COORD_BOUND,
    ColoredPointSet,
    ConvexWitness,
    GeometryError,
    Orientation,
    Point,
    PointSet,
    convex_hull,
    interior_count,
    is_convex_position,
    orient,
    strictly_inside,
    validate_general_position,
)


def test_orient_examples():
    assert orient(Point(0, 0), Point(1, 0), Point(0, 1)) is Orientation.LEFT
    assert orient(Point(0, 0), Point(1, 1), Point(2, 2)) is Orientation.COLLINEAR
    # determinant (1)(-1) - (0)(1) = -1 < 0
    assert orient(Point(0, 0), Point(1, 0), Point(1, -1)) is Orientation.RIGHT


def test_orient_antisymmetry_and_cyclic_shift():
    rng = random.Random(7)
    flip = {Orientation.LEFT: Orientation.RIGHT,
            Orientation.RIGHT: Orientation.LEFT,
            Orientation.COLLINEAR: Orientation.COLLINEAR}
    for _ in range(300):
        a, b, c = (Point(rng.randint(-999, 999), rng.randint(-999, 999)) for _ in range(3))
        o = orient(a, b, c)
        assert orient(a, c, b) is flip[o]
        assert orient(b, c, a) is o
        assert orient(c, a, b) is o


def test_orient_affine_invariance():
    rng = random.Random(8)
    for _ in range(200):
        pts = [Point(rng.randint(-500, 500), rng.randint(-500, 500)) for _ in range(3)]
        tx, ty = rng.randint(-100, 100), rng.randint(-100, 100)
        # determinant-one integer map
        a, b, c, d = 2, 1, 1, 1
        mapped = [Point(a * p.x + b * p.y + tx, c * p.x + d * p.y + ty) for p in pts]
        assert orient(*pts) is orient(*mapped)


def test_point_bounds_enforced():
    Point(COORD_BOUND, -COORD_BOUND)
    with pytest.raises(GeometryError):
        Point(COORD_BOUND + 1, 0)
    with pytest.raises(GeometryError):
        Point(0, 2.5)


def test_validate_general_position_ok_and_flag():
    s = PointSet.from_pairs([(0, 0), (1, 0), (0, 1)])
    assert not s.general_position_checked
    check = validate_general_position(s)
    assert check.ok
    assert s.general_position_checked


def test_validate_reports_first_collinear_triple():
    s = PointSet.from_pairs([(0, 0), (1, 1), (2, 2), (0, 1)])
    check = validate_general_position(s)
    assert not check.ok
    assert check.collinear_triple == (0, 1, 2)
    assert not s.general_position_checked


def test_validate_lexicographically_first_triple():
    # triples (1, 2, 4) and (0, 3, 5) are both collinear; (0, 3, 5) is first
    s = PointSet.from_pairs([(0, 0), (10, 1), (20, 3), (1, 7), (30, 5), (2, 14)])
    check = validate_general_position(s)
    assert check.collinear_triple == (0, 3, 5)


def test_validate_duplicates_reported_before_collinearity():
    s = PointSet.from_pairs([(0, 0), (1, 1), (2, 2), (0, 0)])
    check = validate_general_position(s)
    assert not check.ok
    assert check.duplicate_pair == (0, 3)
    assert check.collinear_triple is None


def test_convex_hull_triangle_and_inner_point():
    s = PointSet.from_pairs([(0, 0), (10, 0), (5, 9)])
    w = convex_hull(s)
    assert len(w.vertex_indices) == 3
    assert w.interior_count == 0

    s = PointSet.from_pairs([(0, 0), (10, 0), (5, 9), (5, 3)])
    w = convex_hull(s)
    assert len(w.vertex_indices) == 3
    assert w.interior_count == 1
    assert 3 not in w.vertex_indices


def test_convex_hull_needs_three_points():
    with pytest.raises(GeometryError):
        convex_hull(PointSet.from_pairs([(0, 0), (1, 1)]))


def test_convex_hull_conservation_and_order_independence():
    rng = random.Random(11)
    for trial in range(30):
        pairs = set()
        while len(pairs) < 20:
            pairs.add((rng.randint(-1000, 1000), rng.randint(-1000, 1000)))
        pairs = sorted(pairs)
        s = PointSet.from_pairs(pairs)
        w = convex_hull(s)
        assert len(w.vertex_indices) + w.interior_count == len(s)
        perm = list(range(len(pairs)))
        rng.shuffle(perm)
        t = PointSet.from_pairs([pairs[i] for i in perm])
        wt = convex_hull(t)
        hull_pts = [s[i] for i in w.vertex_indices]
        hull_pts_t = [t[i] for i in wt.vertex_indices]
        assert hull_pts == hull_pts_t


def test_is_convex_position():
    s = PointSet.from_pairs([(0, 0), (10, 0), (5, 9), (5, 3)])
    assert is_convex_position(s, [0, 1, 2])
    assert not is_convex_position(s, [0, 1, 2, 3])  # one point inside the triangle
    hexagon = PointSet.from_pairs([(2, 0), (4, 0), (6, 3), (4, 6), (2, 6), (0, 3)])
    assert is_convex_position(hexagon, range(6))
    assert is_convex_position(s, [0, 1])
    with pytest.raises(GeometryError):
        is_convex_position(s, [0, 0, 1])
    with pytest.raises(GeometryError):
        is_convex_position(s, [0, 9])


def test_interior_count_matches_half_plane_oracle():
    rng = random.Random(23)
    for trial in range(30):
        pairs = set()
        while len(pairs) < 12:
            pairs.add((rng.randint(-500, 500), rng.randint(-500, 500)))
        s = PointSet.from_pairs(sorted(pairs))
        if not validate_general_position(s).ok:
            continue
        w = convex_hull(s)
        poly = [s[i] for i in w.vertex_indices]
        brute = sum(1 for i, p in enumerate(s)
                    if i not in set(w.vertex_indices) and strictly_inside(poly, p))
        assert interior_count(s, w) == brute == w.interior_count


def test_interior_count_rejects_nonconvex_witness():
    s = PointSet.from_pairs([(0, 0), (10, 0), (5, 9), (5, 3)])
    with pytest.raises(GeometryError):
        interior_count(s, ConvexWitness((0, 1, 3, 2), 0))  # 3 is interior, not a hull vertex
    with pytest.raises(GeometryError):
        interior_count(s, ConvexWitness((0, 2, 1), 0))  # clockwise


def test_colored_point_set_validation():
    base = PointSet.from_pairs([(0, 0), (5, 1)])
    cs = ColoredPointSet(base, [0, 1])
    assert len(cs) == 2
    with pytest.raises(GeometryError):
        ColoredPointSet(base, [0])
    with pytest.raises(GeometryError):
        ColoredPointSet(base, [0, -1])
    with pytest.raises(GeometryError):
        ColoredPointSet(PointSet(()), [])
