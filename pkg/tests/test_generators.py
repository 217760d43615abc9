import pytest

from cpl import (
    AtMost,
    GeometryError,
    Point,
    PointFormatError,
    PointSet,
    find_ngon,
    horton,
    orient,
    parse_pointset,
    random_general_position,
    serialize_pointset,
    shear_to_distinct_x,
    validate_general_position,
)
from cpl.geometry import cross


def test_horton_level_zero_is_origin():
    h = horton(0)
    assert h.points == (Point(0, 0),)


def test_horton_sizes_distinct_x_general_position():
    for level in range(0, 9):
        h = horton(level)
        assert len(h) == 2 ** level
        assert len({p.x for p in h}) == len(h)
        assert h.general_position_checked
        h2 = PointSet(h.points)
        assert validate_general_position(h2).ok


def test_horton_level_bounds():
    with pytest.raises(ValueError):
        horton(-1)
    with pytest.raises(ValueError):
        horton(13)


def _orientation_table(pts):
    n = len(pts)
    return [cross(pts[i], pts[j], pts[k]) > 0
            for i in range(n) for j in range(i + 1, n) for k in range(j + 1, n)]


def test_horton_halves_combinatorially_identical():
    for level in range(1, 7):
        big = horton(level).points
        small = list(horton(level - 1).points)
        even = [p for p in big if p.x % 2 == 0]
        odd = [p for p in big if p.x % 2 == 1]
        assert _orientation_table(even) == _orientation_table(small)
        assert _orientation_table(odd) == _orientation_table(small)


def test_horton_has_no_empty_heptagon_small_levels():
    assert find_ngon(horton(4), 7, AtMost(0)) is None
    assert find_ngon(horton(5), 7, AtMost(0)) is None


def test_random_general_position_valid_and_deterministic():
    a = random_general_position(9, seed=1)
    b = random_general_position(9, seed=1)
    assert a == b
    assert a.general_position_checked
    assert validate_general_position(PointSet(a.points)).ok
    c = random_general_position(9, seed=2)
    assert a != c


def test_random_general_position_distinct_x():
    s = random_general_position(30, seed=7)
    assert len({p.x for p in s}) == 30


def test_random_general_position_range_too_small():
    with pytest.raises(ValueError):
        random_general_position(10, seed=0, coord_range=4)


def test_shear_noop_on_distinct_x():
    s = random_general_position(8, seed=3)
    t = shear_to_distinct_x(s)
    assert t == s


def test_shear_preserves_orientation_table():
    s = PointSet.from_pairs([(0, 0), (0, 5), (3, 2), (3, 9), (7, 1)])
    assert validate_general_position(s).ok
    t = shear_to_distinct_x(s)
    assert len({p.x for p in t}) == len(t)
    n = len(s)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if len({i, j, k}) == 3:
                    assert orient(s[i], s[j], s[k]) is orient(t[i], t[j], t[k])


def test_shear_rejects_collinear_input():
    s = PointSet.from_pairs([(0, 0), (0, 1), (0, 2)])
    with pytest.raises(GeometryError):
        shear_to_distinct_x(s)


def test_parse_plain_and_colored():
    s = parse_pointset("0 0\n1 0\n0 1\n")
    assert isinstance(s, PointSet)
    assert len(s) == 3
    cs = parse_pointset("0 0 0\n5 1 1\n")
    assert cs.colors == (0, 1)
    assert len(cs.base) == 2


def test_parse_comments_and_blank_lines():
    s = parse_pointset("# heading\n\n 0 0 \n# trailing\n1 2\n")
    assert len(s) == 2


@pytest.mark.parametrize("text,line", [
    ("0 0\n1\n", 2),
    ("0 0\nx y\n", 2),
    ("0 0\n1 1 2 3\n", 2),
    ("0 0\n1 0 1\n", 2),          # mixed color columns
    ("0 0 0\n1 0\n", 2),          # mixed the other way
    ("0 0\n99999999999 0\n", 2),  # out of bounds
    ("0 0\n1 1\n0 0\n", 3),       # duplicate
    ("1 2 -1\n", 1),              # negative color
])
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(PointFormatError) as err:
        parse_pointset(text)
    assert err.value.line_number == line


def test_round_trip_identity():
    for level in range(0, 5):
        h = horton(level)
        assert parse_pointset(serialize_pointset(h)) == h
    s = random_general_position(11, seed=9)
    assert parse_pointset(serialize_pointset(s)) == s


def test_serialize_output_format():
    s = PointSet.from_pairs([(0, 0), (-3, 7)])
    assert serialize_pointset(s) == "0 0\n-3 7\n"
