"""Exact planar geometry on bounded integer coordinates.

Every predicate in this module is the sign of an integer determinant; nothing
here touches floating point.  Coordinates are capped at ``|v| <= 2**26`` so a
three-point orientation determinant fits in a 64-bit signed integer with
headroom, which keeps the door open for native acceleration without changing
any result.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd
from typing import Iterable, Iterator, Sequence

COORD_BOUND = 1 << 26


class GeometryError(ValueError):
    """An input violates a geometric precondition."""


class Orientation(Enum):
    LEFT = 1
    COLLINEAR = 0
    RIGHT = -1


@dataclass(frozen=True, order=True)
class Point:
    """Planar point with bounded integer coordinates."""

    x: int
    y: int

    def __post_init__(self) -> None:
        if type(self.x) is not int or type(self.y) is not int:
            raise GeometryError(
                f"integer coordinates required, got ({self.x!r}, {self.y!r})")
        if abs(self.x) > COORD_BOUND or abs(self.y) > COORD_BOUND:
            raise GeometryError(
                f"|coordinate| exceeds {COORD_BOUND}: ({self.x}, {self.y})")


def cross(o: Point, a: Point, b: Point) -> int:
    """Twice the signed area of triangle (o, a, b); positive is counterclockwise."""
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def orient(a: Point, b: Point, c: Point) -> Orientation:
    """Side of the directed line a -> b on which c lies."""
    d = cross(a, b, c)
    if d > 0:
        return Orientation.LEFT
    if d < 0:
        return Orientation.RIGHT
    return Orientation.COLLINEAR


class PointSet:
    """Ordered collection of points, the universal search input.

    ``general_position_checked`` is set by :func:`validate_general_position`
    once the set is known to be duplicate-free with no collinear triple.
    Constructors that certify their own output pass ``_validated=True``.
    """

    __slots__ = ("points", "general_position_checked")

    def __init__(self, points: Iterable[Point], _validated: bool = False):
        self.points = tuple(points)
        self.general_position_checked = _validated

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> "PointSet":
        return cls(Point(x, y) for x, y in pairs)

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, i: int) -> Point:
        return self.points[i]

    def __iter__(self) -> Iterator[Point]:
        return iter(self.points)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PointSet):
            return NotImplemented
        return self.points == other.points

    def __repr__(self) -> str:
        return f"PointSet({list(self.points)!r})"


class ColoredPointSet:
    """A point set plus one small nonnegative color label per point."""

    __slots__ = ("base", "colors")

    def __init__(self, base: PointSet, colors: Sequence[int]):
        colors = tuple(colors)
        if len(colors) != len(base):
            raise GeometryError(
                f"{len(colors)} colors for {len(base)} points")
        if not colors:
            raise GeometryError("a colored set needs at least one point")
        if any(type(c) is not int or c < 0 for c in colors):
            raise GeometryError("colors must be nonnegative integers")
        self.base = base
        self.colors = colors

    def __len__(self) -> int:
        return len(self.base)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ColoredPointSet):
            return NotImplemented
        return self.base == other.base and self.colors == other.colors

    def __repr__(self) -> str:
        return f"ColoredPointSet({self.base!r}, colors={self.colors!r})"


@dataclass(frozen=True)
class PositionCheck:
    """Result of a general-position validation.

    Exactly one of ``duplicate_pair`` / ``collinear_triple`` is set when not
    ok; duplicates are reported before collinearity is examined.
    """

    ok: bool
    duplicate_pair: tuple[int, int] | None = None
    collinear_triple: tuple[int, int, int] | None = None


def validate_general_position(s: PointSet) -> PositionCheck:
    """Check a set for duplicate points, then for collinear triples.

    Offending indices are lexicographically first.  On success the set's
    ``general_position_checked`` flag is set.  Runs in O(n^2) by grouping,
    per anchor point, the directions to all later points.
    """
    pts = s.points
    n = len(pts)

    first_at: dict[tuple[int, int], int] = {}
    dup_best: tuple[int, int] | None = None
    for j, p in enumerate(pts):
        i = first_at.setdefault((p.x, p.y), j)
        if i != j and (dup_best is None or (i, j) < dup_best):
            dup_best = (i, j)
    if dup_best is not None:
        return PositionCheck(False, duplicate_pair=dup_best)

    for i in range(n - 2):
        pi = pts[i]
        groups: dict[tuple[int, int], int] = {}
        best: tuple[int, int] | None = None
        for j in range(i + 1, n):
            dx = pts[j].x - pi.x
            dy = pts[j].y - pi.y
            g = gcd(dx, dy)
            dx //= g
            dy //= g
            if dx < 0 or (dx == 0 and dy < 0):
                dx, dy = -dx, -dy
            jj = groups.setdefault((dx, dy), j)
            if jj != j and (best is None or (jj, j) < best):
                best = (jj, j)
        if best is not None:
            return PositionCheck(False, collinear_triple=(i, best[0], best[1]))

    s.general_position_checked = True
    return PositionCheck(True)


@dataclass(frozen=True)
class ConvexWitness:
    """A vertex-index certificate for a polygon in convex position.

    ``vertex_indices`` are counterclockwise; ``interior_count`` is the number
    of set points strictly inside the polygon.
    """

    vertex_indices: tuple[int, ...]
    interior_count: int


def hull_indices(pts: Sequence[Point]) -> list[int]:
    """Positions of the convex hull of ``pts``, counterclockwise.

    Starts at the lexicographically smallest point; collinear boundary points
    are excluded (only extreme points are hull vertices).
    """
    order = sorted(range(len(pts)), key=lambda i: (pts[i].x, pts[i].y, i))

    def build(seq: Iterable[int]) -> list[int]:
        chain: list[int] = []
        for i in seq:
            while len(chain) >= 2 and cross(pts[chain[-2]], pts[chain[-1]], pts[i]) <= 0:
                chain.pop()
            chain.append(i)
        return chain

    lower = build(order)
    upper = build(reversed(order))
    if len(lower) <= 1:
        return lower
    return lower[:-1] + upper[:-1]


def convex_hull(s: PointSet) -> ConvexWitness:
    """Convex hull of the whole set as a witness; needs at least 3 points."""
    if len(s) < 3:
        raise GeometryError("convex hull needs at least 3 points")
    hull = hull_indices(s.points)
    return ConvexWitness(tuple(hull), len(s) - len(hull))


def is_convex_position(s: PointSet, subset: Sequence[int]) -> bool:
    """True iff every subset point is a hull vertex of the subset.

    Subsets of one or two points are vacuously in convex position.
    """
    idx = list(subset)
    if len(set(idx)) != len(idx):
        raise GeometryError("subset indices must be distinct")
    if any(i < 0 or i >= len(s) for i in idx):
        raise GeometryError("subset index out of range")
    if len(idx) <= 2:
        return True
    pts = [s[i] for i in idx]
    return len(hull_indices(pts)) == len(pts)


def strictly_inside(polygon: Sequence[Point], p: Point) -> bool:
    """Whether ``p`` lies strictly inside a convex polygon given in CCW order."""
    m = len(polygon)
    for t in range(m):
        if cross(polygon[t], polygon[(t + 1) % m], p) <= 0:
            return False
    return True


def interior_count(s: PointSet, w: ConvexWitness) -> int:
    """Number of set points strictly inside the witness polygon.

    Raises if the witness vertices are not a convex counterclockwise polygon
    over ``s``.  Under general position no point can sit on an edge, so
    boundary incidence beyond the vertices themselves cannot occur.
    """
    idx = w.vertex_indices
    if len(idx) < 3:
        raise GeometryError("witness needs at least 3 vertices")
    if len(set(idx)) != len(idx):
        raise GeometryError("witness indices must be distinct")
    if any(i < 0 or i >= len(s) for i in idx):
        raise GeometryError("witness index out of range")
    poly = [s[i] for i in idx]
    m = len(poly)
    for t in range(m):
        if cross(poly[t], poly[(t + 1) % m], poly[(t + 2) % m]) <= 0:
            raise GeometryError("witness is not in convex counterclockwise position")
    vertex_set = set(idx)
    return sum(
        1 for i, p in enumerate(s)
        if i not in vertex_set and strictly_inside(poly, p)
    )
