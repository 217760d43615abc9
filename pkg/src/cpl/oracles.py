"""Reference implementations by exhaustive subset enumeration.

These are deliberately naive: every candidate subset is materialized and
checked with the public geometry primitives.  They exist to pin down the
optimized searches, so they share no search strategy with them.  A size
guard keeps accidental exponential blowups from hanging a test run.
"""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .geometry import (
    ColoredPointSet,
    ConvexWitness,
    Point,
    PointSet,
    hull_indices,
    strictly_inside,
)
from .search import (
    ChainKind,
    ChainWitness,
    InteriorConstraint,
    SearchError,
    _ensure_general_position,
    satisfies,
)

ORACLE_MAX_POINTS = 16


def _guard(s: PointSet) -> None:
    if len(s) > ORACLE_MAX_POINTS:
        raise SearchError(
            f"oracle limited to {ORACLE_MAX_POINTS} points, got {len(s)}")


def _convex_ccw(pts: Sequence[Point], subset: Sequence[int]) -> list[int] | None:
    """Subset indices in CCW order when in convex position, else None."""
    sub = [pts[i] for i in subset]
    hull = hull_indices(sub)
    if len(hull) != len(subset):
        return None
    return [subset[h] for h in hull]


def _interior(pts: Sequence[Point], ccw: Sequence[int]) -> int:
    poly = [pts[i] for i in ccw]
    vset = set(ccw)
    return sum(1 for i, p in enumerate(pts)
               if i not in vset and strictly_inside(poly, p))


def oracle_find_ngon(s: PointSet, n: int, constraint: InteriorConstraint,
                     ) -> ConvexWitness | None:
    """Enumerate every n-subset; first one convex and satisfying wins."""
    if type(n) is not int or n < 3:
        raise ValueError("n must be an integer >= 3")
    if n > len(s):
        raise ValueError(f"n={n} exceeds set size {len(s)}")
    _guard(s)
    _ensure_general_position(s)
    pts = s.points
    for subset in combinations(range(len(pts)), n):
        ccw = _convex_ccw(pts, subset)
        if ccw is None:
            continue
        count = _interior(pts, ccw)
        if satisfies(constraint, count):
            return ConvexWitness(tuple(ccw), count)
    return None


def oracle_max_convex_subset(s: PointSet) -> tuple[int, ConvexWitness]:
    if len(s) < 3:
        raise ValueError("need at least 3 points")
    _guard(s)
    _ensure_general_position(s)
    pts = s.points
    for size in range(len(pts), 2, -1):
        for subset in combinations(range(len(pts)), size):
            ccw = _convex_ccw(pts, subset)
            if ccw is not None:
                return size, ConvexWitness(tuple(ccw), _interior(pts, ccw))
    raise AssertionError("internal: no triangle in a 3+ point general-position set")


def _is_chain(pts: Sequence[Point], subset: Sequence[int], kind: ChainKind) -> bool:
    want = 1 if kind is ChainKind.CUP else -1
    for a, b, c in zip(subset, subset[1:], subset[2:]):
        d = ((pts[b].x - pts[a].x) * (pts[c].y - pts[a].y)
             - (pts[b].y - pts[a].y) * (pts[c].x - pts[a].x))
        if d * want <= 0:
            return False
    return True


def _chain_interior(pts: Sequence[Point], subset: Sequence[int], kind: ChainKind) -> int:
    if len(subset) < 3:
        return 0
    ccw = list(subset) if kind is ChainKind.CUP else list(reversed(subset))
    return _interior(pts, ccw)


def _oracle_x_order(s: PointSet) -> list[int]:
    order = sorted(range(len(s)), key=lambda i: (s[i].x, s[i].y))
    for a, b in zip(order, order[1:]):
        if s[a].x == s[b].x:
            raise SearchError(
                f"duplicate x-coordinate at indices {a} and {b}; "
                "apply shear_to_distinct_x first")
    return order


def oracle_longest_chain(s: PointSet, kind: ChainKind) -> tuple[int, ChainWitness]:
    if len(s) < 1:
        raise ValueError("need at least one point")
    _guard(s)
    _ensure_general_position(s)
    order = _oracle_x_order(s)
    pts = s.points
    for size in range(len(order), 1, -1):
        for subset in combinations(order, size):
            if _is_chain(pts, subset, kind):
                return size, ChainWitness(tuple(subset), kind,
                                          _chain_interior(pts, subset, kind))
    return 1, ChainWitness((order[0],), kind, 0)


def oracle_find_chain(s: PointSet, kind: ChainKind, l: int, max_interior: int,
                      ) -> ChainWitness | None:
    if type(l) is not int or l < 2:
        raise ValueError("chain length must be an integer >= 2")
    if max_interior < 0:
        raise ValueError("max_interior must be nonnegative")
    _guard(s)
    _ensure_general_position(s)
    if l > len(s):
        return None
    order = _oracle_x_order(s)
    pts = s.points
    for subset in combinations(order, l):
        if not _is_chain(pts, subset, kind):
            continue
        count = _chain_interior(pts, subset, kind)
        if count <= max_interior:
            return ChainWitness(tuple(subset), kind, count)
    return None


def oracle_find_empty_mono_quad(cs: ColoredPointSet, count_all_colors: bool = True,
                                ) -> tuple[ConvexWitness, int] | None:
    _guard(cs.base)
    _ensure_general_position(cs.base)
    pts = cs.base.points
    counts: dict[int, int] = {}
    for c in cs.colors:
        counts[c] = counts.get(c, 0) + 1
    eligible = [c for c in sorted(counts) if counts[c] >= 4]
    if not eligible:
        raise SearchError("no color class has at least 4 points")
    for color in eligible:
        ids = [i for i, c in enumerate(cs.colors) if c == color]
        for subset in combinations(ids, 4):
            ccw = _convex_ccw(pts, subset)
            if ccw is None:
                continue
            poly = [pts[i] for i in ccw]
            vset = set(ccw)
            if count_all_colors:
                scope = range(len(pts))
            else:
                scope = ids
            if any(i not in vset and strictly_inside(poly, pts[i]) for i in scope):
                continue
            return ConvexWitness(tuple(ccw), _interior(pts, ccw)), color
    return None
