"""Randomized construction of point sets avoiding a forbidden structure.

Simulated annealing over single-point integer jitters, minimizing the number
of forbidden substructures.  A success is never taken on faith: the final
set is re-verified by the exhaustive search before it is returned, so the
only two honest outcomes are "found, certified" and "budget exhausted".
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations

from .geometry import Point, PointSet, hull_indices, strictly_inside, validate_general_position
from .search import AtMost, InteriorConstraint, find_ngon, satisfies

MAX_HUNT_POINTS = 64


@dataclass(frozen=True)
class HuntQuery:
    """Forbidden structure: a convex ``ngon``-gon, optionally interior-constrained.

    ``constraint=None`` forbids the polygon regardless of its interior count;
    ``AtMost(0)`` forbids empty ones only, and so on.
    """

    ngon: int
    constraint: InteriorConstraint | None = None

    def __post_init__(self) -> None:
        if type(self.ngon) is not int or self.ngon < 3:
            raise ValueError("ngon must be an integer >= 3")

    def describe(self) -> str:
        if self.constraint is None:
            return f"convex {self.ngon}-gon"
        if isinstance(self.constraint, AtMost):
            return f"convex {self.ngon}-gon with interior <= {self.constraint.k}"
        return (f"convex {self.ngon}-gon with interior 0 mod {self.constraint.q}"
                + ("" if self.constraint.zero_allowed else " (nonempty)"))


@dataclass
class HuntResult:
    outcome: str  # "found" | "budget-exhausted"
    point_set: PointSet | None
    iterations: int
    best_violations: int
    seed: int


def _matches(pts, subset, query: HuntQuery) -> bool:
    sub = [pts[i] for i in subset]
    hull = hull_indices(sub)
    if len(hull) != len(subset):
        return False
    constraint = query.constraint
    if constraint is None:
        return True
    poly = [sub[h] for h in hull]
    sset = set(subset)
    count = 0
    for i, p in enumerate(pts):
        if i not in sset and strictly_inside(poly, p):
            count += 1
            if isinstance(constraint, AtMost) and count > constraint.k:
                return False
    return satisfies(constraint, count)


def _violations(pts, query: HuntQuery, cap: int = 500_000) -> int:
    examined = 0
    hits = 0
    for subset in combinations(range(len(pts)), query.ngon):
        examined += 1
        if examined > cap:
            break
        if _matches(pts, subset, query):
            hits += 1
    return hits


def _violations_with(pts, moved: int, query: HuntQuery, cap: int = 500_000) -> int:
    others = [i for i in range(len(pts)) if i != moved]
    examined = 0
    hits = 0
    for rest in combinations(others, query.ngon - 1):
        examined += 1
        if examined > cap:
            break
        if _matches(pts, tuple(sorted(rest + (moved,))), query):
            hits += 1
    return hits


def _keeps_general_position(pts, moved: int, candidate: tuple[int, int]) -> bool:
    cx, cy = candidate
    for i, p in enumerate(pts):
        if i != moved and p.x == cx and p.y == cy:
            return False
    others = [p for i, p in enumerate(pts) if i != moved]
    for a, b in combinations(others, 2):
        if (b.x - a.x) * (cy - a.y) - (b.y - a.y) * (cx - a.x) == 0:
            return False
    return True


def _initial_set(rng: random.Random, n: int, coord_range: int) -> list[Point]:
    pts: list[Point] = []
    while len(pts) < n:
        x = rng.randint(-coord_range, coord_range)
        y = rng.randint(-coord_range, coord_range)
        if any(p.x == x and p.y == y for p in pts):
            continue
        ok = True
        for a, b in combinations(pts, 2):
            if (b.x - a.x) * (y - a.y) - (b.y - a.y) * (x - a.x) == 0:
                ok = False
                break
        if ok:
            pts.append(Point(x, y))
    return pts


def _verify_absent(pts: list[Point], query: HuntQuery) -> bool:
    s = PointSet(pts)
    check = validate_general_position(s)
    if not check.ok:
        return False
    constraint = query.constraint if query.constraint is not None else AtMost(len(s))
    return find_ngon(s, query.ngon, constraint) is None


def randomized_witness_search(n: int, query: HuntQuery, budget: int = 20_000,
                              seed: int = 0, coord_range: int = 512) -> HuntResult:
    """Hunt for an ``n``-point general-position set free of the forbidden
    structure.  Reproducible: the result is a function of the arguments.

    The annealing runs in rounds: within a round the temperature cools
    geometrically and the jitter radius shrinks, then both reset, so a run
    stuck at a shallow local optimum gets reheated instead of freezing.  An
    occasional full-range kick move serves the same purpose within a round.
    """
    if type(n) is not int or not 3 <= n <= MAX_HUNT_POINTS:
        raise ValueError(f"n must be an integer in [3, {MAX_HUNT_POINTS}]")
    if budget < 1:
        raise ValueError("budget must be positive")
    if n > 2 * coord_range:
        raise ValueError("coord_range too small")
    rng = random.Random(seed)
    pts = _initial_set(rng, n, coord_range)

    if n < query.ngon:
        # too few points to ever contain the structure
        s = PointSet(pts)
        validate_general_position(s)
        return HuntResult("found", s, 0, 0, seed)

    round_len = 1500
    t_start, t_end = 2.5, 0.02
    kick_every = 17
    current = _violations(pts, query)
    best = current
    for it in range(budget):
        if current == 0 and _verify_absent(pts, query):
            s = PointSet(pts)
            validate_general_position(s)
            return HuntResult("found", s, it, 0, seed)
        phase = (it % round_len) / round_len
        temp = t_start * (t_end / t_start) ** phase
        if it % kick_every == 0:
            radius = coord_range // 2
        else:
            radius = max(1, int(coord_range * 0.5 ** (1 + 5 * phase)))
        k = rng.randrange(n)
        dx = rng.randint(-radius, radius)
        dy = rng.randint(-radius, radius)
        if dx == 0 and dy == 0:
            continue
        cand = (pts[k].x + dx, pts[k].y + dy)
        if abs(cand[0]) > coord_range or abs(cand[1]) > coord_range:
            continue
        if not _keeps_general_position(pts, k, cand):
            continue
        old = pts[k]
        if query.constraint is None:
            # a subset without the moved point is unaffected, so the delta
            # over subsets containing it is exact
            before = _violations_with(pts, k, query)
            pts[k] = Point(*cand)
            new_total = current - before + _violations_with(pts, k, query)
        else:
            # interior counts of other subsets change too; recount in full
            pts[k] = Point(*cand)
            new_total = _violations(pts, query)
        delta = new_total - current
        if delta <= 0 or rng.random() < math.exp(-delta / temp):
            current = new_total
            best = min(best, current)
        else:
            pts[k] = old
    if current == 0 and _verify_absent(pts, query):
        s = PointSet(pts)
        validate_general_position(s)
        return HuntResult("found", s, budget, 0, seed)
    return HuntResult("budget-exhausted", None, budget, best, seed)
