"""Exhaustive searches for convex polygons, cups and caps, with witnesses.

The polygon searches sweep every point as the canonical bottom vertex of a
candidate polygon (minimum by (y, x)), sort the remaining points by angle
around it, and run a convex-chain dynamic program over that fan.  Interior
points are charged one fan triangle at a time, which makes interior-count
constraints compositional: chains sharing their last edge have
interchangeable futures, so a minimum (or residue set) per state is exact.

A negative answer from any function here is a statement about the whole
input, never about a sampled portion.  Randomized construction lives in
``hunt``; reference brute-force implementations live in ``oracles``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import cmp_to_key
from typing import Sequence

from .geometry import (
    ColoredPointSet,
    ConvexWitness,
    PointSet,
    validate_general_position,
)


class SearchError(ValueError):
    """A search was invoked outside its contract."""


class ChainKind(Enum):
    CUP = "cup"
    CAP = "cap"


@dataclass(frozen=True)
class AtMost:
    """Interior constraint: at most ``k`` points strictly inside."""

    k: int

    def __post_init__(self) -> None:
        if type(self.k) is not int or self.k < 0:
            raise ValueError("k must be a nonnegative integer")


@dataclass(frozen=True)
class ZeroMod:
    """Interior constraint: the interior point count is a multiple of ``q``.

    ``zero_allowed`` decides whether an empty interior counts as a multiple;
    it defaults to true so that raising ``q`` can never make the predicate
    easier than the empty-interior one.
    """

    q: int
    zero_allowed: bool = True

    def __post_init__(self) -> None:
        if type(self.q) is not int or self.q < 2:
            raise ValueError("q must be an integer >= 2")


InteriorConstraint = AtMost | ZeroMod


def satisfies(constraint: InteriorConstraint, count: int) -> bool:
    """Whether an interior count meets a constraint."""
    if isinstance(constraint, AtMost):
        return count <= constraint.k
    if isinstance(constraint, ZeroMod):
        return count % constraint.q == 0 and (constraint.zero_allowed or count > 0)
    raise TypeError(f"not an interior constraint: {constraint!r}")


@dataclass(frozen=True)
class ChainWitness:
    """An x-sorted cup or cap certificate.

    ``interior_count`` counts set points strictly inside the convex region
    bounded by the chain and the segment joining its endpoints.
    """

    vertex_indices: tuple[int, ...]
    kind: ChainKind
    interior_count: int


@dataclass
class SearchStats:
    """Lightweight counters a search fills in when handed one."""

    candidates: int = 0
    extra: dict = field(default_factory=dict)


@dataclass
class SearchReport:
    query: str
    outcome: str  # "found" | "not-found" | "budget-exhausted"
    witness: ConvexWitness | ChainWitness | None = None
    color: int | None = None
    statistics: dict = field(default_factory=dict)


def _ensure_general_position(s: PointSet) -> None:
    if s.general_position_checked:
        return
    check = validate_general_position(s)
    if not check.ok:
        if check.duplicate_pair is not None:
            raise SearchError(f"duplicate points at indices {check.duplicate_pair}")
        raise SearchError(f"collinear triple at indices {check.collinear_triple}")


def _coords(s: PointSet) -> tuple[list[int], list[int]]:
    return [p.x for p in s.points], [p.y for p in s.points]


def _polygon_interior(xs: Sequence[int], ys: Sequence[int],
                      vertices: Sequence[int], scope: Sequence[int]) -> int:
    """Points of ``scope`` strictly inside the convex CCW polygon ``vertices``."""
    m = len(vertices)
    vset = set(vertices)
    count = 0
    for t in scope:
        if t in vset:
            continue
        tx, ty = xs[t], ys[t]
        inside = True
        for e in range(m):
            i, j = vertices[e], vertices[(e + 1) % m]
            if (xs[j] - xs[i]) * (ty - ys[i]) - (ys[j] - ys[i]) * (tx - xs[i]) <= 0:
                inside = False
                break
        if inside:
            count += 1
    return count


def _fan_ring(xs: Sequence[int], ys: Sequence[int], b: int,
              candidates: Sequence[int]) -> list[int]:
    """Candidates above ``b`` in (y, x) order, sorted by angle around ``b``."""
    bx, by = xs[b], ys[b]
    ring = [i for i in candidates if i != b and (ys[i], xs[i]) > (by, bx)]

    def cmp(p: int, q: int) -> int:
        c = (xs[p] - bx) * (ys[q] - by) - (ys[p] - by) * (xs[q] - bx)
        return -1 if c > 0 else (1 if c < 0 else 0)

    ring.sort(key=cmp_to_key(cmp))
    return ring


def _fan_triangles(xs: Sequence[int], ys: Sequence[int], b: int,
                   ring: Sequence[int], scope: Sequence[int]) -> list[list[int]]:
    """tri[u][w] = points of ``scope`` strictly inside triangle (b, ring[u], ring[w])."""
    P = len(ring)
    bx, by = xs[b], ys[b]
    tri = [[0] * P for _ in range(P)]
    for u in range(P):
        iu = ring[u]
        ux, uy = xs[iu], ys[iu]
        for w in range(u + 1, P):
            iw = ring[w]
            wx, wy = xs[iw], ys[iw]
            c = 0
            for t in scope:
                if t == b or t == iu or t == iw:
                    continue
                tx, ty = xs[t], ys[t]
                # (b, ring[u], ring[w]) is CCW by the angular order
                if ((ux - bx) * (ty - by) - (uy - by) * (tx - bx) > 0
                        and (wx - ux) * (ty - uy) - (wy - uy) * (tx - ux) > 0
                        and (bx - wx) * (ty - wy) - (by - wy) * (tx - wx) > 0):
                    c += 1
            tri[u][w] = c
    return tri


def _chain_dp_atmost(xs, ys, ring, tri, target_m, kmax, stats):
    """Min-interior convex-chain DP over a fan; returns ring positions or None.

    States are the last chain edge (u, w) as ring positions; the stored value
    is the least interior so far, and chains above ``kmax`` are pruned since
    triangle charges are nonnegative.
    """
    P = len(ring)
    cur: dict[tuple[int, int], int] = {}
    for u in range(P):
        row = tri[u]
        for w in range(u + 1, P):
            if row[w] <= kmax:
                cur[(u, w)] = row[w]
    parent: dict[tuple[int, int, int], int] = {}
    m = 2
    while cur:
        if m == target_m:
            u, w = min(cur)
            chain = [w, u]
            mm = m
            while mm > 2:
                chain.append(parent[(mm, chain[-1], chain[-2])])
                mm -= 1
            chain.reverse()
            return chain
        nxt: dict[tuple[int, int], int] = {}
        for (u, w), val in sorted(cur.items()):
            iu, iw = ring[u], ring[w]
            ux, uy = xs[iu], ys[iu]
            dx, dy = xs[iw] - ux, ys[iw] - uy
            trow = tri[w]
            for z in range(w + 1, P):
                iz = ring[z]
                if stats is not None:
                    stats.candidates += 1
                if dx * (ys[iz] - uy) - dy * (xs[iz] - ux) <= 0:
                    continue
                v2 = val + trow[z]
                if v2 > kmax:
                    continue
                key = (w, z)
                if v2 < nxt.get(key, kmax + 1):
                    nxt[key] = v2
                    parent[(m + 1, w, z)] = u
        cur = nxt
        m += 1
    return None


def _chain_dp_mod(xs, ys, ring, tri, target_m, q, zero_allowed, stats):
    """Residue-set convex-chain DP over a fan; returns ring positions or None.

    Per edge state the DP keeps every reachable pair (interior mod q, whether
    the running interior is exactly zero), each with one parent for witness
    reconstruction.
    """
    P = len(ring)
    # layers[m - 2][(u, w)][(residue, is_zero)] = parent (prev_u, prev_r, prev_zero)
    cur: dict[tuple[int, int], dict[tuple[int, bool], tuple | None]] = {}
    for u in range(P):
        for w in range(u + 1, P):
            c = tri[u][w]
            cur.setdefault((u, w), {})[(c % q, c == 0)] = None
    layers = [cur]
    m = 2
    while m < target_m and cur:
        nxt: dict[tuple[int, int], dict[tuple[int, bool], tuple | None]] = {}
        for (u, w), states in sorted(cur.items()):
            iu, iw = ring[u], ring[w]
            ux, uy = xs[iu], ys[iu]
            dx, dy = xs[iw] - ux, ys[iw] - uy
            trow = tri[w]
            for z in range(w + 1, P):
                iz = ring[z]
                if stats is not None:
                    stats.candidates += 1
                if dx * (ys[iz] - uy) - dy * (xs[iz] - ux) <= 0:
                    continue
                c = trow[z]
                slot = nxt.setdefault((w, z), {})
                for (r, zero) in states:
                    key = ((r + c) % q, zero and c == 0)
                    if key not in slot:
                        slot[key] = (u, r, zero)
        layers.append(nxt)
        cur = nxt
        m += 1
    if m != target_m:
        return None
    for (u, w) in sorted(cur):
        for (r, zero) in sorted(cur[(u, w)]):
            if r != 0 or (zero and not zero_allowed):
                continue
            chain = [w, u]
            state = (r, zero)
            mm = m
            while mm > 2:
                prev_u, prev_r, prev_zero = layers[mm - 2][(chain[-1], chain[-2])][state]
                chain.append(prev_u)
                state = (prev_r, prev_zero)
                mm -= 1
            chain.reverse()
            return chain
    return None


def _ngon_vertices(xs, ys, n, constraint, vertex_ids, scope, stats):
    """Vertex indices (bottom first, CCW) of a convex n-gon meeting the
    constraint, or None after sweeping every bottom vertex."""
    for b in sorted(vertex_ids):
        ring = _fan_ring(xs, ys, b, vertex_ids)
        if len(ring) < n - 1:
            continue
        tri = _fan_triangles(xs, ys, b, ring, scope)
        if isinstance(constraint, AtMost):
            kmax = min(constraint.k, len(scope))
            chain = _chain_dp_atmost(xs, ys, ring, tri, n - 1, kmax, stats)
        else:
            chain = _chain_dp_mod(xs, ys, ring, tri, n - 1,
                                  constraint.q, constraint.zero_allowed, stats)
        if chain is not None:
            return [b] + [ring[pos] for pos in chain]
    return None


def find_ngon(s: PointSet, n: int, constraint: InteriorConstraint,
              stats: SearchStats | None = None) -> ConvexWitness | None:
    """Search ``s`` exhaustively for a convex n-gon whose interior count
    satisfies ``constraint``; None is a proof that none exists."""
    if not isinstance(constraint, (AtMost, ZeroMod)):
        raise ValueError(f"not an interior constraint: {constraint!r}")
    if type(n) is not int or n < 3:
        raise ValueError("n must be an integer >= 3")
    if n > len(s):
        raise ValueError(f"n={n} exceeds set size {len(s)}")
    _ensure_general_position(s)
    xs, ys = _coords(s)
    everything = list(range(len(s)))
    vertices = _ngon_vertices(xs, ys, n, constraint, everything, everything, stats)
    if vertices is None:
        return None
    count = _polygon_interior(xs, ys, vertices, everything)
    witness = ConvexWitness(tuple(vertices), count)
    if not satisfies(constraint, count):
        raise AssertionError(f"internal: witness {witness} violates {constraint}")
    return witness


def max_convex_subset(s: PointSet,
                      stats: SearchStats | None = None) -> tuple[int, ConvexWitness]:
    """Maximum cardinality of a subset in convex position, with one witness."""
    if len(s) < 3:
        raise ValueError("need at least 3 points")
    _ensure_general_position(s)
    xs, ys = _coords(s)
    everything = list(range(len(s)))
    best_vertices: list[int] | None = None
    for b in everything:
        ring = _fan_ring(xs, ys, b, everything)
        P = len(ring)
        if P < 2 or (best_vertices is not None and P + 1 <= len(best_vertices)):
            continue
        length: dict[tuple[int, int], int] = {}
        parent: dict[tuple[int, int], int] = {}
        best_len = 2
        best_pair = (0, 1)
        for w in range(P):
            iw = ring[w]
            wx, wy = xs[iw], ys[iw]
            for u in range(w):
                val = length.get((u, w), 2)
                if val > best_len:
                    best_len = val
                    best_pair = (u, w)
                iu = ring[u]
                ux, uy = xs[iu], ys[iu]
                dx, dy = wx - ux, wy - uy
                for z in range(w + 1, P):
                    iz = ring[z]
                    if stats is not None:
                        stats.candidates += 1
                    if dx * (ys[iz] - uy) - dy * (xs[iz] - ux) <= 0:
                        continue
                    if val + 1 > length.get((w, z), 2):
                        length[(w, z)] = val + 1
                        parent[(w, z)] = u
        if best_vertices is None or best_len + 1 > len(best_vertices):
            chain = [best_pair[1], best_pair[0]]
            val = best_len
            while val > 2:
                chain.append(parent[(chain[-1], chain[-2])])
                val -= 1
            chain.reverse()
            best_vertices = [b] + [ring[pos] for pos in chain]
    if best_vertices is None or len(best_vertices) < 3:
        raise AssertionError("internal: no triangle found in a 3+ point set")
    count = _polygon_interior(xs, ys, best_vertices, everything)
    return len(best_vertices), ConvexWitness(tuple(best_vertices), count)


def _x_order(s: PointSet) -> list[int]:
    order = sorted(range(len(s)), key=lambda i: (s[i].x, s[i].y))
    for a, b in zip(order, order[1:]):
        if s[a].x == s[b].x:
            raise SearchError(
                f"duplicate x-coordinate at indices {a} and {b}; "
                "apply shear_to_distinct_x first")
    return order


def _turn_sign(kind: ChainKind) -> int:
    return 1 if kind is ChainKind.CUP else -1


def _chain_region_interior(s: PointSet, chain: Sequence[int], kind: ChainKind) -> int:
    """Set points strictly inside the hull of a cup/cap chain."""
    if len(chain) < 3:
        return 0
    xs, ys = _coords(s)
    vertices = list(chain) if kind is ChainKind.CUP else list(reversed(chain))
    return _polygon_interior(xs, ys, vertices, range(len(s)))


def longest_chain(s: PointSet, kind: ChainKind,
                  stats: SearchStats | None = None) -> tuple[int, ChainWitness]:
    """Longest cup or cap, by dynamic programming over x-sorted point pairs."""
    if len(s) < 1:
        raise ValueError("need at least one point")
    _ensure_general_position(s)
    order = _x_order(s)
    n = len(order)
    if n == 1:
        return 1, ChainWitness((order[0],), kind, 0)
    xs, ys = _coords(s)
    want = _turn_sign(kind)
    length: dict[tuple[int, int], int] = {}
    parent: dict[tuple[int, int], int] = {}
    best_len = 2
    best_pair = (0, 1)
    for w in range(n):
        iw = order[w]
        wx, wy = xs[iw], ys[iw]
        for u in range(w):
            val = length.get((u, w), 2)
            if val > best_len:
                best_len = val
                best_pair = (u, w)
            iu = order[u]
            ux, uy = xs[iu], ys[iu]
            dx, dy = wx - ux, wy - uy
            for z in range(w + 1, n):
                iz = order[z]
                if stats is not None:
                    stats.candidates += 1
                if (dx * (ys[iz] - uy) - dy * (xs[iz] - ux)) * want <= 0:
                    continue
                if val + 1 > length.get((w, z), 2):
                    length[(w, z)] = val + 1
                    parent[(w, z)] = u
    chain = [best_pair[1], best_pair[0]]
    val = best_len
    while val > 2:
        chain.append(parent[(chain[-1], chain[-2])])
        val -= 1
    chain.reverse()
    indices = tuple(order[pos] for pos in chain)
    return best_len, ChainWitness(indices, kind, _chain_region_interior(s, indices, kind))


def find_chain(s: PointSet, kind: ChainKind, l: int, max_interior: int,
               stats: SearchStats | None = None) -> ChainWitness | None:
    """An l-cup or l-cap with at most ``max_interior`` points inside its hull,
    or None after exhaustive search."""
    if type(l) is not int or l < 2:
        raise ValueError("chain length must be an integer >= 2")
    if type(max_interior) is not int or max_interior < 0:
        raise ValueError("max_interior must be a nonnegative integer")
    _ensure_general_position(s)
    if l > len(s):
        return None
    order = _x_order(s)
    n = len(order)
    xs, ys = _coords(s)
    want = _turn_sign(kind)
    if l == 2:
        return ChainWitness((order[0], order[1]), kind, 0)
    for f in range(n - l + 1):
        fi = order[f]
        fx, fy = xs[fi], ys[fi]
        rest = order[f + 1:]
        P = len(rest)
        # tri[w][z]: set points strictly inside triangle (f, rest[w], rest[z])
        tri = [[0] * P for _ in range(P)]
        for w in range(P):
            iw = rest[w]
            wx, wy = xs[iw], ys[iw]
            for z in range(w + 1, P):
                iz = rest[z]
                zx, zy = xs[iz], ys[iz]
                c = 0
                for t in range(len(s)):
                    if t == fi or t == iw or t == iz:
                        continue
                    tx, ty = xs[t], ys[t]
                    s1 = (wx - fx) * (ty - fy) - (wy - fy) * (tx - fx)
                    s2 = (zx - wx) * (ty - wy) - (zy - wy) * (tx - wx)
                    s3 = (fx - zx) * (ty - zy) - (fy - zy) * (tx - zx)
                    if (s1 > 0 and s2 > 0 and s3 > 0) or (s1 < 0 and s2 < 0 and s3 < 0):
                        c += 1
                tri[w][z] = c
        # Chain DP anchored at f.  State (u, w) is the last edge over
        # positions in ``rest``; u == -1 while the chain is just (f, rest[w]).
        cur: dict[tuple[int, int], int] = {(-1, j): 0 for j in range(P)}
        parent: dict[tuple[int, int, int], int] = {}
        m = 2
        reached = None
        while cur:
            if m == l:
                reached = min(cur)
                break
            nxt: dict[tuple[int, int], int] = {}
            for (u, w), val in sorted(cur.items()):
                iw = rest[w]
                wx, wy = xs[iw], ys[iw]
                if u == -1:
                    ux, uy = fx, fy
                else:
                    iu = rest[u]
                    ux, uy = xs[iu], ys[iu]
                dx, dy = wx - ux, wy - uy
                trow = tri[w]
                for z in range(w + 1, P):
                    iz = rest[z]
                    if stats is not None:
                        stats.candidates += 1
                    if (dx * (ys[iz] - uy) - dy * (xs[iz] - ux)) * want <= 0:
                        continue
                    v2 = val + trow[z]
                    if v2 > max_interior:
                        continue
                    key = (w, z)
                    if v2 < nxt.get(key, max_interior + 1):
                        nxt[key] = v2
                        parent[(m + 1, w, z)] = u
            cur = nxt
            m += 1
        if reached is not None:
            u, w = reached
            chain = [w, u]
            mm = m
            while mm > 2:
                chain.append(parent[(mm, chain[-1], chain[-2])])
                mm -= 1
            positions = [pos for pos in reversed(chain) if pos != -1]
            indices = tuple([fi] + [rest[pos] for pos in positions])
            return ChainWitness(indices, kind,
                                _chain_region_interior(s, indices, kind))
    return None


def find_empty_mono_quad(cs: ColoredPointSet, count_all_colors: bool = True,
                         stats: SearchStats | None = None
                         ) -> tuple[ConvexWitness, int] | None:
    """A convex quadrilateral with same-colored vertices and empty interior.

    Emptiness is judged against the whole set by default; pass
    ``count_all_colors=False`` for the weaker same-color-only reading.  The
    returned witness always reports the whole-set interior count.
    """
    _ensure_general_position(cs.base)
    counts: dict[int, int] = {}
    for c in cs.colors:
        counts[c] = counts.get(c, 0) + 1
    eligible = [c for c in sorted(counts) if counts[c] >= 4]
    if not eligible:
        raise SearchError("no color class has at least 4 points")
    xs, ys = _coords(cs.base)
    everything = list(range(len(cs.base)))
    for color in eligible:
        ids = [i for i, c in enumerate(cs.colors) if c == color]
        scope = everything if count_all_colors else ids
        vertices = _ngon_vertices(xs, ys, 4, AtMost(0), ids, scope, stats)
        if vertices is not None:
            count = _polygon_interior(xs, ys, vertices, everything)
            return ConvexWitness(tuple(vertices), count), color
    return None
