import pytest

from cpl import (
    AtMost,
    ChainKind,
    ColoredPointSet,
    PointSet,
    SearchError,
    ZeroMod,
    find_chain,
    find_empty_mono_quad,
    find_ngon,
    horton,
    longest_chain,
    max_convex_subset,
    oracle_find_chain,
    oracle_find_empty_mono_quad,
    oracle_find_ngon,
    oracle_longest_chain,
    oracle_max_convex_subset,
    random_general_position,
)


def test_size_guard():
    s = random_general_position(17, seed=0)
    with pytest.raises(SearchError):
        oracle_find_ngon(s, 4, AtMost(0))
    with pytest.raises(SearchError):
        oracle_max_convex_subset(s)


def test_oracle_deterministic_and_order_independent_outcome():
    s = random_general_position(9, seed=42)
    a = oracle_find_ngon(s, 5, AtMost(0))
    b = oracle_find_ngon(s, 5, AtMost(0))
    assert a == b
    perm = PointSet(tuple(reversed(s.points)))
    c = oracle_find_ngon(perm, 5, AtMost(0))
    assert (a is None) == (c is None)


def test_oracle_equivalence_sample():
    # a smaller copy of the acceptance sweep, for fast feedback
    for t in range(40):
        n = 6 + t % 6
        s = random_general_position(n, seed=2_000 + t, coord_range=3_000)
        assert max_convex_subset(s)[0] == oracle_max_convex_subset(s)[0]
        ngon, k, q = 4 + t % 3, t % 3, 2 + t % 2
        assert (find_ngon(s, ngon, AtMost(k)) is None) == \
            (oracle_find_ngon(s, ngon, AtMost(k)) is None)
        assert (find_ngon(s, ngon, ZeroMod(q)) is None) == \
            (oracle_find_ngon(s, ngon, ZeroMod(q)) is None)
        for kind in (ChainKind.CUP, ChainKind.CAP):
            assert longest_chain(s, kind)[0] == oracle_longest_chain(s, kind)[0]
            assert (find_chain(s, kind, 4, t % 2) is None) == \
                (oracle_find_chain(s, kind, 4, t % 2) is None)
        colors = tuple(0 if i < 4 else i % 2 for i in range(n))
        cs = ColoredPointSet(s, colors)
        assert (find_empty_mono_quad(cs) is None) == \
            (oracle_find_empty_mono_quad(cs) is None)


def test_oracle_horton_level4_has_no_empty_heptagon():
    h4 = horton(4)
    assert oracle_find_ngon(h4, 7, AtMost(0)) is None
    assert find_ngon(h4, 7, AtMost(0)) is None
