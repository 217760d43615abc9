import pytest

from cpl import (
    AtMost,
    HuntQuery,
    HuntResult,
    find_ngon,
    randomized_witness_search,
    validate_general_position,
)
from cpl.claims import HUNT_BUDGET, HUNT_SEED_EMPTY5, HUNT_SEED_NGON5


def test_hunt_three_points_forbid_quadrilateral_immediate():
    r = randomized_witness_search(3, HuntQuery(4), budget=5, seed=1)
    assert r.outcome == "found"
    assert r.iterations == 0
    assert len(r.point_set) == 3


def test_hunt_reproducible():
    a = randomized_witness_search(8, HuntQuery(5), budget=2000, seed=HUNT_SEED_NGON5)
    b = randomized_witness_search(8, HuntQuery(5), budget=2000, seed=HUNT_SEED_NGON5)
    assert a.outcome == b.outcome == "found"
    assert a.point_set == b.point_set
    assert a.iterations == b.iterations


def test_hunt_eight_points_without_convex_pentagon():
    r = randomized_witness_search(8, HuntQuery(5), budget=HUNT_BUDGET,
                                  seed=HUNT_SEED_NGON5)
    assert r.outcome == "found"
    s = r.point_set
    assert validate_general_position(s).ok
    assert find_ngon(s, 5, AtMost(len(s))) is None  # exhaustive certificate


def test_hunt_nine_points_without_empty_pentagon():
    r = randomized_witness_search(9, HuntQuery(5, AtMost(0)), budget=HUNT_BUDGET,
                                  seed=HUNT_SEED_EMPTY5)
    assert r.outcome == "found"
    assert find_ngon(r.point_set, 5, AtMost(0)) is None
    # unconstrained pentagons must still exist in any 9 points
    assert find_ngon(r.point_set, 5, AtMost(9)) is not None


def test_hunt_budget_exhaustion_is_reported_not_faked():
    # one iteration on a hard instance cannot succeed
    r = randomized_witness_search(12, HuntQuery(4, AtMost(0)), budget=1, seed=0)
    assert isinstance(r, HuntResult)
    assert r.outcome == "budget-exhausted"
    assert r.point_set is None
    assert r.best_violations > 0


def test_hunt_parameter_validation():
    with pytest.raises(ValueError):
        randomized_witness_search(2, HuntQuery(4))
    with pytest.raises(ValueError):
        randomized_witness_search(65, HuntQuery(4))
    with pytest.raises(ValueError):
        randomized_witness_search(8, HuntQuery(4), budget=0)
    with pytest.raises(ValueError):
        HuntQuery(2)
