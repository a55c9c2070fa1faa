import pytest
from hypothesis import given, strategies as st

from collatz_obs.core import (
    ResidueClass,
    UndecidedError,
    classify,
    peak,
    predecessors,
    steps_to_one,
    t_step,
    trajectory,
    v2,
)

from oracles import (
    brute_preimages,
    count_odd_steps,
    odd_iterates,
    orbit_max,
    valuation_by_division,
)

odd = st.integers(min_value=0, max_value=10**12).map(lambda k: 2 * k + 1)
huge_odd = st.integers(min_value=0, max_value=2**400).map(lambda k: 2 * k + 1)


@pytest.mark.parametrize("m, expected", [(4, 2), (1, 0), (118096, valuation_by_division(118096))])
def test_v2_examples(m, expected):
    assert v2(m) == expected


def test_v2_frozen_value():
    # 118096 = 3 * 39365 + 1 = 16 * 7381
    assert valuation_by_division(118096) == 4
    assert v2(118096) == 4


def test_v2_rejects_zero():
    with pytest.raises(ValueError):
        v2(0)


@given(st.integers(min_value=1, max_value=2**300))
def test_v2_matches_division(m):
    assert v2(m) == valuation_by_division(m)


@pytest.mark.parametrize("x, after, val", [(39365, 7381, 4), (1, 1, 2), (13, 5, 3)])
def test_t_step_examples(x, after, val):
    rec = t_step(x)
    assert (rec.before, rec.after, rec.valuation) == (x, after, val)


@given(huge_odd)
def test_t_step_reconstructs(x):
    rec = t_step(x)
    assert rec.after % 2 == 1
    assert rec.valuation >= 1
    assert 3 * x + 1 == rec.after << rec.valuation


@pytest.mark.parametrize("bad", [0, 2, -3, 10])
def test_t_step_rejects_non_odd(bad):
    with pytest.raises(ValueError):
        t_step(bad)


@pytest.mark.parametrize("x, tag", [(13, ResidueClass.FALL), (7, ResidueClass.RISE),
                                    (1, ResidueClass.FIXED_POINT)])
def test_classify_examples(x, tag):
    assert classify(x) is tag


@given(huge_odd)
def test_classify_direction(x):
    tag = classify(x)
    after = t_step(x).after
    if tag is ResidueClass.FALL:
        assert after < x and t_step(x).valuation >= 2
    elif tag is ResidueClass.RISE:
        assert after > x and t_step(x).valuation == 1
    else:
        assert x == 1 and after == 1


def test_trajectory_of_7():
    tr = trajectory(7)
    assert tr.iterates == [7, 11, 17, 13, 5, 1]
    assert tr.odd_step_count == 5
    assert tr.peak == 52 == orbit_max(7)
    assert tr.reached_one


def test_trajectory_of_1():
    tr = trajectory(1)
    assert tr.steps == () and tr.peak == 1 and tr.reached_one


def test_trajectory_of_27():
    tr = trajectory(27)
    assert tr.reached_one
    assert tr.peak == 9232 == orbit_max(27)


def test_trajectory_budget_exhausted():
    tr = trajectory(27, max_steps=3)
    assert not tr.reached_one
    assert tr.odd_step_count == 3


@given(odd.filter(lambda x: x < 10**6))
def test_trajectory_chain_invariants(x):
    tr = trajectory(x)
    for a, b in zip(tr.steps, tr.steps[1:]):
        assert a.after == b.before
    assert tr.steps == () or tr.steps[-1].after == 1
    assert tr.iterates == odd_iterates(x)


def test_trajectory_peak_matches_naive_orbit():
    for x in range(1, 10**4 + 1, 2):
        assert trajectory(x).peak == orbit_max(x), x


@pytest.mark.parametrize("x, n", [(7, 5), (1, 1), (27, 41)])
def test_steps_to_one(x, n):
    assert steps_to_one(x) == n == count_odd_steps(x)


@pytest.mark.parametrize("x, p", [(27, 9232), (7, 52), (1, 1)])
def test_peak(x, p):
    assert peak(x) == p


def test_undecided_is_raised_not_returned():
    with pytest.raises(UndecidedError) as e:
        steps_to_one(27, max_steps=10)
    assert e.value.start == 27
    with pytest.raises(UndecidedError):
        peak(27, max_steps=10)


def test_predecessors_contract_for_5():
    # 853 needs valuation 9 (3*853+1 = 2560 = 2**9 * 5), so a cap of 8 excludes it
    assert predecessors(5, 8) == [3, 13, 53, 213] == brute_preimages(5, 8)
    assert predecessors(5, 10) == [3, 13, 53, 213, 853] == brute_preimages(5, 10)


def test_predecessors_multiple_of_three():
    assert predecessors(9, 10) == []


def test_predecessors_of_one():
    assert predecessors(1, 4) == [1, 5] == brute_preimages(1, 4)


@pytest.mark.parametrize("m", [1, 5, 7, 11, 13, 17, 19, 23, 25])
@pytest.mark.parametrize("cap", [1, 3, 6])
def test_predecessors_sound_and_complete(m, cap):
    got = predecessors(m, cap)
    assert got == sorted(got)
    for y in got:
        assert t_step(y).after == m
    assert got == brute_preimages(m, cap)
