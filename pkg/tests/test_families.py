from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from collatz_obs.core import odd_part, t_step, trajectory
from collatz_obs.families import (
    FamilySpec,
    census_brute,
    census_classes,
    enumerate_family,
    lift,
    partition,
    shift_orbit,
    start_stats,
)

from oracles import orbit_max, odd_iterates

odd_small = st.integers(min_value=0, max_value=5 * 10**5).map(lambda k: 2 * k + 1)


def family_oracle(base, bound):
    out = set()
    for n in range(0, 40):
        z = 4**n * base + (4**n - 1) // 3
        for m in range(0, 80):
            if 2**m * z <= bound:
                out.add(2**m * z)
    return sorted(out)


def test_shift_examples():
    assert shift_orbit(5, 2) == 20
    assert shift_orbit(9, 0) == 9
    assert shift_orbit(27, 1) == 54
    assert orbit_max(54) == 9232


@pytest.mark.parametrize("y, n, z", [(5, 1, 21), (9, 0, 9), (1, 2, 21)])
def test_lift_examples(y, n, z):
    assert lift(y, n) == z


def test_lift_5_shares_image():
    assert t_step(21).after == t_step(5).after == 1


@given(odd_small, st.integers(min_value=1, max_value=5))
def test_lift_shares_first_image(y, n):
    z = lift(y, n)
    assert z % 2 == 1
    assert t_step(z).after == t_step(y).after


@given(odd_small, st.integers(min_value=0, max_value=12))
def test_shift_shares_odd_iterates(y, k):
    assert odd_part(shift_orbit(y, k)) == y
    assert odd_iterates(y << k) == odd_iterates(y)


@settings(max_examples=50)
@given(st.integers(min_value=0, max_value=5000).map(lambda k: 2 * k + 1),
       st.integers(min_value=1, max_value=4))
def test_lift_preserves_reaching_one(y, n):
    a, b = trajectory(y), trajectory(lift(y, n))
    assert a.reached_one and b.reached_one
    if y > 1:
        assert b.iterates[1:] == a.iterates[1:]


@pytest.mark.parametrize("base, bound, expected", [
    (5, 100, [5, 10, 20, 21, 40, 42, 80, 84, 85]),
    (101, 100, []),
    (1, 10, [1, 2, 4, 5, 8, 10]),
])
def test_enumerate_family_examples(base, bound, expected):
    assert family_oracle(base, bound) == expected
    assert enumerate_family(base, bound) == expected


@given(st.integers(min_value=0, max_value=500).map(lambda k: 2 * k + 1),
       st.integers(min_value=1, max_value=10**5))
def test_enumerate_family_properties(base, bound):
    fam = enumerate_family(base, bound)
    assert fam == family_oracle(base, bound)
    if base <= bound:
        assert base in fam
    assert len(set(fam)) == len(fam)
    for v in fam:
        assert t_step(odd_part(v)).after == t_step(base).after


def test_family_spec_value():
    assert FamilySpec(5, 2, 1).value == 84


def test_start_stats_even_and_one():
    assert start_stats(1).peak == 1
    assert start_stats(16).peak == 16
    assert start_stats(54).peak == 9232
    for s in range(1, 3000):
        assert start_stats(s).peak == orbit_max(s), s


def census_oracle(bound, target):
    return [s for s in range(1, bound + 1) if orbit_max(s) == target]


def test_census_small_examples():
    assert census_brute(10, 9232).count == 0
    assert census_classes(10, 9232).count == 0
    assert 27 in census_brute(27, 9232).starts


def test_census_1000_matches_oracle():
    res = census_brute(1000, 9232)
    assert res.starts == census_oracle(1000, 9232)
    assert res.count == len(res.records)


def test_census_classes_100():
    assert census_classes(100, 9232).records == census_brute(100, 9232).records


def test_census_methods_agree_on_many_peaks():
    for bound in (37, 250, 2000):
        hist = Counter(orbit_max(s) for s in range(1, bound + 1))
        peaks = {9232} | {p for p, _ in hist.most_common(6)} | {orbit_max(bound)}
        for p in sorted(peaks):
            brute = census_brute(bound, p)
            assert census_classes(bound, p).records == brute.records, (bound, p)
            assert brute.starts == census_oracle(bound, p)


def test_census_records_consistent_with_core():
    for rec in census_brute(300, 9232).records:
        tr = trajectory(odd_part(rec.start))
        assert rec.odd_steps == tr.odd_step_count
        assert rec.peak == max(rec.start, tr.peak)


@pytest.mark.parametrize("parts", [1, 2, 3, 7, 64])
def test_partition_covers_range(parts):
    ranges = partition(100, parts)
    covered = [s for lo, hi in ranges for s in range(lo, hi + 1)]
    assert covered == list(range(1, 101))


def test_parallel_census_is_deterministic():
    base = census_brute(600, 9232)
    assert census_brute(600, 9232, parallel=3) == base


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_census_methods_agree_property(data):
    bound = data.draw(st.integers(min_value=1, max_value=2000))
    observed = sorted({orbit_max(s) for s in range(1, bound + 1)} | {9232})
    p = data.draw(st.sampled_from(observed))
    assert census_classes(bound, p).records == census_brute(bound, p).records
