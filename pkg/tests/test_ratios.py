"""Ratio-of-sums representation counts r(z) and the R(Z) energy."""

from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from addcomb.errors import InvalidConfig
from addcomb.ratios import (
    full_ratio_set,
    level_set,
    popular_ratios,
    r_of_z,
    ratio_profile,
)
from addcomb.sets import RatSet

small_sets = st.builds(
    RatSet,
    st.lists(st.fractions(min_value=-6, max_value=6, max_denominator=2),
             min_size=1, max_size=5),
)
zs = st.fractions(min_value=-4, max_value=4, max_denominator=3)


def _r_brute(z, a1, a2) -> int:
    # definition: solutions of a1' + a2' = z (a1 + a2) over (A1 x A2)^2
    return sum(
        1
        for x in a1 for y in a2
        for xp in a1 for yp in a2
        if xp + yp == z * (x + y)
    )


def test_r_hand_value():
    a = RatSet([1, 2])
    assert r_of_z(1, a, a) == 6
    assert _r_brute(1, a, a) == 6


@given(zs, small_sets, small_sets)
@settings(max_examples=50, deadline=None)
def test_r_matches_brute_force(z, a1, a2):
    assert r_of_z(z, a1, a2) == _r_brute(z, a1, a2)


def test_ratio_profile_counts():
    a = RatSet([1, 2])
    z = RatSet([1, Fraction(1, 2), 7])
    prof = ratio_profile(z, a, a)
    assert prof.r[Fraction(1)] == 6
    assert prof.R == sum(c * c for c in prof.r.values())
    assert prof.sum_r == sum(prof.r.values())
    assert prof.zero_sums == 0
    assert prof.lemma_ratio is not None and prof.theorem_ratio is not None
    d = prof.to_json()
    assert d["R"] == prof.R and "1/2" in d["r"]


def test_ratio_profile_bounds_absent_when_sizes_reversed():
    big, small = RatSet([1, 2, 3]), RatSet([1])
    prof = ratio_profile(RatSet([1]), big, small)
    assert prof.lemma_ratio is None and prof.theorem_ratio is None


def test_zero_sums_tracked():
    a = RatSet([-1, 1])
    prof = ratio_profile(RatSet([1]), a, a)
    assert prof.zero_sums == 2  # (-1,1) and (1,-1)


def test_level_set_antitone():
    a = RatSet([1, 2, 3])
    z = full_ratio_set(a, a)
    prev = None
    for t in (1, 2, 3, 5):
        cur = level_set(z, a, a, t)
        if prev is not None:
            assert cur.is_subset(prev)
        prev = cur
    with pytest.raises(InvalidConfig):
        level_set(z, a, a, 0)


def test_full_ratio_set_excludes_zero_only_ratios():
    a = RatSet([-1, 1])  # sums: -2, 0, 0, 2
    z = full_ratio_set(a, a)
    assert z == RatSet([1, -1])  # quotients of nonzero sums only


@given(small_sets)
@settings(max_examples=30, deadline=None)
def test_full_ratio_set_members_have_solutions(a):
    z = full_ratio_set(a, a)
    for v in z:
        assert r_of_z(v, a, a) >= 1


def test_popular_ratios_deterministic_and_bounded():
    a = RatSet([1, 2, 3])
    top = popular_ratios(a, a)
    assert len(top) <= len(a) ** 2
    assert popular_ratios(a, a) == top
    top2 = popular_ratios(a, a, 2)
    assert len(top2) == 2
    assert top2.is_subset(full_ratio_set(a, a))
    # 1 is always the most popular ratio for a positive set (diagonal pairs)
    assert Fraction(1) in top2


def test_r_scale_invariance():
    # r(z) is invariant under dilating both sets: counts depend on ratios
    a = RatSet([1, 2, 5])
    b = RatSet([2, 4, 10])
    for z in (1, 2, Fraction(1, 3)):
        assert r_of_z(z, a, a) == r_of_z(z, b, b)
