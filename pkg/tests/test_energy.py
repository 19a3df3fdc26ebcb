"""Representation histograms, k-energies, the quarter-power union check."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from addcomb.energy import (
    d_lower,
    energy,
    energy_mul_product_form,
    l4_union_check,
    rep_histogram,
)
from addcomb.errors import DivisionByZero, InvalidConfig
from addcomb.sets import RatSet, set_op

small_sets = st.builds(
    RatSet,
    st.lists(st.fractions(min_value=-8, max_value=8, max_denominator=3),
             min_size=1, max_size=6),
)
nonzero_sets = st.builds(
    RatSet,
    st.lists(st.fractions(min_value=-8, max_value=8, max_denominator=3)
             .filter(lambda v: v != 0), min_size=1, max_size=6),
)


def test_rep_histogram_diff():
    h = rep_histogram(RatSet([1, 2, 3]), RatSet([1, 2, 3]), "diff")
    assert h.count(0) == 3 and h.count(1) == 2 and h.count(2) == 1
    assert h.count(5) == 0
    assert h.mass == 9 and h.support_size == 5 and h.max_count == 3


def test_rep_histogram_ops():
    a = RatSet([1, 2])
    assert rep_histogram(a, a, "sum").count(3) == 2
    assert rep_histogram(a, a, "prod").count(2) == 2
    assert rep_histogram(a, a, "ratio").count(Fraction(1, 2)) == 1
    with pytest.raises(InvalidConfig):
        rep_histogram(a, a, "mod")
    with pytest.raises(DivisionByZero):
        rep_histogram(a, RatSet([0, 1]), "ratio")


def test_energy_hand_values():
    a = RatSet([1, 2, 3])
    assert energy(a, a, 2, "additive") == 19
    assert energy(a, a, 3, "additive") == 45
    assert energy(RatSet([1, 2, 4]), None, 2, "multiplicative") == 19
    assert energy(RatSet([1, 2, 3, 4]), k=2) == 44
    assert energy(RatSet(range(1, 9)), k=3) == 2080


def test_energy_validation():
    a = RatSet([1, 2])
    with pytest.raises(InvalidConfig):
        energy(a, a, 1)
    with pytest.raises(InvalidConfig):
        energy(a, a, 9)
    with pytest.raises(InvalidConfig):
        energy(a, a, 2, "modular")


@given(small_sets, small_sets, st.integers(2, 4))
def test_additive_energy_symmetric(a, b, k):
    # r_(A-B)(x) = r_(B-A)(-x), so all moments agree
    assert energy(a, b, k, "additive") == energy(b, a, k, "additive")


@given(small_sets, st.integers(2, 4))
@settings(max_examples=60)
def test_energy_against_quadruple_brute_force(a, k):
    # independent definition: number of 2k-tuples with equal differences,
    # computed here as sum over x of r(x)^k via raw dictionaries
    from collections import Counter

    r = Counter(p - q for p in a for q in a)
    assert energy(a, a, k, "additive") == sum(m**k for m in r.values())


@given(small_sets)
def test_cs_ladder(a):
    n = len(a)
    assert energy(a, a, 2) ** 2 <= n * n * energy(a, a, 3)


@given(nonzero_sets)
def test_mul_energy_vs_product_and_ratio_sets(a):
    em = energy(a, a, 2, "multiplicative")
    n = len(a)
    assert em * len(set_op(a, a, "prod")) >= n**4
    assert em * len(set_op(a, a, "ratio")) >= n**4


def test_energy_mul_product_form_matches_prod_histogram():
    x, y = RatSet([1, 2, 3]), RatSet([2, 5])
    h = rep_histogram(x, y, "prod")
    assert energy_mul_product_form(x, y) == h.moment(2)


def test_energy_mul_product_form_allows_zero():
    # the identity's terms are shifted sets that may contain 0; the product
    # form must handle that (ratio-form energy could not)
    x, y = RatSet([0, 1]), RatSet([1, 2])
    # products: 0,0,1,2 -> r(0)=2, r(1)=1, r(2)=1 -> sum of squares 6
    assert energy_mul_product_form(x, y) == 6


def test_d_lower_ap8():
    a = RatSet(range(1, 9))
    est = d_lower(a, 3, "additive", [a, RatSet([1, 2])])
    # E3+(A) / (|A| |A|^2) = 2080 / 512
    assert est.value == Fraction(65, 16)
    assert est.witness == a
    assert est.k == 3


def test_d_lower_ties_keep_first_candidate():
    a = RatSet([1, 2])
    est = d_lower(a, 2, "additive", [a, RatSet([3, 4])])
    assert est.witness == a


def test_l4_union_single_and_pair():
    a = RatSet([1, 2, 3, 4])
    assert l4_union_check([a]) == "ok"
    assert l4_union_check([RatSet([1, 2]), RatSet([3, 4])]) == "ok"


def test_l4_union_validation():
    with pytest.raises(InvalidConfig):
        l4_union_check([])
    with pytest.raises(InvalidConfig):
        l4_union_check([RatSet([1, 2]), RatSet([2, 3])])  # overlap


@given(st.lists(st.fractions(min_value=-9, max_value=9, max_denominator=2)
                .filter(lambda v: v != 0),
                min_size=2, max_size=10, unique=True),
       st.integers(2, 4), st.integers(0, 10**6))
@settings(max_examples=40)
def test_l4_union_random_partitions(vals, m, salt):
    buckets = [[] for _ in range(m)]
    for i, v in enumerate(vals):
        buckets[(i * 7919 + salt) % m].append(v)
    parts = [RatSet(b) for b in buckets if b]
    assert l4_union_check(parts) == "ok"
