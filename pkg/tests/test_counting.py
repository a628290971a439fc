import itertools

import pytest
from hypothesis import given, settings, strategies as st

from communal import (ResultTooLarge, count, enumerate_bijective,
                      enumerate_oracle, is_communal, multiset_count, parse_alpha, slack)
from communal.counting import from_epsilon, to_epsilon

from conftest import random_systems


def product_oracle(sys_, g):
    """Independent check: filter every k-tuple in [0, g]^k."""
    return sorted(p for p in itertools.product(range(g + 1), repeat=sys_.k)
                  if sum(p) == g and all(x <= a * g for x, a in zip(p, sys_.alphas)))


def parts(comps):
    return [list(c.parts) for c in comps]


def test_slack_examples(candy):
    assert slack(candy, 100).s_g == 1
    assert slack(candy, 1).s_g == -1
    assert slack(candy, 0).s_g == 0


@pytest.mark.parametrize("m,k,expected", [(1, 3, 3), (0, 2, 1), (0, 5, 1), (-1, 3, 0), (4, 2, 5)])
def test_multiset_count(m, k, expected):
    assert multiset_count(m, k) == expected


@given(st.integers(0, 8), st.integers(1, 4))
def test_multiset_count_matches_product(m, k):
    brute = sum(1 for p in itertools.product(range(m + 1), repeat=k) if sum(p) == m)
    assert multiset_count(m, k) == brute


def test_count_examples(candy, andrews3):
    assert count(candy, 100) == 3
    assert count(candy, 101) == 1
    assert count(candy, 0) == 1
    assert count(andrews3, 5) == 3


def test_enumerate_candy(candy):
    assert parts(enumerate_bijective(candy, 100)) == [[32, 40, 28], [33, 39, 28], [33, 40, 27]]
    assert parts(enumerate_bijective(candy, 101)) == [[33, 40, 28]]
    assert parts(enumerate_bijective(candy, 0)) == [[0, 0, 0]]
    assert enumerate_bijective(candy, 1) == []


def test_oracle_examples(candy, half_half_3):
    assert len(enumerate_oracle(half_half_3, 6)) == 6
    assert enumerate_oracle(candy, 1) == []
    assert parts(enumerate_oracle(candy, 0)) == [[0, 0, 0]]


def test_small_values_against_product(andrews3, ex_a1):
    assert [tuple(c) for c in enumerate_oracle(andrews3, 5)] == [(1, 2, 2), (2, 1, 2), (2, 2, 1)]
    assert len(enumerate_bijective(andrews3, 6)) == 10
    assert enumerate_bijective(ex_a1, 5) == []
    assert parts(enumerate_bijective(ex_a1, 6)) == [[3, 2, 1]]


def test_caps(andrews3):
    with pytest.raises(ResultTooLarge):
        enumerate_bijective(andrews3, 20, cap=5)
    with pytest.raises(ResultTooLarge):
        enumerate_oracle(andrews3, 20, cap=5)
    assert len(enumerate_bijective(andrews3, 20, cap=count(andrews3, 20))) == count(andrews3, 20)


def test_fixture_oracle_equivalence(fixture_system):
    for g in range(201):
        bij = enumerate_bijective(fixture_system, g)
        assert bij == enumerate_oracle(fixture_system, g), g
        assert len(bij) == count(fixture_system, g)


@pytest.mark.parametrize("sys_", random_systems(30, seed=3))
def test_random_oracle_equivalence(sys_):
    for g in range(61):
        bij = enumerate_bijective(sys_, g)
        assert bij == enumerate_oracle(sys_, g)
        assert len(bij) == count(sys_, g)
        if g <= 12 and sys_.k <= 3:
            assert [c.parts for c in bij] == product_oracle(sys_, g)


@pytest.mark.parametrize("sys_", random_systems(20, seed=5))
def test_slack_bound(sys_):
    for g in range(200):
        s = slack(sys_, g).s_g
        if s >= 0:
            assert all(s <= f for f in sys_.floors(g))


def test_epsilon_roundtrip(fixture_system):
    for g in range(0, 120, 7):
        for c in enumerate_oracle(fixture_system, g):
            eps = to_epsilon(fixture_system, c)
            assert min(eps) >= 0 and sum(eps) == slack(fixture_system, g).s_g
            assert from_epsilon(fixture_system, g, eps) == c


def test_enumerated_are_communal_and_sorted(candy):
    comps = enumerate_bijective(candy, 150)
    assert comps == sorted(comps)
    assert all(is_communal(candy, c) and c.total == 150 for c in comps)


def test_andrews_parity_monotone(andrews3):
    for parity in (0, 1):
        vals = [count(andrews3, g) for g in range(max(1, parity), 200, 2)]
        assert vals == sorted(vals)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["1/2,1/2,1/2", "1/3,2/5,2/7", "2/3,1/2", "1/3,1/3,1/4,1/3"]),
       st.integers(0, 40))
def test_count_matches_oracle_hypothesis(alpha, g):
    sys_ = parse_alpha(alpha)
    assert count(sys_, g) == len(enumerate_oracle(sys_, g))
