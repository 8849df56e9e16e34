from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from multimagic import (
    Square,
    is_multimagic,
    magic_constant,
    normalize,
    power_sum,
    power_sum_profile,
    verify_multimagic,
)

from .conftest import as_lists, direct_constant, direct_power_sum, line_sums, oracle_multimagic


@pytest.mark.parametrize("n", range(1, 65))
def test_magic_constant_matches_brute_force(n):
    for e in (1, 2, 3):
        assert magic_constant(n, e) * n == direct_power_sum(n * n, e)


def test_magic_constant_zero_exponent_is_order():
    assert [magic_constant(q, 0) for q in (1, 4, 9)] == [1, 4, 9]


def test_magic_constant_is_always_integral():
    # over k < n^2 every residue mod n occurs n times, so n divides the power sum
    for n in range(1, 30):
        for e in range(1, 12):
            assert magic_constant(n, e) * n == power_sum(n * n, e)


@pytest.mark.parametrize("count,e", [(4097, 3), (5000, 5), (65536, 3), (20000, 7)])
def test_power_sum_large_counts_match_direct_loop(count, e):
    assert power_sum(count, e) == direct_power_sum(count, e)


def test_order_one_square_is_multimagic_at_every_degree():
    assert verify_multimagic(Square(((0,),)), 3, True).overall


def test_first_order_4_member_fails_squares_on_row_0(b0):
    rep = verify_multimagic(b0, 2, True)
    assert not rep.overall
    assert rep.per_degree[0].passed
    assert rep.first_failure() == (2, "rows", 0)
    row0 = as_lists(b0)[0]
    assert row0 == [2, 12, 5, 11]
    assert sum(v * v for v in row0) != direct_constant(4, 2)
    assert "e=2" in rep.summary()


def test_non_normalized_square_fails_ms_but_passes_general(pf8):
    shifted = Square(tuple(tuple(v + 1 for v in r) for r in pf8.cells))
    strict = verify_multimagic(shifted, 2, True)
    general = verify_multimagic(shifted, 2, False)
    assert not strict.overall and not strict.normalized
    assert general.overall
    assert "not 0..n^2-1" in strict.summary()


def test_bool_and_helper(pf8):
    assert verify_multimagic(pf8, 2)
    assert is_multimagic(pf8, 2)
    assert not is_multimagic(pf8, 3)


def test_verify_rejects_degree_zero(pf8):
    with pytest.raises(ValueError):
        verify_multimagic(pf8, 0)


def test_power_sum_profile_small_grid():
    assert power_sum_profile([[0, 1], [1, 0]], 1) == [1, 1, 1, 1, 0, 2]


def test_profile_of_order_4_pair_adds_to_620(b0, b1):
    p0, p1 = power_sum_profile(b0, 2), power_sum_profile(b1, 2)
    assert [a + b for a, b in zip(p0, p1)] == [620] * 10
    assert p0 == line_sums(as_lists(b0), 2)


def test_profile_of_order_8_seed_squares(pf8):
    assert power_sum_profile(pf8, 2) == [10668] * 18


def test_normalize_examples(pf8):
    assert as_lists(normalize([[5, 6], [7, 8]])) == [[0, 1], [2, 3]]
    assert normalize(pf8) == pf8
    one_based = [[v + 1 for v in r] for r in as_lists(pf8)]
    assert sorted(v for r in one_based for v in r) == list(range(1, 65))
    assert as_lists(normalize(one_based)) == as_lists(pf8)


def test_large_entries_use_exact_arithmetic():
    big = 3 * 10**12
    sq = Square(((big, big), (big, big)))
    rep = verify_multimagic(sq, 3, False)
    assert rep.overall
    assert rep.per_degree[2].target == 2 * big**3


def test_dimension_checks():
    with pytest.raises(ValueError):
        Square(((0, 1), (2,)))


grids = st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-50, 50), min_size=n, max_size=n), min_size=n, max_size=n)
)


@settings(max_examples=150, deadline=None)
@given(grids)
def test_normalize_is_idempotent_and_zero_based(grid):
    once = normalize(grid)
    assert normalize(once) == once
    assert min(once.entries()) == 0


@settings(max_examples=150, deadline=None)
@given(grids, st.integers(1, 3))
def test_verification_agrees_with_oracle_and_is_deterministic(grid, t):
    rep = verify_multimagic(grid, t, True)
    assert rep.overall == oracle_multimagic(grid, t)
    assert verify_multimagic(grid, t, True) == rep
    general = verify_multimagic(grid, t, False)
    want = all(len(set(line_sums(grid, e))) == 1 for e in range(1, t + 1))
    assert general.overall == want


@pytest.mark.parametrize("name", ["pf8", "b0", "b1", "big_c"])
def test_lower_degrees_follow_from_higher(name, request):
    sq = request.getfixturevalue(name)
    top = sq.degree
    assert verify_multimagic(sq, top).overall
    for t in range(1, top + 1):
        assert verify_multimagic(sq, t).overall
