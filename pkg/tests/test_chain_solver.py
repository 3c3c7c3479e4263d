from functools import reduce
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from ussp.chain_solver import solve_chain, threshold_z
from ussp.errors import Infeasible, TooSmall
from ussp.subset_finder import find_divisor_subset

import brute

weight_sets = st.lists(st.integers(1, 40), min_size=1, max_size=6, unique=True).map(sorted)


def test_threshold_examples():
    assert threshold_z(find_divisor_subset(1, [11, 13])) == 119
    assert threshold_z(find_divisor_subset(5, [4, 6, 7])) == 17
    assert max(set(range(60)) - brute.representable(60, [4, 7])) == 17
    assert threshold_z(find_divisor_subset(14, [7, 9])) == 0


def test_examples():
    sol, trace = solve_chain(18, [4, 7])
    assert sol.coefficients == (1, 2)
    assert trace.steps == [(1, 4, 2, 4)]
    sol, _ = solve_chain(0, [3, 5])
    assert sol.coefficients == (0, 0)
    with pytest.raises(Infeasible):
        solve_chain(7, [4, 6])


def test_literal_subset_for_120():
    # gcd(6, 10) | 120 and gcd(6) | 120, so the scan keeps only 6
    sol, trace = solve_chain(120, [6, 10, 15])
    assert sol.coefficients == (20, 0, 0)
    assert trace.steps == []
    sol, trace = solve_chain(120, [6, 10, 15], spread=True)
    assert sol.coefficients == (0, 0, 8)
    assert trace.spread_steps == [(0, 0), (1, 0)]


def test_consumption_order_replay():
    # subset (15, 10, 6): 15 against gcd(10, 6) = 2, then 10 against 6
    sol, trace = solve_chain(7 + 30 * 20, [6, 10, 15])
    assert [step[:2] for step in trace.steps] == [(2, 2), (1, 6)]
    last_index = find_divisor_subset(7 + 30 * 20, [6, 10, 15]).indices[-1]
    assert last_index == 0


def test_too_small_below_threshold():
    with pytest.raises(TooSmall):
        solve_chain(1, [3, 5])


@settings(max_examples=400)
@given(st.integers(0, 3000), weight_sets, st.booleans())
def test_soundness_fuzz(s, weights, spread):
    g = reduce(gcd, weights)
    try:
        sol, trace = solve_chain(s, weights, spread=spread)
    except Infeasible:
        assert s % g != 0
        return
    except TooSmall:
        assert s % g == 0
        return
    assert s % g == 0
    assert sum(y * w for y, w in zip(sol.coefficients, weights)) == s
    assert min(sol.coefficients) >= 0
    assert trace.final_residual == 0
    residuals = [s] + [step[3] for step in trace.steps]
    assert residuals == sorted(residuals, reverse=True)
    for _, modulus, _, residual in trace.steps:
        assert residual % modulus == 0


@settings(max_examples=300)
@given(st.integers(0, 3000), weight_sets)
def test_spread_modes_agree_on_validity(s, weights):
    outcomes = []
    for spread in (False, True):
        try:
            sol, _ = solve_chain(s, weights, spread=spread)
            outcomes.append("solved")
        except (Infeasible, TooSmall) as exc:
            outcomes.append(type(exc).__name__)
    assert outcomes[0] == outcomes[1]


def test_spread_uses_more_weights():
    sol, _ = solve_chain(10**6, [7, 11, 13, 17], spread=True)
    assert sum(1 for y in sol.coefficients if y) > 1


def test_huge_weights():
    weights = [(1 << 60) - 93, (1 << 60) - 57, (1 << 61) - 1]
    s = (1 << 122) + 12345
    sol, _ = solve_chain(s, weights)
    assert sum(y * w for y, w in zip(sol.coefficients, weights)) == s
