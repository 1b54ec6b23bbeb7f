"""Occupancy closed form vs. enumeration oracle, power sums, Stirling link."""
import itertools

import pytest

from tepperlab import (
    BudgetExceededError,
    DifferenceParams,
    InputError,
    OccupancyParams,
    Polynomial,
    alternating_power_sum,
    alternating_sum_numeric,
    brute_force_occupancy,
    check_occupancy,
    exact_occupancy_count,
    factorial,
    stirling2,
    surjection_count,
)


def count_by_enumeration(n, p, r):
    """Independent in-test oracle: count images of size r over all n^p maps."""
    return sum(
        1 for a in itertools.product(range(n), repeat=p) if len(set(a)) == r
    )


def test_params_reject_too_many_occupied():
    with pytest.raises(InputError):
        OccupancyParams(wagons=3, passengers=2, occupied=5)


def test_exact_count_three_wagons_two_passengers():
    assert count_by_enumeration(3, 2, 2) == 6
    assert exact_occupancy_count(OccupancyParams(3, 2, 2)) == 6


def test_exact_count_pigeonhole_zero():
    assert exact_occupancy_count(OccupancyParams(5, 3, 5)) == 0


def test_exact_count_all_distinct_is_factorial():
    assert exact_occupancy_count(OccupancyParams(4, 4, 4)) == 24


def test_brute_force_examples():
    assert brute_force_occupancy(OccupancyParams(3, 2, 2)) == 6
    assert brute_force_occupancy(OccupancyParams(2, 3, 1)) == 2
    assert brute_force_occupancy(OccupancyParams(1, 1, 1)) == 1


def test_brute_force_budget_guard():
    with pytest.raises(BudgetExceededError):
        brute_force_occupancy(OccupancyParams(10, 9, 3), budget=1000)


def test_check_occupancy_records_oracle():
    with_oracle = check_occupancy(OccupancyParams(3, 2, 2), with_oracle=True)
    assert (with_oracle.closed_form, with_oracle.oracle, with_oracle.agrees) == (6, 6, True)
    without = check_occupancy(OccupancyParams(3, 2, 2))
    assert (without.closed_form, without.oracle, without.agrees) == (6, None, None)


def test_surjection_examples():
    assert surjection_count(2, 2) == 2  # the two bijections
    assert surjection_count(3, 3) == 6
    assert surjection_count(3, 2) == 0  # no surjection onto a larger set


def test_surjection_degenerate_convention():
    assert surjection_count(0, 0) == 1
    assert surjection_count(0, 3) == 0
    assert surjection_count(3, 0) == 0


def test_alternating_power_sum_examples():
    assert alternating_power_sum(3, 2) == 0  # 3*1 - 3*4 + 1*9
    assert alternating_power_sum(2, 2) == -2  # 2*1 - 1*4
    assert alternating_power_sum(4, 1) == 0  # 4 - 12 + 12 - 4


def test_alternating_power_sum_requires_positive_p():
    with pytest.raises(InputError):
        alternating_power_sum(3, 0)


def test_stirling2_examples():
    assert stirling2(3, 2) == 3  # {12|3}, {13|2}, {23|1}
    assert stirling2(5, 5) == 1
    assert stirling2(0, 0) == 1
    assert stirling2(4, 2) == 7


@pytest.mark.parametrize("n", range(7))
@pytest.mark.parametrize("p", range(7))
def test_closed_form_equals_enumeration(n, p):
    for r in range(n + 1):
        params = OccupancyParams(n, p, r)
        assert exact_occupancy_count(params) == brute_force_occupancy(params)


@pytest.mark.parametrize("n", range(9))
@pytest.mark.parametrize("p", range(9))
def test_counts_partition_all_assignments(n, p):
    total = sum(exact_occupancy_count(OccupancyParams(n, p, r)) for r in range(n + 1))
    assert total == n**p


def test_surjections_factor_through_stirling():
    for p in range(16):
        for r in range(16):
            assert surjection_count(r, p) == factorial(r) * stirling2(p, r)


def test_power_sum_vanishes_below_n():
    for n in range(2, 31):
        for p in range(1, n):
            assert alternating_power_sum(n, p) == 0


def test_power_sum_diagonal_is_signed_factorial():
    for p in range(1, 21):
        assert alternating_power_sum(p, p) == (-1) ** (p - 1) * factorial(p)


def test_bridge_to_alternating_sum():
    # the order-n sum of x^p at x = n is literally the surjection count
    for n in range(13):
        value = alternating_sum_numeric(
            Polynomial.monomial(n), DifferenceParams(order=n, step=1), n
        )
        assert value == surjection_count(n, n) == factorial(n)
    for n in range(9):
        for p in range(9):
            value = alternating_sum_numeric(
                Polynomial.monomial(p), DifferenceParams(order=n, step=1), n
            )
            assert value == surjection_count(n, p)
