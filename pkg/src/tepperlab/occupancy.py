"""Exact counts of passenger-to-wagon assignments by number of occupied wagons.

The closed form counts assignments of p passengers to n wagons that occupy
exactly r wagons as C(n,r) times the inclusion-exclusion surjection count

    sum_{i=0}^{r} (-1)^i C(r,i) (r-i)^p

with the 0^0 = 1 convention so that degenerate parameters (p = 0 or r = 0)
stay well defined.  ``brute_force_occupancy`` is the independent oracle: it
enumerates all n^p assignments and counts image sizes directly, guarded by
an enumeration budget.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import BudgetExceededError, InputError
from .exact import binomial

DEFAULT_ENUMERATION_BUDGET = 10**7


@dataclass(frozen=True)
class OccupancyParams:
    """n wagons, p passengers, and the target count r of occupied wagons."""

    wagons: int
    passengers: int
    occupied: int

    def __post_init__(self) -> None:
        if self.wagons < 0 or self.passengers < 0 or self.occupied < 0:
            raise InputError("wagons, passengers, and occupied must be >= 0")
        if self.occupied > self.wagons:
            raise InputError(
                f"occupied ({self.occupied}) must not exceed wagons ({self.wagons})"
            )


@dataclass(frozen=True)
class OccupancyResult:
    """Closed-form count next to the enumeration oracle, when it ran."""

    closed_form: int
    oracle: int | None
    agrees: bool | None

    def __post_init__(self) -> None:
        if self.oracle is not None and self.agrees != (self.closed_form == self.oracle):
            raise InputError("agrees must reflect closed_form == oracle")


def surjection_count(onto: int, domain: int) -> int:
    """Number of surjections from a ``domain``-set onto an ``onto``-set."""
    if onto < 0 or domain < 0:
        raise InputError("set sizes must be >= 0")
    total = 0
    sign = 1
    for i in range(onto + 1):
        total += sign * binomial(onto, i) * (onto - i) ** domain
        sign = -sign
    return total


def exact_occupancy_count(params: OccupancyParams) -> int:
    """Assignments of p passengers to n wagons occupying exactly r wagons."""
    return binomial(params.wagons, params.occupied) * surjection_count(
        params.occupied, params.passengers
    )


def brute_force_occupancy(
    params: OccupancyParams, budget: int = DEFAULT_ENUMERATION_BUDGET
) -> int:
    """The same count by exhaustive enumeration of all n^p assignments.

    Raises BudgetExceededError when n^p exceeds ``budget``; callers record
    the oracle as unavailable in that case.
    """
    n, p, r = params.wagons, params.passengers, params.occupied
    total = n**p
    if total > budget:
        raise BudgetExceededError(
            f"enumerating {n}^{p} = {total} assignments exceeds the budget of {budget}"
        )
    count = 0
    for assignment in itertools.product(range(n), repeat=p):
        mask = 0
        for wagon in assignment:
            mask |= 1 << wagon
        if mask.bit_count() == r:
            count += 1
    return count


def check_occupancy(
    params: OccupancyParams,
    with_oracle: bool = False,
    budget: int = DEFAULT_ENUMERATION_BUDGET,
) -> OccupancyResult:
    """Closed form, optionally cross-checked against the enumeration oracle."""
    closed = exact_occupancy_count(params)
    if not with_oracle:
        return OccupancyResult(closed_form=closed, oracle=None, agrees=None)
    oracle = brute_force_occupancy(params, budget=budget)
    return OccupancyResult(closed_form=closed, oracle=oracle, agrees=closed == oracle)


def alternating_power_sum(n: int, p: int) -> int:
    """C(n,1) 1^p - C(n,2) 2^p + ... + (-1)^(n-1) C(n,n) n^p.

    Zero for every 1 <= p < n; equals (-1)^(p-1) p! when p = n.  Accepts any
    p >= 1 and returns the raw signed value without classifying it.
    """
    if p < 1:
        raise InputError("alternating_power_sum requires p >= 1")
    if n < 0:
        raise InputError("alternating_power_sum requires n >= 0")
    total = 0
    sign = 1
    for k in range(1, n + 1):
        total += sign * binomial(n, k) * k**p
        sign = -sign
    return total


def stirling2(items: int, blocks: int) -> int:
    """Stirling partition number S(items, blocks).

    Standard recurrence S(p,r) = r*S(p-1,r) + S(p-1,r-1) with S(0,0) = 1.
    Cross-check: surjection_count(r, p) == factorial(r) * stirling2(p, r).
    """
    if items < 0 or blocks < 0:
        raise InputError("stirling2 arguments must be >= 0")
    if blocks > items:
        return 0
    row = [1] + [0] * blocks
    for _ in range(items):
        for r in range(blocks, 0, -1):
            row[r] = r * row[r] + row[r - 1]
        row[0] = 0
    return row[blocks]
