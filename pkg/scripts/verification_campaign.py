#!/usr/bin/env python3
"""Seeded large-scale verification campaign over every identity family.

Runs the symbolic sweeps, the dual-path cross-check, the occupancy oracle
grid, and the modular-route agreement at configurable bounds, then prints
one summary line per family.  Exits 1 if anything fails.

Usage: python scripts/verification_campaign.py [--max-degree 12] [--max-step 8]
       [--trials 10] [--seed 0] [--prime-bound 200] [--occupancy-bound 6]
"""
import argparse
import random
import sys
import time

from tepperlab import (
    DifferenceParams,
    OccupancyParams,
    alternating_sum_symbolic,
    brute_force_occupancy,
    exact_occupancy_count,
    factorial_mod_fermat_route,
    factorial_mod_naive,
    factorial_mod_tepper,
    iterated_difference,
    sweep_conjecture,
)
from tepperlab.identities import random_polynomial
from tepperlab.numtheory import is_prime_trial


def banner(label: str, passed: int, total: int, elapsed: float) -> bool:
    ok = passed == total
    print(f"{'PASS' if ok else 'FAIL'} {label}: {passed}/{total} in {elapsed:.2f}s")
    return ok


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-degree", type=int, default=12)
    parser.add_argument("--max-step", type=int, default=8)
    parser.add_argument("--trials", type=int, default=10)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--prime-bound", type=int, default=200)
    parser.add_argument("--occupancy-bound", type=int, default=6)
    args = parser.parse_args()

    all_ok = True

    start = time.perf_counter()
    reports = sweep_conjecture(args.max_degree, args.max_step, args.trials, args.seed)
    all_ok &= banner(
        "step-l sweep", sum(r.passed for r in reports), len(reports), time.perf_counter() - start
    )

    rng = random.Random(args.seed)
    start = time.perf_counter()
    agreements = 0
    instances = 1000
    for _ in range(instances):
        p = random_polynomial(rng, rng.randint(0, args.max_degree))
        params = DifferenceParams(order=rng.randint(0, 10), step=rng.randint(1, 5))
        agreements += iterated_difference(p, params) == alternating_sum_symbolic(p, params)
    all_ok &= banner("dual-path agreement", agreements, instances, time.perf_counter() - start)

    start = time.perf_counter()
    agree = total = 0
    bound = args.occupancy_bound
    for n in range(bound + 1):
        for p in range(bound + 1):
            for r in range(n + 1):
                params = OccupancyParams(n, p, r)
                total += 1
                agree += exact_occupancy_count(params) == brute_force_occupancy(params)
    all_ok &= banner("occupancy oracle grid", agree, total, time.perf_counter() - start)

    start = time.perf_counter()
    primes = [p for p in range(2, args.prime_bound + 1) if is_prime_trial(p)]
    routes_ok = 0
    for p in primes:
        naive = factorial_mod_naive(p - 1, p)
        routes_ok += (
            naive == factorial_mod_tepper(p).computed_residue
            == factorial_mod_fermat_route(p).computed_residue
            == p - 1
        )
    all_ok &= banner("modular route agreement", routes_ok, len(primes), time.perf_counter() - start)

    return 0 if all_ok else 1


if __name__ == "__main__":
    sys.exit(main())
