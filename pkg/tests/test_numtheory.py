"""Modular routes to (p-1)! and the Wilson/Fermat checks."""
import hypothesis.strategies as st
import pytest
from hypothesis import given

from tepperlab import (
    InputError,
    binomial,
    factorial,
    factorial_mod_fermat_route,
    factorial_mod_naive,
    factorial_mod_tepper,
    fermat_check,
    mod_pow,
    wilson_primality,
)
from tepperlab.numtheory import ROUTE_FERMAT, ROUTE_TEPPER, factorial_mod_naive_check, is_prime_trial

PRIMES_TO_50 = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]


def test_mod_pow_examples():
    assert mod_pow(2, 10, 1000) == 24
    assert mod_pow(7, 0, 13) == 1
    assert mod_pow(3, 4, 5) == 1


def test_mod_pow_zero_conventions():
    assert mod_pow(0, 0, 7) == 1
    assert mod_pow(5, 3, 1) == 0
    with pytest.raises(InputError):
        mod_pow(2, 3, 0)


@given(st.integers(0, 10**6), st.integers(0, 500), st.integers(1, 10**6))
def test_mod_pow_matches_builtin(base, exponent, modulus):
    assert mod_pow(base, exponent, modulus) == pow(base, exponent, modulus)


def test_factorial_mod_naive_examples():
    assert factorial_mod_naive(4, 5) == 4
    assert factorial_mod_naive(0, 7) == 1
    assert factorial_mod_naive(6, 7) == 6


def test_tepper_route_examples():
    for p, residue in ((5, 4), (3, 2), (2, 1)):
        check = factorial_mod_tepper(p)
        assert check.route == ROUTE_TEPPER
        assert (check.computed_residue, check.expected_residue, check.passed) == (residue, p - 1, True)


def test_tepper_route_reports_composites_without_expectation():
    check = factorial_mod_tepper(8)
    assert check.computed_residue == factorial(7) % 8 == 0
    assert not check.passed


def test_fermat_route_examples():
    for p, residue in ((5, 4), (3, 2)):
        check = factorial_mod_fermat_route(p)
        assert check.route == ROUTE_FERMAT
        assert (check.computed_residue, check.passed) == (residue, True)


def test_fermat_route_rejects_composites():
    with pytest.raises(InputError):
        factorial_mod_fermat_route(9)


def test_fermat_check_examples():
    assert fermat_check(2, 7) is True
    assert fermat_check(3, 9) is False  # composite modulus counterexample
    assert fermat_check(1, 11) is True


def test_wilson_primality_examples():
    assert wilson_primality(7) is True
    assert wilson_primality(8) is False
    assert wilson_primality(2) is True


def test_wilson_primality_guards():
    with pytest.raises(InputError):
        wilson_primality(1)
    with pytest.raises(InputError):
        wilson_primality(10**7)  # beyond the default input limit
    assert wilson_primality(10**6 + 3, limit=10**6 + 3) in (True, False)


def test_routes_agree_on_small_primes():
    for p in PRIMES_TO_50:
        naive = factorial_mod_naive_check(p)
        tepper = factorial_mod_tepper(p)
        fermat = factorial_mod_fermat_route(p)
        assert naive.computed_residue == tepper.computed_residue == fermat.computed_residue == p - 1
        assert naive.passed and tepper.passed and fermat.passed


def test_wilson_matches_trial_division_small():
    for n in range(2, 300):
        assert wilson_primality(n) == is_prime_trial(n)


def test_fermat_law_small_primes():
    for p in PRIMES_TO_50:
        for k in range(1, p):
            assert fermat_check(k, p)


def test_alternating_sum_is_signed_factorial_as_integers():
    # before any reduction, the route's sum is exactly +-n!
    for n in range(1, 41):
        total = sum((-1) ** k * binomial(n, k) * k**n for k in range(n + 1))
        assert total == (-1) ** n * factorial(n)


def test_binomial_residue_shortcut():
    # C(p-1, k) = (-1)^k (mod p) for prime p; the exact route must agree
    for p in PRIMES_TO_50:
        for k in range(p):
            assert binomial(p - 1, k) % p == (-1) ** k % p
