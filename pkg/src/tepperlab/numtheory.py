"""Modular arithmetic: the factorial congruence (p-1)! = -1 (mod p) by
three routes, Fermat checks, and a Wilson primality test.

The three routes to (p-1)! mod p:

* ``naive_factorial``: iterated modular product, the baseline;
* ``tepper_sum``: sum of (-1)^k C(p-1,k) k^(p-1), reduced mod p.
  The binomials are computed exactly and only then reduced; reducing them
  first via C(p-1,k) = (-1)^k (mod p) would short-circuit the computation
  this route exists to exercise (the shortcut lives in the test suite as a
  cross-check assertion);
* ``fermat_reduced_sum``: each k^(p-1) replaced by 1 for 1 <= k <= p-1,
  which is only justified for prime p, so composites are rejected.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .exact import binomial

ROUTE_NAIVE = "naive_factorial"
ROUTE_TEPPER = "tepper_sum"
ROUTE_FERMAT = "fermat_reduced_sum"

# wilson_primality runs a Theta(n) multiplication loop; refuse rather than hang.
DEFAULT_WILSON_LIMIT = 10**6


@dataclass(frozen=True)
class ModularCheck:
    """One residue computation against its expected value."""

    modulus: int
    computed_residue: int
    expected_residue: int
    passed: bool
    route: str

    def __post_init__(self) -> None:
        if self.modulus < 2:
            raise InputError("modulus must be >= 2")
        for residue in (self.computed_residue, self.expected_residue):
            if not 0 <= residue < self.modulus:
                raise InputError("residues must lie in [0, modulus)")
        if self.passed != (self.computed_residue == self.expected_residue):
            raise InputError("passed must reflect residue equality")


def mod_pow(base: int, exponent: int, modulus: int) -> int:
    """base**exponent mod modulus by square-and-multiply; 0**0 = 1."""
    if modulus < 1:
        raise InputError("modulus must be >= 1")
    if exponent < 0:
        raise InputError("exponent must be >= 0")
    result = 1 % modulus
    b = base % modulus
    e = exponent
    while e:
        if e & 1:
            result = result * b % modulus
        b = b * b % modulus
        e >>= 1
    return result


def factorial_mod_naive(n: int, modulus: int) -> int:
    """n! mod modulus by iterated modular product."""
    if modulus < 2:
        raise InputError("modulus must be >= 2")
    if n < 0:
        raise InputError("n must be >= 0")
    result = 1 % modulus
    for k in range(2, n + 1):
        result = result * k % modulus
    return result


def is_prime_trial(n: int) -> bool:
    """Primality by trial division; fine at desk scale."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factorial_mod_naive_check(p: int) -> ModularCheck:
    """(p-1)! mod p against the expected residue p - 1, baseline route."""
    if p < 2:
        raise InputError("p must be >= 2")
    computed = factorial_mod_naive(p - 1, p)
    return ModularCheck(
        modulus=p,
        computed_residue=computed,
        expected_residue=p - 1,
        passed=computed == p - 1,
        route=ROUTE_NAIVE,
    )


def factorial_mod_tepper(p: int) -> ModularCheck:
    """(p-1)! mod p via the alternating sum of C(p-1,k) k^(p-1).

    Passes for every prime p; for composite p the computed residue is
    reported without any pass expectation.
    """
    if p < 2:
        raise InputError("p must be >= 2")
    n = p - 1
    total = 0
    sign = 1
    for k in range(n + 1):
        total += sign * binomial(n, k) * k**n
        sign = -sign
    computed = total % p
    return ModularCheck(
        modulus=p,
        computed_residue=computed,
        expected_residue=p - 1,
        passed=computed == p - 1,
        route=ROUTE_TEPPER,
    )


def factorial_mod_fermat_route(p: int) -> ModularCheck:
    """(p-1)! mod p via the Fermat-reduced sum of (-1)^k C(p-1,k), k >= 1.

    Requires p prime (checked by trial division): the reduction k^(p-1) -> 1
    is exactly Fermat's little theorem.
    """
    if p < 2 or not is_prime_trial(p):
        raise InputError(f"p = {p} is not prime; the Fermat reduction does not apply")
    n = p - 1
    total = 0
    sign = -1
    for k in range(1, n + 1):
        total += sign * binomial(n, k)
        sign = -sign
    computed = total % p
    return ModularCheck(
        modulus=p,
        computed_residue=computed,
        expected_residue=p - 1,
        passed=computed == p - 1,
        route=ROUTE_FERMAT,
    )


def fermat_check(k: int, p: int) -> bool:
    """True iff k^(p-1) = 1 (mod p); holds for prime p and 1 <= k < p."""
    if p < 2:
        raise InputError("p must be >= 2")
    if not 1 <= k < p:
        raise InputError("k must satisfy 1 <= k < p")
    return mod_pow(k, p - 1, p) == 1


def wilson_primality(n: int, limit: int = DEFAULT_WILSON_LIMIT) -> bool:
    """True iff (n-1)! = -1 (mod n), i.e. iff n is prime."""
    if n < 2:
        raise InputError("wilson_primality requires n >= 2")
    if n > limit:
        raise InputError(f"n = {n} exceeds the input limit {limit}; refusing the Theta(n) loop")
    return factorial_mod_naive(n - 1, n) == n - 1
