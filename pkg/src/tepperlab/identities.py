"""Named verifiers for the alternating-binomial-sum identities.

Each verifier returns an IdentityReport with the claimed value, the value
actually computed, and (in symbolic mode) the full sum polynomial as a
witness.  Verification is exact: ``passed`` is structural equality of
claimed and computed, never a tolerance.

Symbolic mode is the default everywhere.  A symbolic pass is a proof of the
identity for that parameter instance over all x; numeric mode evaluates the
sum pointwise instead and exists to exercise the evaluation path.

Precondition violations (wrong degree, zero polynomial, step < 1) come back
as reports with ``error`` set, distinct from a failed identity, so sweeps
cannot confuse misuse with a falsified theorem.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Union

from .diffcalc import DifferenceParams, alternating_sum_numeric, alternating_sum_symbolic
from .errors import InputError
from .exact import binomial, factorial
from .occupancy import alternating_power_sum
from .parser import render_polynomial
from .poly import Polynomial, Scalar, as_fraction

SYMBOLIC = "symbolic"
NUMERIC = "numeric"

TEPPER = "tepper"
LEMMA_VANISHING = "lemma_vanishing"
GENERALIZED_TEPPER = "generalized_tepper"
CONJECTURE_STEP_L = "conjecture_step_l"
POWER_SUM_ZERO = "power_sum_zero"
POWER_SUM_FACTORIAL = "power_sum_factorial"

IDENTITY_NAMES = (
    TEPPER,
    LEMMA_VANISHING,
    GENERALIZED_TEPPER,
    CONJECTURE_STEP_L,
    POWER_SUM_ZERO,
    POWER_SUM_FACTORIAL,
)

Value = Union[Fraction, Polynomial, str, None]


@dataclass(frozen=True)
class IdentityReport:
    identity_name: str
    parameters: str
    claimed: Value
    computed: Value
    passed: bool
    witness: Polynomial | None = None
    error: str | None = None

    @property
    def is_input_error(self) -> bool:
        return self.error is not None

    @property
    def status(self) -> str:
        if self.error is not None:
            return "input-error"
        return "pass" if self.passed else "fail"


def _check_mode(mode: str) -> None:
    if mode not in (NUMERIC, SYMBOLIC):
        raise InputError(f"mode must be '{NUMERIC}' or '{SYMBOLIC}', not {mode!r}")


def _input_error(name: str, parameters: str, message: str) -> IdentityReport:
    return IdentityReport(name, parameters, None, None, False, error=message)


def _constant_identity_report(
    name: str,
    parameters_numeric: str,
    parameters_symbolic: str,
    p: Polynomial,
    params: DifferenceParams,
    claimed_constant: Fraction,
    x: Fraction,
    mode: str,
) -> IdentityReport:
    """Shared body: the sum should equal a constant, symbolically or at x."""
    if mode == SYMBOLIC:
        s = alternating_sum_symbolic(p, params)
        claimed = Polynomial.constant(claimed_constant)
        return IdentityReport(name, parameters_symbolic, claimed, s, s == claimed, witness=s)
    value = alternating_sum_numeric(p, params, x)
    return IdentityReport(name, parameters_numeric, claimed_constant, value, value == claimed_constant)


def verify_tepper(n: int, x: Scalar = 0, mode: str = SYMBOLIC) -> IdentityReport:
    """The alternating sum of C(n,k) (x-k)^n equals n! for every x.

    n = 0 is allowed: the sum is the single term (x-0)^0 = 1 = 0!.
    """
    _check_mode(mode)
    if n < 0:
        return _input_error(TEPPER, f"n={n}", "n must be >= 0")
    xf = as_fraction(x)
    return _constant_identity_report(
        TEPPER,
        f"n={n} x={xf}",
        f"n={n} mode=symbolic x=ignored",
        Polynomial.monomial(n),
        DifferenceParams(order=n, step=1),
        Fraction(factorial(n)),
        xf,
        mode,
    )


def verify_lemma(p: Polynomial, n: int, x: Scalar = 0, mode: str = SYMBOLIC) -> IdentityReport:
    """The order-n alternating sum annihilates any polynomial of degree < n."""
    _check_mode(mode)
    xf = as_fraction(x)
    poly_text = render_polynomial(p)
    if n < 0:
        return _input_error(LEMMA_VANISHING, f'poly="{poly_text}" n={n}', "n must be >= 0")
    if not p.degree < n:
        return _input_error(
            LEMMA_VANISHING,
            f'poly="{poly_text}" n={n}',
            f"degree not less than n (deg P = {p.degree}, n = {n})",
        )
    return _constant_identity_report(
        LEMMA_VANISHING,
        f'poly="{poly_text}" n={n} x={xf}',
        f'poly="{poly_text}" n={n} mode=symbolic x=ignored',
        p,
        DifferenceParams(order=n, step=1),
        Fraction(0),
        xf,
        mode,
    )


def verify_generalized(p: Polynomial, x: Scalar = 0, mode: str = SYMBOLIC) -> IdentityReport:
    """For deg P = n, the order-n alternating sum is the constant a_n * n!."""
    _check_mode(mode)
    xf = as_fraction(x)
    poly_text = render_polynomial(p)
    if p.is_zero():
        return _input_error(
            GENERALIZED_TEPPER,
            f'poly="{poly_text}"',
            "zero polynomial has no degree or leading coefficient",
        )
    n = int(p.degree)
    claimed = p.leading_coefficient * factorial(n)
    return _constant_identity_report(
        GENERALIZED_TEPPER,
        f'poly="{poly_text}" n={n} x={xf}',
        f'poly="{poly_text}" n={n} mode=symbolic x=ignored',
        p,
        DifferenceParams(order=n, step=1),
        claimed,
        xf,
        mode,
    )


def verify_conjecture(p: Polynomial, l: int, x: Scalar = 0, mode: str = SYMBOLIC) -> IdentityReport:
    """With shifts x - l*k the order-n sum is the constant a_n * l^n * n!."""
    _check_mode(mode)
    xf = as_fraction(x)
    poly_text = render_polynomial(p)
    if l < 1:
        return _input_error(CONJECTURE_STEP_L, f'poly="{poly_text}" l={l}', "step l must be >= 1")
    if p.is_zero():
        return _input_error(
            CONJECTURE_STEP_L,
            f'poly="{poly_text}" l={l}',
            "zero polynomial has no degree or leading coefficient",
        )
    n = int(p.degree)
    claimed = p.leading_coefficient * l**n * factorial(n)
    return _constant_identity_report(
        CONJECTURE_STEP_L,
        f'poly="{poly_text}" l={l} n={n} x={xf}',
        f'poly="{poly_text}" l={l} n={n} mode=symbolic x=ignored',
        p,
        DifferenceParams(order=n, step=l),
        claimed,
        xf,
        mode,
    )


def verify_via_expansion(n: int, x: Scalar = 0) -> IdentityReport:
    """Recompute the order-n sum for P = x^n by exchanging summation order.

    Expanding (x-k)^n binomially and swapping sums leaves, against each
    power x^j, the inner coefficient sum of (-1)^k C(n,k) (-k)^(n-j).  The
    inner sums must vanish for 1 <= j <= n and equal n! at j = 0; the
    reconstructed polynomial (witness) is then the constant n!.
    """
    if n < 0:
        return _input_error(TEPPER, f"n={n} route=expansion", "n must be >= 0")
    xf = as_fraction(x)
    inner = []
    for j in range(n + 1):
        total = 0
        sign = 1
        for k in range(n + 1):
            total += sign * binomial(n, k) * (-k) ** (n - j)
            sign = -sign
        inner.append(total)
    witness = Polynomial(tuple(Fraction(binomial(n, j) * inner[j]) for j in range(n + 1)))
    total_at_x = witness.evaluate(xf)
    claimed = Fraction(factorial(n))
    inner_ok = inner[0] == factorial(n) and all(v == 0 for v in inner[1:])
    passed = inner_ok and total_at_x == claimed
    parameters = f"n={n} x={xf} route=expansion inner={inner}"
    return IdentityReport(TEPPER, parameters, claimed, total_at_x, passed, witness=witness)


def classify_power_sum(n: int, p: int) -> IdentityReport:
    """The signed power sum C(n,1) 1^p - ... + (-1)^(n-1) C(n,n) n^p, classified.

    p < n: claimed zero.  p = n: claimed (-1)^(p-1) p!.  p > n: no claim is
    made; the raw value is reported and the report passes vacuously.
    """
    parameters = f"n={n} p={p}"
    try:
        value = alternating_power_sum(n, p)
    except InputError as exc:
        return _input_error("powersum", parameters, str(exc))
    computed = Fraction(value)
    if p < n:
        claimed = Fraction(0)
        return IdentityReport(POWER_SUM_ZERO, parameters, claimed, computed, computed == claimed)
    if p == n:
        claimed = Fraction((-1) ** (p - 1) * factorial(p))
        return IdentityReport(POWER_SUM_FACTORIAL, parameters, claimed, computed, computed == claimed)
    return IdentityReport("powersum", parameters + " classification=none (p > n)", None, computed, True)


def random_polynomial(rng: random.Random, degree: int) -> Polynomial:
    """Random polynomial of exactly the given degree.

    Numerators in [-99, 99], denominators in [1, 9]; the leading coefficient
    is redrawn until nonzero.  Small coefficients keep reports readable, and
    the identities are linear in the coefficients, so magnitude adds nothing.
    """
    coeffs = []
    for i in range(degree + 1):
        numerator = rng.randint(-99, 99)
        while i == degree and numerator == 0:
            numerator = rng.randint(-99, 99)
        coeffs.append(Fraction(numerator, rng.randint(1, 9)))
    return Polynomial(tuple(coeffs))


def sweep_conjecture(max_degree: int, max_step: int, trials: int, seed: int) -> list[IdentityReport]:
    """Symbolic step-l verification over every (degree, step) pair.

    Degrees run 1..max_degree (degree 0 only when max_degree = 0), steps run
    1..max_step, with ``trials`` random polynomials per pair.  Reports come
    back in (degree, step, trial) order, deterministically for a given seed.
    """
    if max_degree < 0 or max_step < 0 or trials < 0:
        raise InputError("sweep bounds must be >= 0")
    rng = random.Random(seed)
    degrees = range(0, 1) if max_degree == 0 else range(1, max_degree + 1)
    reports = []
    for degree in degrees:
        for step in range(1, max_step + 1):
            for trial in range(trials):
                p = random_polynomial(rng, degree)
                report = verify_conjecture(p, step, mode=SYMBOLIC)
                report = replace(
                    report,
                    parameters=f"degree={degree} step={step} trial={trial} " + report.parameters,
                )
                reports.append(report)
    return reports
