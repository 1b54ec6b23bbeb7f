"""Command-line interface: every verifier, the occupancy counter, the
power-sum classifier, and the Wilson routes, with text or JSON output.

Exit codes: 0 when every emitted report passed, 1 when some check failed,
2 on input or usage errors, 3 when an enumeration budget was exhausted.

JSON mode writes one object per report to stdout (machine-readable stream);
diagnostics and the sweep summary go to stderr.  Identical configurations,
including the seed, produce byte-identical stdout.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import identities, numtheory, occupancy
from .errors import BudgetExceededError, InputError
from .identities import IDENTITY_NAMES, IdentityReport
from .numtheory import ModularCheck
from .parser import parse_polynomial, render_polynomial
from .poly import Polynomial

DEFAULT_SEED = 0
BUDGET_ENV_VAR = "TEPPERLAB_BUDGET"

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT_ERROR = 2
EXIT_BUDGET = 3

SCHEMA_VERSION = 1

TEXT = "text"
JSON = "json"


@dataclass(frozen=True)
class RunConfig:
    """One validated CLI invocation: the command, its options, output format."""

    command: str
    output_format: str
    options: argparse.Namespace


@dataclass(frozen=True)
class ReportRow:
    """Output-ready report: values already rendered to exact strings."""

    kind: str  # "identity_name" or "command"
    name: str
    parameters: str
    claimed: str | None
    computed: str | None
    passed: bool
    witness: str | None = None
    error: str | None = None
    text: str | None = None  # custom text line, else the standard layout

    def text_line(self) -> str:
        if self.error is not None:
            return f"INPUT-ERROR {self.error}"
        if self.text is not None:
            return self.text
        status = "PASS" if self.passed else "FAIL"
        return (
            f"{status} {self.name} {self.parameters} "
            f"computed={self.computed} claimed={self.claimed}"
        )

    def json_object(self) -> dict:
        obj = {
            "schema_version": SCHEMA_VERSION,
            self.kind: self.name,
            "parameters": self.parameters,
            "claimed": self.claimed,
            "computed": self.computed,
            "passed": self.passed,
        }
        if self.witness is not None:
            obj["witness"] = self.witness
        return obj


def _render_value(value) -> str | None:
    if value is None:
        return None
    if isinstance(value, Polynomial):
        return render_polynomial(value)
    if isinstance(value, (Fraction, int)):
        return str(value)
    return str(value)


def _row_from_identity(report: IdentityReport) -> ReportRow:
    kind = "identity_name" if report.identity_name in IDENTITY_NAMES else "command"
    return ReportRow(
        kind=kind,
        name=report.identity_name,
        parameters=report.parameters,
        claimed=_render_value(report.claimed),
        computed=_render_value(report.computed),
        passed=report.passed,
        witness=_render_value(report.witness),
        error=report.error,
    )


def _row_from_modular_check(check: ModularCheck, parameters: str) -> ReportRow:
    return ReportRow(
        kind="command",
        name="wilson",
        parameters=parameters,
        claimed=str(check.expected_residue),
        computed=str(check.computed_residue),
        passed=check.passed,
    )


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"{text!r} is not an exact rational (use 'num/den' or an integer)")


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV_VAR)
    if raw is None:
        return occupancy.DEFAULT_ENUMERATION_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"{BUDGET_ENV_VAR} must be an integer, not {raw!r}")


def _resolve_mode(options: argparse.Namespace) -> str:
    # Symbolic is the default; an explicit --x without --mode asks for a
    # pointwise check, so numeric wins there.
    if options.mode is not None:
        return options.mode
    return identities.NUMERIC if options.x is not None else identities.SYMBOLIC


def _x_value(options: argparse.Namespace) -> Fraction:
    return options.x if options.x is not None else Fraction(0)


def _cmd_tepper(options: argparse.Namespace) -> list[ReportRow]:
    report = identities.verify_tepper(options.n, _x_value(options), _resolve_mode(options))
    return [_row_from_identity(report)]


def _cmd_lemma(options: argparse.Namespace) -> list[ReportRow]:
    p = parse_polynomial(options.poly)
    report = identities.verify_lemma(p, options.n, _x_value(options), _resolve_mode(options))
    return [_row_from_identity(report)]


def _cmd_general(options: argparse.Namespace) -> list[ReportRow]:
    p = parse_polynomial(options.poly)
    report = identities.verify_generalized(p, _x_value(options), _resolve_mode(options))
    return [_row_from_identity(report)]


def _cmd_conjecture(options: argparse.Namespace) -> list[ReportRow]:
    p = parse_polynomial(options.poly)
    report = identities.verify_conjecture(p, options.l, _x_value(options), _resolve_mode(options))
    return [_row_from_identity(report)]


def _cmd_expansion(options: argparse.Namespace) -> list[ReportRow]:
    report = identities.verify_via_expansion(options.n, _x_value(options))
    return [_row_from_identity(report)]


def _cmd_sweep(options: argparse.Namespace) -> list[ReportRow]:
    reports = identities.sweep_conjecture(
        options.max_degree, options.max_step, options.trials, options.seed
    )
    return [_row_from_identity(r) for r in reports]


def _cmd_powersum(options: argparse.Namespace) -> list[ReportRow]:
    report = identities.classify_power_sum(options.n, options.p)
    return [_row_from_identity(report)]


def _cmd_occupancy(options: argparse.Namespace) -> list[ReportRow]:
    params = occupancy.OccupancyParams(options.wagons, options.passengers, options.occupied)
    budget = options.budget if options.budget is not None else _default_budget()
    result = occupancy.check_occupancy(params, with_oracle=options.oracle, budget=budget)
    parameters = f"wagons={params.wagons} passengers={params.passengers} occupied={params.occupied}"
    passed = result.agrees is not False
    oracle_text = str(result.oracle) if result.oracle is not None else "skipped"
    verdict = "agrees" if result.agrees else ("disagrees" if result.agrees is False else "unchecked")
    text = (
        f"{'PASS' if passed else 'FAIL'} occupancy {parameters} "
        f"closed_form={result.closed_form} oracle={oracle_text} {verdict}"
    )
    return [
        ReportRow(
            kind="command",
            name="occupancy",
            parameters=parameters,
            claimed=str(result.closed_form),
            computed=str(result.oracle) if result.oracle is not None else str(result.closed_form),
            passed=passed,
            text=text,
        )
    ]


def _cmd_wilson(options: argparse.Namespace) -> list[ReportRow]:
    if (options.p is None) == (options.upto is None):
        raise InputError("wilson requires exactly one of --p or --upto")
    if options.upto is not None:
        rows = []
        for n in range(2, options.upto + 1):
            residue = numtheory.factorial_mod_naive(n - 1, n)
            wilson_says_prime = residue == n - 1
            trial_says_prime = numtheory.is_prime_trial(n)
            rows.append(
                ReportRow(
                    kind="command",
                    name="wilson",
                    parameters=f"n={n} route={numtheory.ROUTE_NAIVE} residue={residue}",
                    claimed="prime" if trial_says_prime else "composite",
                    computed="prime" if wilson_says_prime else "composite",
                    passed=wilson_says_prime == trial_says_prime,
                )
            )
        return rows
    p = options.p
    if p > options.limit:
        raise InputError(f"p = {p} exceeds the input limit {options.limit}")
    route_functions = {
        "naive": numtheory.factorial_mod_naive_check,
        "tepper": numtheory.factorial_mod_tepper,
        "fermat": numtheory.factorial_mod_fermat_route,
    }
    check = route_functions[options.route](p)
    return [_row_from_modular_check(check, f"p={p} route={check.route}")]


_HANDLERS = {
    "tepper": _cmd_tepper,
    "lemma": _cmd_lemma,
    "general": _cmd_general,
    "conjecture": _cmd_conjecture,
    "sweep": _cmd_sweep,
    "expansion": _cmd_expansion,
    "occupancy": _cmd_occupancy,
    "powersum": _cmd_powersum,
    "wilson": _cmd_wilson,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tepperlab",
        description="Exact verification of alternating binomial identities and their consequences.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=(TEXT, JSON), default=TEXT, help="output format")

    mode_parent = argparse.ArgumentParser(add_help=False)
    mode_parent.add_argument(
        "--mode",
        choices=(identities.NUMERIC, identities.SYMBOLIC),
        default=None,
        help="symbolic (default) proves the instance for all x; numeric checks at --x",
    )
    mode_parent.add_argument("--x", type=_rational, default=None, help="evaluation point (implies numeric mode)")

    sub = parser.add_subparsers(dest="command", required=True)

    p_tepper = sub.add_parser("tepper", parents=[common, mode_parent], help="verify the n! identity")
    p_tepper.add_argument("--n", type=_nonnegative, required=True)

    p_lemma = sub.add_parser("lemma", parents=[common, mode_parent], help="verify the vanishing lemma (deg P < n)")
    p_lemma.add_argument("--poly", required=True, help="polynomial expression, e.g. 'x^2 - 1/2*x + 3'")
    p_lemma.add_argument("--n", type=_nonnegative, required=True)

    p_general = sub.add_parser(
        "general", parents=[common, mode_parent], help="verify the a_n * n! identity for any polynomial"
    )
    p_general.add_argument("--poly", required=True)

    p_conj = sub.add_parser(
        "conjecture", parents=[common, mode_parent], help="verify the step-l identity a_n * l^n * n!"
    )
    p_conj.add_argument("--poly", required=True)
    p_conj.add_argument("--l", type=_positive, required=True, help="shift step, l >= 1")

    p_sweep = sub.add_parser("sweep", parents=[common], help="seeded campaign over degrees and steps")
    p_sweep.add_argument("--max-degree", type=_nonnegative, required=True)
    p_sweep.add_argument("--max-step", type=_positive, required=True)
    p_sweep.add_argument("--trials", type=_positive, required=True)
    p_sweep.add_argument("--seed", type=int, default=DEFAULT_SEED)

    p_exp = sub.add_parser(
        "expansion", parents=[common], help="verify via binomial expansion and summation exchange"
    )
    p_exp.add_argument("--n", type=_nonnegative, required=True)
    p_exp.add_argument("--x", type=_rational, default=Fraction(0))

    p_occ = sub.add_parser("occupancy", parents=[common], help="count assignments occupying exactly r wagons")
    p_occ.add_argument("--wagons", type=_nonnegative, required=True)
    p_occ.add_argument("--passengers", type=_nonnegative, required=True)
    p_occ.add_argument("--occupied", type=_nonnegative, required=True)
    p_occ.add_argument("--oracle", action="store_true", help="cross-check by exhaustive enumeration")
    p_occ.add_argument(
        "--budget",
        type=_positive,
        default=None,
        help=f"enumeration budget (default {occupancy.DEFAULT_ENUMERATION_BUDGET}, or ${BUDGET_ENV_VAR})",
    )

    p_pow = sub.add_parser("powersum", parents=[common], help="signed binomial power sum with classification")
    p_pow.add_argument("--n", type=_nonnegative, required=True)
    p_pow.add_argument("--p", type=_positive, required=True)

    p_wilson = sub.add_parser("wilson", parents=[common], help="factorial congruence checks and primality")
    p_wilson.add_argument("--p", type=_positive, default=None, help="single modulus to check")
    p_wilson.add_argument("--upto", type=_positive, default=None, help="compare against trial division for 2..N")
    p_wilson.add_argument("--route", choices=("naive", "tepper", "fermat"), default="naive")
    p_wilson.add_argument("--limit", type=_positive, default=numtheory.DEFAULT_WILSON_LIMIT)

    return parser


def _emit(rows: Sequence[ReportRow], output_format: str, summary: str | None) -> int:
    input_errors = [row for row in rows if row.error is not None]
    failures = [row for row in rows if row.error is None and not row.passed]
    for row in rows:
        if row.error is not None:
            print(row.text_line(), file=sys.stderr)
        elif output_format == JSON:
            print(json.dumps(row.json_object(), separators=(",", ":")))
        else:
            print(row.text_line())
    if summary is not None:
        print(summary, file=sys.stderr if output_format == JSON else sys.stdout)
    if input_errors:
        return EXIT_INPUT_ERROR
    if failures:
        return EXIT_FAIL
    return EXIT_OK


def run(config: RunConfig) -> int:
    """Execute one validated configuration and emit its reports."""
    rows = _HANDLERS[config.command](config.options)
    summary = None
    if config.command == "sweep":
        passed = sum(1 for r in rows if r.error is None and r.passed)
        failed = sum(1 for r in rows if r.error is None and not r.passed)
        errors = sum(1 for r in rows if r.error is not None)
        summary = f"sweep: total={len(rows)} passed={passed} failed={failed} input-errors={errors}"
    return _emit(rows, config.output_format, summary)


def main(argv: Sequence[str] | None = None) -> int:
    options = build_parser().parse_args(argv)
    config = RunConfig(command=options.command, output_format=options.format, options=options)
    try:
        return run(config)
    except BudgetExceededError as exc:
        print(f"BUDGET-EXCEEDED {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except InputError as exc:
        print(f"INPUT-ERROR {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
