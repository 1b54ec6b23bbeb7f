"""CLI surface: text/JSON formats, exit codes, determinism, env overrides."""
import json

import pytest

from tepperlab import cli


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_tepper_numeric_text_line(capsys):
    code, out, err = run_cli(capsys, "tepper", "--n", "3", "--x", "5")
    assert code == 0
    assert out == "PASS tepper n=3 x=5 computed=6 claimed=6\n"


def test_tepper_symbolic_reports_x_ignored(capsys):
    code, out, _ = run_cli(capsys, "tepper", "--n", "3", "--mode", "symbolic", "--x", "9")
    assert code == 0
    assert "x=ignored" in out and "computed=6" in out


def test_lemma_precondition_violation_exits_2(capsys):
    code, out, err = run_cli(capsys, "lemma", "--poly", "x^3", "--n", "3")
    assert code == 2
    assert out == ""
    assert err.startswith("INPUT-ERROR degree not less than n")


def test_lemma_pass(capsys):
    code, out, _ = run_cli(capsys, "lemma", "--poly", "x^2 + 3*x + 1", "--n", "3")
    assert code == 0
    assert out.startswith("PASS lemma_vanishing")


def test_parse_error_exits_2(capsys):
    code, _, err = run_cli(capsys, "general", "--poly", "x^")
    assert code == 2
    assert err.startswith("INPUT-ERROR")


def test_occupancy_oracle_line(capsys):
    code, out, _ = run_cli(
        capsys, "occupancy", "--wagons", "3", "--passengers", "2", "--occupied", "2", "--oracle"
    )
    assert code == 0
    assert "closed_form=6 oracle=6 agrees" in out


def test_occupancy_without_oracle(capsys):
    code, out, _ = run_cli(capsys, "occupancy", "--wagons", "4", "--passengers", "4", "--occupied", "4")
    assert code == 0
    assert "closed_form=24 oracle=skipped unchecked" in out


def test_occupancy_invalid_params_exit_2(capsys):
    code, _, err = run_cli(capsys, "occupancy", "--wagons", "3", "--passengers", "2", "--occupied", "5")
    assert code == 2
    assert err.startswith("INPUT-ERROR")


def test_occupancy_budget_exhaustion_exits_3(capsys):
    code, _, err = run_cli(
        capsys,
        "occupancy", "--wagons", "10", "--passengers", "9", "--occupied", "5",
        "--oracle", "--budget", "1000",
    )
    assert code == 3
    assert err.startswith("BUDGET-EXCEEDED")


def test_budget_env_override(capsys, monkeypatch):
    monkeypatch.setenv(cli.BUDGET_ENV_VAR, "100")
    code, _, err = run_cli(
        capsys, "occupancy", "--wagons", "4", "--passengers", "5", "--occupied", "3", "--oracle"
    )
    assert code == 3
    # explicit --budget takes precedence over the environment
    code, out, _ = run_cli(
        capsys,
        "occupancy", "--wagons", "4", "--passengers", "5", "--occupied", "3",
        "--oracle", "--budget", "2000",
    )
    assert code == 0
    assert "agrees" in out


def test_budget_env_must_be_integer(capsys, monkeypatch):
    monkeypatch.setenv(cli.BUDGET_ENV_VAR, "lots")
    code, _, err = run_cli(
        capsys, "occupancy", "--wagons", "3", "--passengers", "2", "--occupied", "2", "--oracle"
    )
    assert code == 2


def test_json_schema_fields(capsys):
    code, out, _ = run_cli(capsys, "conjecture", "--poly", "x^2", "--l", "3", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert set(obj) == {"schema_version", "identity_name", "parameters", "claimed", "computed", "passed", "witness"}
    assert obj["schema_version"] == 1
    assert obj["identity_name"] == "conjecture_step_l"
    assert obj["claimed"] == obj["computed"] == obj["witness"] == "18"
    assert obj["passed"] is True


def test_json_numeric_mode_omits_witness(capsys):
    code, out, _ = run_cli(capsys, "tepper", "--n", "4", "--x", "1/2", "--format", "json")
    obj = json.loads(out)
    assert "witness" not in obj
    assert obj["claimed"] == obj["computed"] == "24"


def test_json_rationals_are_strings(capsys):
    code, out, _ = run_cli(capsys, "general", "--poly", "1/2*x^2", "--format", "json")
    obj = json.loads(out)
    assert obj["claimed"] == "1"  # (1/2) * 2!
    assert isinstance(obj["claimed"], str)


def test_command_reports_use_command_key(capsys):
    code, out, _ = run_cli(
        capsys, "occupancy", "--wagons", "3", "--passengers", "2", "--occupied", "2",
        "--oracle", "--format", "json",
    )
    obj = json.loads(out)
    assert obj["command"] == "occupancy"
    assert "identity_name" not in obj
    code, out, _ = run_cli(capsys, "wilson", "--p", "7", "--route", "tepper", "--format", "json")
    obj = json.loads(out)
    assert obj["command"] == "wilson"
    assert obj["computed"] == obj["claimed"] == "6"


def test_text_and_json_agree_on_pass_fail(capsys):
    configs = [
        ("tepper", "--n", "5"),
        ("general", "--poly", "5*x^2 - x + 9"),
        ("powersum", "--n", "4", "--p", "4"),
        ("wilson", "--p", "9", "--route", "naive"),
        ("sweep", "--max-degree", "2", "--max-step", "2", "--trials", "2", "--seed", "3"),
    ]
    for argv in configs:
        text_code, text_out, _ = run_cli(capsys, *argv)
        json_code, json_out, _ = run_cli(capsys, *argv, "--format", "json")
        assert text_code == json_code
        text_passes = [line.startswith("PASS") for line in text_out.splitlines() if line and not line.startswith("sweep:")]
        json_passes = [json.loads(line)["passed"] for line in json_out.splitlines()]
        assert text_passes == [bool(v) for v in json_passes]


def test_sweep_summary_line_and_seed_default(capsys):
    code, out, _ = run_cli(capsys, "sweep", "--max-degree", "2", "--max-step", "2", "--trials", "1")
    assert code == 0
    assert out.splitlines()[-1] == "sweep: total=4 passed=4 failed=0 input-errors=0"
    explicit_code, explicit_out, _ = run_cli(
        capsys, "sweep", "--max-degree", "2", "--max-step", "2", "--trials", "1", "--seed", str(cli.DEFAULT_SEED)
    )
    assert explicit_out == out


def test_sweep_json_is_deterministic_and_summary_on_stderr(capsys):
    argv = ("sweep", "--max-degree", "3", "--max-step", "2", "--trials", "2", "--seed", "11", "--format", "json")
    code_a, out_a, err_a = run_cli(capsys, *argv)
    code_b, out_b, err_b = run_cli(capsys, *argv)
    assert code_a == code_b == 0
    assert out_a == out_b
    assert "sweep: total=12" in err_a
    for line in out_a.splitlines():
        json.loads(line)


def test_wilson_composite_naive_route_fails(capsys):
    code, out, _ = run_cli(capsys, "wilson", "--p", "9", "--route", "naive")
    assert code == 1
    assert out.startswith("FAIL wilson p=9")


def test_wilson_fermat_rejects_composite(capsys):
    code, _, err = run_cli(capsys, "wilson", "--p", "9", "--route", "fermat")
    assert code == 2
    assert "not prime" in err


def test_wilson_upto_sweep(capsys):
    code, out, _ = run_cli(capsys, "wilson", "--upto", "50")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 49
    assert all(line.startswith("PASS") for line in lines)


def test_wilson_requires_exactly_one_selector(capsys):
    code, _, err = run_cli(capsys, "wilson")
    assert code == 2
    code, _, err = run_cli(capsys, "wilson", "--p", "5", "--upto", "10")
    assert code == 2


def test_wilson_limit_refusal(capsys):
    code, _, err = run_cli(capsys, "wilson", "--p", "2000003")
    assert code == 2
    assert "limit" in err


def test_powersum_above_diagonal_is_unclassified(capsys):
    code, out, _ = run_cli(capsys, "powersum", "--n", "2", "--p", "5", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["command"] == "powersum"
    assert obj["claimed"] is None
    assert obj["passed"] is True


def test_expansion_command(capsys):
    code, out, _ = run_cli(capsys, "expansion", "--n", "2", "--x", "10")
    assert code == 0
    assert "inner=[2, 0, 0]" in out


def test_usage_error_exits_2():
    with pytest.raises(SystemExit) as excinfo:
        cli.main(["tepper"])  # --n missing
    assert excinfo.value.code == 2


def test_rational_argument_validation():
    with pytest.raises(SystemExit) as excinfo:
        cli.main(["tepper", "--n", "3", "--x", "1/0"])
    assert excinfo.value.code == 2
