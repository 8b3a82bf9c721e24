"""Test cases for the command line."""

import json
import logging

import pytest

from ultralis.harness import cli
from ultralis.harness.cli import build_parser, main
from ultralis.numerics.roots import ConvergenceError


@pytest.fixture(autouse=True)
def reset_logging():
    """Drop the handler main installs, which holds the captured stderr."""
    yield
    logger = logging.getLogger("ultralis")
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
    logger.propagate = True
    logger.setLevel(logging.NOTSET)


def test_constants_command(capsys):
    """Test constants prints beta0 and beta1 as JSON."""
    assert main(["constants"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert abs(payload["beta0"]["root"] - 0.690069) < 3e-5
    assert payload["beta0"]["residual"] < 1e-9
    assert abs(payload["c_beta0"] - 1.0) < 1e-9
    assert abs(payload["beta1"]["root"] - 0.814834) < 1e-5


def test_simulate_and_fit(tmp_path, capsys):
    """Test simulate writes a table that fit can read."""
    table = tmp_path / "sweep.csv"
    status = main(["simulate", "--n-grid", "2^4..2^8", "--reps", "10", "--seed", "1", "--out", str(table)])
    assert status == 0
    assert table.read_text().startswith("model,alpha,n,replicas")
    assert main(["fit", str(table)]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert 0.3 < payload["slope"] < 1.0


def test_simulate_with_config_file(tmp_path, capsys):
    """Test flags override the config file."""
    config = tmp_path / "run.cfg"
    config.write_text("model = gaussian\nn_grid = 4,8\nreps = 3\n")
    assert main(["simulate", "--config", str(config), "--reps", "2"]) == 0
    rows = json.loads(capsys.readouterr().out)
    assert [row["n"] for row in rows] == [4, 8]
    assert all(row["model"] == "gaussian" and row["replicas"] == 2 for row in rows)


def test_simulate_bad_input_exit_code(capsys):
    """Test invalid input exits with status 2."""
    assert main(["simulate", "--model", "stable", "--n-grid", "8,16", "--reps", "2"]) == 2
    assert main(["simulate", "--n-grid", "16,8"]) == 2


def test_convergence_failure_exit_code(monkeypatch):
    """Test a solver that misses its tolerance exits with status 2."""

    def stalled(**kwargs):
        raise ConvergenceError(f"Bisection stopped after 200 steps ({kwargs})")

    monkeypatch.setattr(cli, "solve_beta0", stalled)
    assert main(["constants"]) == 2


def test_missing_table_exit_code(tmp_path):
    """Test a missing file exits with status 2."""
    assert main(["fit", str(tmp_path / "absent.csv")]) == 2


def test_exact_command(tmp_path, capsys):
    """Test exact laws by enumeration and by recursion."""
    assert main(["exact", "--max-n", "3"]) == 0
    laws = json.loads(capsys.readouterr().out)
    assert laws[0]["mean"] == "3/2"
    assert laws[1]["mean"] == "2"
    out = tmp_path / "exact.csv"
    assert main(["exact", "--max-n", "10", "--method", "recursive", "--statistic", "greedy", "--out", str(out)]) == 0
    assert out.read_text().splitlines()[0] == "n,value,probability"
    means = (tmp_path / "exact_mean.csv").read_text().splitlines()
    assert means[0] == "n,mean"
    assert means[1] == "2,3/2"
    assert len(means) == 10


def test_greedy_dp_command(capsys):
    """Test greedy-dp prints z_n and a fit."""
    assert main(["greedy-dp", "--low", "6", "--high", "10"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["n"] == [64, 128, 256, 512, 1024]
    assert 0.6 < payload["fit"]["slope"] < 0.75
    assert main(["greedy-dp", "--low", "5", "--high", "3"]) == 2


def test_check_command(capsys):
    """Test check prints a passing report and exits 0."""
    assert main(["check", "--suite", "constants"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["passed"] is True
    assert all(check["passed"] for check in report["checks"])


def test_check_recursion_command(capsys):
    """Test check accepts --n and --reps."""
    assert main(["check", "--suite", "recursion", "--n", "30", "--reps", "50"]) == 0
    assert json.loads(capsys.readouterr().out)["params"]["reps"] == 50


def test_parser_requires_command():
    """Test a missing subcommand is a usage error."""
    with pytest.raises(SystemExit):
        build_parser().parse_args([])
