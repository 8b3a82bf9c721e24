"""Test cases for the property suites."""

import json

import pytest

from ultralis.harness.checks import SUITE_NAMES, check_suite


def test_suite_names():
    """Test every documented suite is registered."""
    assert set(SUITE_NAMES) == {"constants", "recursion", "subadd", "domination", "nbu", "exact", "greedy", "tail"}


def test_unknown_suite():
    """Test an unknown suite raises ValueError."""
    with pytest.raises(ValueError):
        check_suite("everything")


def test_constants_suite():
    """Test beta0 solves its equation and both bounds match their decimals."""
    report = check_suite("constants")
    assert report.passed
    names = {check.name for check in report.checks}
    assert {"beta0_bisect_residual", "beta0_c_beta_one", "beta0_published_decimal", "beta1"} <= names
    payload = json.loads(json.dumps(report.to_dict()))
    assert payload["suite"] == "constants" and payload["passed"] is True


def test_recursion_suite_scaled_down():
    """Test the split identity on a small batch."""
    report = check_suite("recursion", {"n": 50, "reps": 100})
    assert report.passed
    assert report.params["n"] == 50


def test_subadd_suite_scaled_down():
    """Test sub- and superadditivity on a small batch."""
    assert check_suite("subadd", {"n": 40, "reps": 100}).passed


def test_domination_suite():
    """Test the exact NBU family on L(1)..L(6)."""
    assert check_suite("domination", {"max_n": 6}).passed


def test_exact_suite_scaled_down():
    """Test enumeration, recursion, DP and Monte Carlo agree for n <= 4."""
    assert check_suite("exact", {"max_n": 4, "reps": 2000}).passed


def test_greedy_suite_scaled_down():
    """Test the greedy slope with a loose band on a shorter grid."""
    report = check_suite("greedy", {"low": 8, "high": 12, "band": 0.06})
    assert report.passed


def test_tail_suite_scaled_down():
    """Test tail dominance decreases in alpha."""
    assert check_suite("tail", {"reps": 2000}).passed


def test_unknown_params_ignored():
    """Test keys a suite does not use are ignored."""
    report = check_suite("constants", {"n": 5})
    assert "n" not in report.params


@pytest.mark.slow
@pytest.mark.parametrize("suite", ["recursion", "subadd", "nbu", "greedy", "tail"])
def test_suites_full_scale(suite):
    """Test each Monte Carlo suite at its default scale."""
    assert check_suite(suite).passed


@pytest.mark.slow
def test_exact_suite_full_scale():
    """Test the exact suite up to n = 8."""
    assert check_suite("exact", {"max_n": 8, "workers": 4}).passed
