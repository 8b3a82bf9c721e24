"""Test cases for the exponent bounds."""

import numpy as np
import pytest

from ultralis.numerics.exponents import (
    BETA0_DECIMAL,
    BETA0_DECIMAL_TOL,
    BETA1_DECIMAL,
    beta0_equation,
    c_beta,
    c_beta_quadrature,
    iterate_lower_recursion,
    reverse_riemann_sum,
    solve_beta0,
    solve_beta1,
    upper_functional,
)


def test_c_beta_values():
    """Test c_0 = 3/2 and c_1 = 7/8."""
    assert c_beta(0.0) == pytest.approx(1.5, abs=1e-15)
    assert c_beta(1.0) == pytest.approx(7 / 8, abs=1e-15)
    with pytest.raises(ValueError):
        c_beta(-1.0)


@pytest.mark.parametrize("beta", [0.0, 0.25, 0.69, 1.0])
def test_c_beta_quadrature_matches_closed_form(beta):
    """Test the defining integrals against the closed form."""
    assert c_beta_quadrature(beta) == pytest.approx(c_beta(beta), abs=1e-10)


def test_beta0():
    """Test beta0 solves its equation by both methods and both forms."""
    root = solve_beta0().root
    assert abs(beta0_equation(root)) < 1e-9
    assert abs(c_beta(root) - 1.0) < 1e-9
    assert abs(solve_beta0(method="newton").root - root) < 1e-9
    assert abs(solve_beta0(formulation="c_beta").root - root) < 1e-9


def test_beta0_published_decimal():
    """Test the root sits within the documented tolerance of 0.690069 and rounds to 0.69009."""
    root = solve_beta0().root
    assert abs(root - BETA0_DECIMAL) < BETA0_DECIMAL_TOL
    assert round(root, 5) == 0.69009
    # the printed decimal itself misses the equation
    assert abs(beta0_equation(BETA0_DECIMAL)) > 1e-5


def test_beta0_rejects_unknown_formulation():
    """Test an unknown formulation raises ValueError."""
    with pytest.raises(ValueError):
        solve_beta0(formulation="series")


def test_upper_functional_values():
    """Test the functional is 7/4 at 0 and 11/12 at 1."""
    assert upper_functional(0.0) == pytest.approx(7 / 4, abs=1e-10)
    assert upper_functional(1.0) == pytest.approx(11 / 12, abs=1e-10)
    with pytest.raises(ValueError):
        upper_functional(1.5)


def test_beta1():
    """Test beta1 agrees with 0.814834 to 1e-5."""
    result = solve_beta1()
    assert abs(result.root - BETA1_DECIMAL) < 1e-5
    assert abs(solve_beta1(method="newton").root - BETA1_DECIMAL) < 1e-5


def test_beta_ordering():
    """Test beta0 < beta1."""
    assert solve_beta0().root < solve_beta1().root


def test_beta1_rejects_bad_quadrature_tolerance():
    """Test a non-positive quadrature tolerance raises ValueError."""
    with pytest.raises(ValueError):
        solve_beta1(quad_tol=0.0)


def test_reverse_riemann_sum_tends_to_c_beta():
    """Test the Riemann-sum side converges to c_beta."""
    for beta in (0.5, BETA0_DECIMAL, 1.0):
        assert reverse_riemann_sum(beta, 100_000) == pytest.approx(c_beta(beta), abs=1e-4)
    with pytest.raises(ValueError):
        reverse_riemann_sum(0.5, 1)


def test_lower_recursion_small_values():
    """Test l_1 = 1 and l_2 = 3/2."""
    values = iterate_lower_recursion(3)
    assert values[0] == 1.0
    assert values[1] == 1.5
    # l_3 = (1 + 1.5)/2 + 1.5/2
    assert values[2] == pytest.approx(2.0)


def test_lower_recursion_growth():
    """Test the iterated recursion is nondecreasing and grows like n^beta0."""
    values = iterate_lower_recursion(2**14)
    assert np.all(np.diff(values) >= 0)
    ns = np.array([2**10, 2**14])
    slope = np.diff(np.log(values[ns - 1])) / np.diff(np.log(ns))
    assert abs(float(slope[0]) - solve_beta0().root) < 0.05
    with pytest.raises(ValueError):
        iterate_lower_recursion(1)


@pytest.mark.slow
def test_lower_recursion_slope_top_decade():
    """Test the fitted slope over n = 2^14..2^20 lies within 0.02 of beta0."""
    values = iterate_lower_recursion(2**20)
    ns = np.array([2**e for e in range(14, 21)])
    slope, _ = np.polyfit(np.log(ns), np.log(values[ns - 1]), 1)
    assert abs(float(slope) - solve_beta0().root) < 0.02


def test_upper_functional_strictly_decreasing():
    """Test the functional decreases strictly on beta = 0.1, 0.2, ..., 1.0."""
    values = [upper_functional(k / 10) for k in range(1, 11)]
    assert all(b < a for a, b in zip(values, values[1:]))


def test_beta1_stable_under_halved_tolerances():
    """Test halving both tolerances moves beta1 by less than 1e-6."""
    coarse = solve_beta1(tol=1e-8, quad_tol=1e-10).root
    fine = solve_beta1(tol=5e-9, quad_tol=5e-11).root
    assert abs(coarse - fine) < 1e-6
    assert upper_functional(fine) == pytest.approx(1.0, abs=1e-8)
