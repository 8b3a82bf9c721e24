"""Test cases for RootFinder class."""

import math

import pytest

from ultralis.numerics.roots import ConvergenceError, RootFinder


def test_bisect_sqrt_two():
    """Test bisection finds sqrt(2)."""
    result = RootFinder(lambda x: x * x - 2).solve((0.0, 2.0), tol=1e-12)
    assert abs(result.root - math.sqrt(2)) < 1e-11
    assert result.method == "bisect"
    assert result.residual < 1e-12


def test_newton_with_derivative():
    """Test Newton with an analytic derivative."""
    finder = RootFinder(lambda x: x * x - 2, fprime=lambda x: 2 * x)
    result = finder.solve((0.0, 2.0), tol=1e-12, method="newton")
    assert abs(result.root - math.sqrt(2)) < 1e-11
    assert result.method in ("newton", "brent")


def test_newton_falls_back_inside_bracket():
    """Test the result stays in the bracket when Newton would leave it."""
    finder = RootFinder(math.atan, fprime=lambda x: 1 / (1 + x * x))
    result = finder.solve((-1.0, 20.0), tol=1e-10, method="newton")
    assert abs(result.root) < 1e-9
    assert -1.0 <= result.root <= 20.0


def test_no_sign_change():
    """Test a bracket without a sign change raises ValueError."""
    with pytest.raises(ValueError):
        RootFinder(lambda x: x * x + 1).solve((0.0, 1.0), tol=1e-8)


def test_unknown_method():
    """Test an unknown method name raises ValueError."""
    with pytest.raises(ValueError):
        RootFinder(lambda x: x).solve((-1.0, 1.0), tol=1e-8, method="secant")


def test_residual_guard():
    """Test a jump discontinuity fails the residual check."""
    with pytest.raises(ConvergenceError):
        RootFinder(lambda x: 1.0 if x > 0.3 else -1.0).solve((0.0, 1.0), tol=1e-8)
