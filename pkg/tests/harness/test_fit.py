"""Test cases for exponent fits."""

import math

import pytest

from ultralis.harness.config import ExperimentConfig
from ultralis.harness.fit import fit_exponent, fit_power_law
from ultralis.harness.sweep import SweepRow, run_sweep
from ultralis.numerics.exponents import BETA0_DECIMAL, BETA1_DECIMAL


def _rows(values):
    return [
        SweepRow("ultrafat", None, n, 10, mean, mean, 1.0, mean / 2, 0) for n, mean in values
    ]


def test_exact_power_law():
    """Test n^0.7 gives slope 0.7."""
    ns = [2**e for e in range(4, 12)]
    fit = fit_power_law(ns, [n**0.7 for n in ns])
    assert abs(fit.slope - 0.7) < 1e-12
    assert abs(fit.intercept) < 1e-10
    assert fit.contains(fit.slope)


def test_prefactor_goes_to_intercept():
    """Test c n^0.5 gives slope 0.5 and intercept log c."""
    ns = [10, 20, 40, 80, 160]
    fit = fit_power_law(ns, [3.0 * math.sqrt(n) for n in ns])
    assert fit.slope == pytest.approx(0.5, abs=1e-12)
    assert fit.intercept == pytest.approx(math.log(3.0), abs=1e-12)


def test_fit_needs_four_points():
    """Test fewer than four points raise ValueError."""
    with pytest.raises(ValueError):
        fit_power_law([1, 2, 3], [1, 2, 3])
    with pytest.raises(ValueError):
        fit_power_law([1, 2, 3, 4], [1, 2, 0, 4])


def test_fit_exponent_statistics_and_cutoff():
    """Test statistic selection and the n cutoff."""
    rows = _rows([(n, n**0.6) for n in (2, 4, 8, 16, 32, 64)])
    assert fit_exponent(rows, "median").slope == pytest.approx(0.6)
    assert fit_exponent(rows, "greedy").slope == pytest.approx(0.6)
    assert len(fit_exponent(rows, n_min=8).grid) == 4
    with pytest.raises(ValueError):
        fit_exponent(rows, n_min=16)
    with pytest.raises(ValueError):
        fit_exponent(rows, "mode")


def test_ci_contains_slope_on_noisy_data():
    """Test the interval brackets the slope."""
    ns = [2**e for e in range(3, 10)]
    fit = fit_power_law(ns, [n**0.7 * (1 + 0.05 * (-1) ** i) for i, n in enumerate(ns)])
    assert fit.ci95[0] < fit.slope < fit.ci95[1]
    assert fit.stderr > 0


def test_ultrafat_exponent_scaled_down():
    """Test a small sweep fits an exponent between 0.55 and 0.9."""
    rows = run_sweep(ExperimentConfig(n_grid=tuple(2**e for e in range(6, 11)), reps=60, seed=1))
    assert 0.55 < fit_exponent(rows).slope < 0.9


@pytest.mark.slow
def test_ultrafat_exponent_full_scale():
    """Test the dyadic sweep 2^10..2^20 fits an exponent in [0.69, 0.76]."""
    cfg = ExperimentConfig(n_grid=tuple(2**e for e in range(10, 21)), reps=200, seed=0, workers=4)
    slope = fit_exponent(run_sweep(cfg)).slope
    assert 0.69 <= slope <= 0.76
    assert BETA0_DECIMAL - 0.01 <= slope <= BETA1_DECIMAL
    assert slope > 0.6


@pytest.mark.slow
def test_gaussian_exponent_full_scale():
    """Test the Gaussian baseline fits an exponent near 1/2."""
    cfg = ExperimentConfig(model="gaussian", n_grid=tuple(2**e for e in range(10, 19)), reps=200, workers=4)
    assert abs(fit_exponent(run_sweep(cfg)).slope - 0.5) <= 0.05


@pytest.mark.slow
def test_stable_exponents_nonincreasing_in_alpha():
    """Test fitted exponents do not increase with alpha, within 95% intervals."""
    fits = []
    for alpha in (0.25, 0.75, 1.25, 2.0):
        cfg = ExperimentConfig(
            model="stable", alpha=alpha, n_grid=tuple(2**e for e in range(10, 19)), reps=200, workers=4
        )
        fits.append(fit_exponent(run_sweep(cfg)))
    for heavier, lighter in zip(fits, fits[1:]):
        assert lighter.ci95[0] <= heavier.ci95[1]
