"""Test cases for real-valued stable and Gaussian walks."""

import math

import numpy as np
import pytest
from scipy import stats

from ultralis.ordered_space.ultra_element import Ordering
from ultralis.walk.stable_walk import (
    RealWalkSample,
    dominant_up_frequency,
    sample_gaussian,
    sample_stable,
    stable_increments,
    tail_dominance,
)


def test_partial_sums_and_compare():
    """Test cumulative sums and the real comparator."""
    walk = RealWalkSample([1.0, 2.0, -1.0])
    assert walk.partial_sums.tolist() == [1.0, 3.0, 2.0]
    assert walk.compare_partial_sums(1, 3) is Ordering.LESS
    assert walk.compare_partial_sums(2, 3) is Ordering.GREATER
    assert walk.sigma() == (2, True)


def test_ties_compare_equal():
    """Test equal partial sums compare EQUAL."""
    walk = RealWalkSample([1.0, 1.0, -1.0])
    assert walk.compare_partial_sums(1, 3) is Ordering.EQUAL


def test_dominant_step():
    """Test the largest step over 2..n against the sum of the others."""
    assert RealWalkSample([5.0, 10.0, 1.0, -2.0]).dominant_step()
    assert not RealWalkSample([5.0, 3.0, 1.0, -2.5]).dominant_step()


def test_invalid_increments():
    """Test non-finite increments and unknown models raise ValueError."""
    with pytest.raises(ValueError):
        RealWalkSample([1.0, math.inf])
    with pytest.raises(ValueError):
        RealWalkSample([])
    with pytest.raises(ValueError):
        RealWalkSample([1.0], model="levy")


def test_alpha_range():
    """Test the stability index must lie in (0, 2]."""
    rng = np.random.default_rng(0)
    with pytest.raises(ValueError):
        stable_increments(rng, 0.0, 4)
    with pytest.raises(ValueError):
        stable_increments(rng, 2.5, 4)


def test_alpha_one_is_cauchy():
    """Test alpha = 1 gives the standard Cauchy law."""
    sample = stable_increments(np.random.default_rng(1), 1.0, 20_000)
    assert stats.kstest(sample, "cauchy").pvalue > 0.001


def test_alpha_two_is_gaussian_variance_two():
    """Test alpha = 2 gives a centered Gaussian of variance 2."""
    sample = stable_increments(np.random.default_rng(2), 2.0, 20_000)
    assert stats.kstest(sample, "norm", args=(0.0, math.sqrt(2.0))).pvalue > 0.001


def test_samplers_are_deterministic():
    """Test the same key gives the same walk."""
    a = sample_stable(32, 0.75, seed=(4, 32, 1))
    b = sample_stable(32, 0.75, seed=(4, 32, 1))
    np.testing.assert_array_equal(a.increments, b.increments)
    assert a.alpha == 0.75 and a.model == "stable"
    g = sample_gaussian(32, seed=5)
    assert g.model == "gaussian" and g.n == 32


def test_tail_dominance_decreases_with_alpha():
    """Test the largest step dominates more often for heavier tails."""
    frequencies = [
        tail_dominance([sample_stable(100, alpha, seed=(0, 100, r)) for r in range(2000)], 100)
        for alpha in (0.25, 1.0, 2.0)
    ]
    assert frequencies[0] > frequencies[1] > frequencies[2]


def test_tail_dominance_single_step():
    """Test a one-step walk is always dominated by its only step."""
    samples = [sample_stable(1, 1.0, seed=(0, 1, r)) for r in range(200)]
    assert tail_dominance(samples, 1) == 1.0


def test_heavier_tail_exceeds_large_threshold_more_often():
    """Test |X| > 100 is more frequent at alpha = 0.5 than at alpha = 1.5."""
    heavy = np.abs(stable_increments(np.random.default_rng(3), 0.5, 100_000))
    light = np.abs(stable_increments(np.random.default_rng(4), 1.5, 100_000))
    assert np.mean(heavy > 100) > np.mean(light > 100)


def test_dominant_up_frequency_bounds():
    """Test the non-dominant up frequency lies in [0, 1/2] up to noise."""
    samples = [sample_stable(50, 1.0, seed=(0, 50, r)) for r in range(500)]
    frequency = dominant_up_frequency(samples, 50)
    assert 0.0 <= frequency <= 0.6
    with pytest.raises(ValueError):
        dominant_up_frequency([], 10)


def test_tail_dominance_requires_long_walks():
    """Test a horizon beyond the walk length raises ValueError."""
    with pytest.raises(ValueError):
        tail_dominance([RealWalkSample([1.0, 2.0])], 5)
