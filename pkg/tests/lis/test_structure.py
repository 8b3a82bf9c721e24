"""Test cases for the structural identities of the LIS."""

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy import stats

from ultralis.lis.patience import lis_length
from ultralis.lis.structure import (
    lis_subinterval,
    verify_block_bound,
    verify_split_recursion,
    verify_subadditivity,
    verify_superadditivity,
)
from ultralis.walk.stable_walk import RealWalkSample, sample_stable
from ultralis.walk.ultrafat_walk import WalkSample, sample_ultrafat

seeds = st.integers(min_value=0, max_value=100_000)


def test_split_up_adds():
    """Test an up split adds both sides."""
    walk = WalkSample([1, -1, 1, 1], [0.1, 0.2, 0.9, 0.3])
    check = verify_split_recursion(walk)
    assert check.sigma == 3 and check.up
    assert check.left == 1 and check.right == 2
    assert check.total == 3
    assert check.passed


def test_split_down_takes_max():
    """Test a down split takes the larger side."""
    walk = WalkSample([1, 1, -1, 1], [0.1, 0.2, 0.9, 0.3])
    check = verify_split_recursion(walk)
    assert not check.up
    assert check.expected == max(check.left, check.right) == check.total


def test_split_needs_two_steps():
    """Test n < 2 raises ValueError."""
    with pytest.raises(ValueError):
        verify_split_recursion(sample_ultrafat(1, seed=0))


def test_subinterval_bounds():
    """Test L(m, n) argument validation."""
    walk = sample_ultrafat(10, seed=0)
    assert lis_subinterval(walk, 0, 10) == lis_length(walk)
    with pytest.raises(ValueError):
        lis_subinterval(walk, 5, 5)
    with pytest.raises(ValueError):
        lis_subinterval(walk, 0, 11)


@given(seeds, st.sampled_from([2, 3, 10, 100]))
def test_split_identity_holds(seed, n):
    """Test the split identity on random ultra-fat walks."""
    assert verify_split_recursion(sample_ultrafat(n, seed=seed)).passed


@given(seeds)
def test_real_walk_split_bounds(seed):
    """Test max(left, right) <= L(n) <= left + right for stable walks."""
    walk = sample_stable(60, 1.0, seed=seed)
    check = verify_split_recursion(walk)
    assert check.within_bounds
    if walk.dominant_step():
        assert check.passed


def test_real_walk_split_can_fail_without_dominance():
    """Test the exact identity is specific to dominant steps."""
    # step 2 is the largest and goes up, but the walk then falls below S_1
    walk = RealWalkSample([5.0, 3.0, -2.9, -2.9, -2.9, 1.0, 1.0])
    check = verify_split_recursion(walk)
    assert check.sigma == 2 and check.up
    assert not walk.dominant_step()
    assert (check.left, check.right, check.total) == (1, 3, 3)
    assert check.within_bounds
    assert not check.passed


@given(seeds, st.integers(min_value=1, max_value=59))
def test_subadditivity(seed, s):
    """Test L(s + t) <= L(s) + L(s, s + t)."""
    assert verify_subadditivity(sample_ultrafat(60, seed=seed), s, 60 - s).passed


def test_subadditivity_validation():
    """Test block lengths are validated."""
    walk = sample_ultrafat(10, seed=0)
    with pytest.raises(ValueError):
        verify_subadditivity(walk, 0, 5)
    with pytest.raises(ValueError):
        verify_subadditivity(walk, 6, 5)


@given(seeds, st.integers(1, 6), st.integers(1, 6))
def test_superadditivity(seed, ell, m):
    """Test T(ell + m) >= T(ell) + T(m) shifted by T(ell)."""
    assert verify_superadditivity(sample_ultrafat(200, seed=seed), ell, m).passed


def test_superadditivity_unreached():
    """Test unreached lengths never count as violations."""
    walk = WalkSample([-1, -1, -1], [0.1, 0.2, 0.3])
    assert verify_superadditivity(walk, 1, 1).passed
    with pytest.raises(ValueError):
        verify_superadditivity(walk, 0, 1)


@given(seeds, st.sampled_from([(2, 20), (4, 10), (5, 8)]))
def test_block_bound(seed, shape):
    """Test L(j * b) dominates the LIS of each block."""
    j, block = shape
    assert verify_block_bound(sample_ultrafat(j * block, seed=seed), j, block).passed


def test_block_bound_validation():
    """Test oversize block layouts raise ValueError."""
    with pytest.raises(ValueError):
        verify_block_bound(sample_ultrafat(10, seed=0), 3, 4)


@pytest.mark.slow
def test_shifted_interval_has_the_law_of_a_fresh_walk():
    """Test L(16, 32) and L(16) agree in law (two-sample KS at the 1% level)."""
    reps, k, m = 10_000, 16, 16
    shifted = [lis_subinterval(sample_ultrafat(m + k, seed=(0, m + k, r)), m, m + k) for r in range(reps)]
    fresh = [lis_length(sample_ultrafat(k, seed=(1, k, r))) for r in range(reps)]
    critical = 1.628 * math.sqrt(2 / reps)
    assert stats.ks_2samp(shifted, fresh).statistic < critical
