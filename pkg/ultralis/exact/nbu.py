"""NBU (new better than used) inequalities checked on exact and sampled laws.

The comparison law throughout is the geometric started from zero with mean mu:
P(Y = k) = (1/(1+mu)) (mu/(1+mu))**k for k >= 0.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Union

import numpy as np

from ultralis.exact.enumeration import ExactDistribution, expected_min

logger = logging.getLogger(__name__)

Number = Union[int, float, Fraction]


@dataclass(frozen=True)
class TailSums:
    """Tail probabilities and tail sums of a law and of its mean-matched geometric."""

    mu: Fraction
    a: List[Fraction]
    A: List[Fraction]
    g: List[Fraction]
    G: List[Fraction]

    @classmethod
    def from_distribution(cls, dist: ExactDistribution, horizon: Optional[int] = None) -> "TailSums":
        """
        Build the tail table for k = 0..horizon.

        Args:
            dist: Law with positive mean
            horizon: Last index, defaults to one past the support

        Returns:
            The tail table
        """
        mu = dist.mean
        if mu <= 0:
            raise ValueError(f"Tail domination needs a positive mean, got {mu}")
        horizon = dist.support_max + 1 if horizon is None else horizon
        a = [dist.tail(k) for k in range(horizon + 1)]
        A: List[Fraction] = [Fraction(0)] * (horizon + 1)
        running = Fraction(0)
        for k in range(dist.support_max, -1, -1):
            running += dist.tail(k)
            if k <= horizon:
                A[k] = running
        ratio = mu / (1 + mu)
        g = [ratio**k for k in range(horizon + 1)]
        G = [(1 + mu) * gk for gk in g]
        return cls(mu=mu, a=a, A=A, g=g, G=G)

    @classmethod
    def geometric(cls, mu: Number, horizon: int) -> "TailSums":
        """Tail table of the geometric law itself, where a = g and A = G."""
        mu = Fraction(mu)
        ratio = mu / (1 + mu)
        g = [ratio**k for k in range(horizon + 1)]
        G = [(1 + mu) * gk for gk in g]
        return cls(mu=mu, a=list(g), A=list(G), g=g, G=G)


@dataclass(frozen=True)
class BoundReport:
    """Outcome of one inequality check, with the quantities compared."""

    passed: bool
    lhs: float
    rhs: float
    gap: float = 0.0
    skipped: bool = False


def is_nbu(dist: ExactDistribution) -> bool:
    """Exact check of P(X >= a+b) <= P(X >= a) P(X >= b) for all a, b >= 1."""
    top = dist.support_max
    for a in range(1, top + 1):
        for b in range(1, top + 1):
            if dist.tail(a + b) > dist.tail(a) * dist.tail(b):
                return False
    return True


def check_tail_domination(dist: ExactDistribution) -> BoundReport:
    """
    Check A_n <= G_n for every n up to one past the support.

    Args:
        dist: Law with positive mean

    Returns:
        Report whose ``gap`` is max(A_n - G_n); passes when the gap is <= 0
    """
    tails = TailSums.from_distribution(dist)
    gaps = [a_sum - g_sum for a_sum, g_sum in zip(tails.A, tails.G)]
    worst = max(range(len(gaps)), key=lambda k: gaps[k])
    return BoundReport(
        passed=gaps[worst] <= 0,
        lhs=float(tails.A[worst]),
        rhs=float(tails.G[worst]),
        gap=float(gaps[worst]),
    )


def geometric_expectation(mu: Number, phi: Callable[[int], float], tol: float = 1e-16) -> float:
    """
    E phi(Y) for Y geometric from zero with mean mu.

    The series is summed until the probability weight falls below ``tol`` relative to
    the running total, which suffices for phi of polynomial growth.
    """
    mu = float(mu)
    if mu <= 0:
        return float(phi(0))
    ratio = mu / (1.0 + mu)
    weight = 1.0 / (1.0 + mu)
    total = 0.0
    k = 0
    while True:
        term = weight * phi(k)
        total += term
        k += 1
        weight *= ratio
        if weight < tol and abs(term) <= tol * max(1.0, abs(total)):
            return total


def _is_convex(phi: Callable[[int], float], horizon: int) -> bool:
    values = [phi(k) for k in range(horizon + 3)]
    scale = max(1.0, max(abs(v) for v in values))
    return all(
        values[k + 2] - 2 * values[k + 1] + values[k] >= -1e-12 * scale for k in range(horizon + 1)
    )


def check_convex_domination(
    dist: ExactDistribution, phi: Callable[[int], float], rtol: float = 1e-12
) -> BoundReport:
    """
    Check E phi(X) <= E phi(Y) for convex phi against the mean-matched geometric.

    Args:
        dist: Law with positive mean
        phi: Convex function on the non-negative integers
        rtol: Relative slack for the floating-point geometric series

    Returns:
        Report with ``lhs = E phi(X)`` and ``rhs = E phi(Y)``
    """
    if not _is_convex(phi, max(dist.support_max, 64)):
        raise ValueError("phi fails the second-difference convexity check")
    lhs = dist.expectation(phi)
    rhs = geometric_expectation(dist.mean, phi)
    return BoundReport(
        passed=lhs <= rhs + rtol * max(1.0, abs(rhs)), lhs=lhs, rhs=rhs, gap=lhs - rhs
    )


def check_quantile_bound(dist: ExactDistribution, q: float) -> BoundReport:
    """
    Check E X <= q / P(X < q).

    Args:
        dist: NBU law
        q: Threshold

    Returns:
        Report; ``skipped`` when P(X < q) = 0 and the bound is vacuous
    """
    epsilon = dist.below(q)
    mean = dist.mean
    if epsilon == 0:
        return BoundReport(passed=True, lhs=float(mean), rhs=math.inf, skipped=True)
    bound = Fraction(q) / epsilon
    return BoundReport(passed=mean <= bound, lhs=float(mean), rhs=float(bound), gap=float(mean - bound))


def min_nbu_bound(a: Number, b: Number) -> Fraction:
    """Lower bound ab / (a + b + 1) on E min(X1, X2) for independent NBU laws of means a, b."""
    a, b = Fraction(a), Fraction(b)
    return a * b / (a + b + 1)


def geometric_min_mean(a: Number, b: Number) -> Fraction:
    """E min(Y1, Y2) for independent geometrics from zero with means a and b."""
    r = Fraction(a) / (1 + Fraction(a)) * Fraction(b) / (1 + Fraction(b))
    return r / (1 - r)


def check_min_bound(first: ExactDistribution, second: ExactDistribution) -> BoundReport:
    """
    Check E min(X1, X2) >= ab / (a + b + 1) under the exact product law.

    Returns:
        Report with ``lhs`` the bound and ``rhs`` the exact expected minimum
    """
    bound = min_nbu_bound(first.mean, second.mean)
    value = expected_min(first, second)
    return BoundReport(passed=bound <= value, lhs=float(bound), rhs=float(value), gap=float(bound - value))


def check_block_tail(
    small: ExactDistribution, large: ExactDistribution, j: int, x: int
) -> BoundReport:
    """
    Check P(L(k) < x) <= P(L(k/j) < x) ** j from the exact laws of both sizes.

    Args:
        small: Law of L(k/j)
        large: Law of L(k)
        j: Number of blocks
        x: Threshold
    """
    lhs = large.below(x)
    rhs = small.below(x) ** j
    return BoundReport(passed=lhs <= rhs, lhs=float(lhs), rhs=float(rhs), gap=float(lhs - rhs))


@dataclass(frozen=True)
class NbuReport:
    """Sampled NBU check: estimated P(L >= a+b) - P(L >= a) P(L >= b) and its z-score."""

    passed: bool
    difference: float
    stderr: float
    z: float
    samples: int


def empirical_nbu_check(
    samples: Sequence[int], a: int, b: int, threshold: float = 3.0, min_samples: int = 10_000
) -> NbuReport:
    """
    Test the NBU inequality on sampled LIS lengths.

    The standard error comes from the delta method: the difference is the mean of
    ``1{L >= a+b} - p_b 1{L >= a} - p_a 1{L >= b}`` up to a constant.

    Args:
        samples: Independent draws of L(t)
        a: First threshold, >= 0
        b: Second threshold, >= 0
        threshold: Flag a violation beyond this many standard errors
        min_samples: Smallest accepted sample count

    Returns:
        Report; fails only when the difference exceeds ``threshold`` standard errors
    """
    values = np.asarray(samples)
    if values.size < min_samples:
        raise ValueError(f"Need at least {min_samples} samples, got {values.size}")
    if a < 0 or b < 0:
        raise ValueError(f"Thresholds must be non-negative, got a={a}, b={b}")
    hit_a = (values >= a).astype(float)
    hit_b = (values >= b).astype(float)
    hit_ab = (values >= a + b).astype(float)
    p_a, p_b = hit_a.mean(), hit_b.mean()
    difference = float(hit_ab.mean() - p_a * p_b)
    influence = hit_ab - p_b * hit_a - p_a * hit_b
    stderr = float(influence.std(ddof=1) / math.sqrt(values.size))
    if stderr > 0:
        z = difference / stderr
    else:
        z = 0.0 if difference == 0 else math.copysign(math.inf, difference)
    logger.debug("NBU a=%d b=%d: difference=%.5f z=%.2f", a, b, difference, z)
    return NbuReport(
        passed=z <= threshold, difference=difference, stderr=stderr, z=z, samples=int(values.size)
    )
