"""Real-valued walks: symmetric stable and Gaussian increments."""

import logging
import math
from typing import Any, Optional, Sequence

import numpy as np

from ultralis.ordered_space.ultra_element import Ordering
from ultralis.walk.rng import SeedLike, as_generator
from ultralis.walk.ultrafat_walk import SplitPoint

logger = logging.getLogger(__name__)


class RealWalkSample:
    """One realized real-valued walk, positions numbered from 1."""

    def __init__(
        self,
        increments: Sequence[float],
        model: str = "stable",
        alpha: Optional[float] = None,
    ) -> None:
        """
        Initialize a walk from its increments.

        Args:
            increments: Real steps X_1..X_n
            model: Model tag, ``"stable"`` or ``"gaussian"``
            alpha: Stability index for stable walks

        Examples:
            >>> walk = RealWalkSample([1.0, 2.0, -1.0])
            >>> walk.partial_sums.tolist()
            [1.0, 3.0, 2.0]
        """
        steps = np.asarray(increments, dtype=np.float64)
        if steps.ndim != 1 or steps.size == 0:
            raise ValueError("A walk needs at least one step")
        if not np.all(np.isfinite(steps)):
            raise ValueError("Increments must be finite")
        if model not in ("stable", "gaussian"):
            raise ValueError(f"Unknown model: {model}")
        sums = np.cumsum(steps)
        steps.setflags(write=False)
        sums.setflags(write=False)
        self._increments = steps
        self._partial_sums = sums
        self.model = model
        self.alpha = alpha

    @property
    def n(self) -> int:
        """Number of steps."""
        return int(self._increments.size)

    @property
    def increments(self) -> "np.ndarray[Any, Any]":
        """Read-only increments."""
        return self._increments

    @property
    def partial_sums(self) -> "np.ndarray[Any, Any]":
        """Read-only partial sums S_1..S_n."""
        return self._partial_sums

    def _check_position(self, k: int) -> None:
        if not 1 <= k <= self.n:
            raise IndexError(f"Position {k} outside 1..{self.n}")

    def compare_partial_sums(self, i: int, j: int) -> Ordering:
        """Compare S_i with S_j (1-based positions)."""
        self._check_position(i)
        self._check_position(j)
        left, right = self._partial_sums[i - 1], self._partial_sums[j - 1]
        if left < right:
            return Ordering.LESS
        if left > right:
            return Ordering.GREATER
        return Ordering.EQUAL

    def max_step(self, first: int, last: int) -> SplitPoint:
        """Largest-magnitude increment among positions ``first..last``."""
        self._check_position(first)
        self._check_position(last)
        if last < first:
            raise IndexError(f"Empty step range {first}..{last}")
        index = first - 1 + int(np.argmax(np.abs(self._increments[first - 1 : last])))
        return SplitPoint(index + 1, bool(self._increments[index] > 0))

    def sigma(self, n: Optional[int] = None) -> SplitPoint:
        """Position in 2..n of the largest increment, with the up/down flag."""
        n = self.n if n is None else n
        if n < 2:
            raise ValueError(f"sigma needs a prefix of at least 2 steps, got {n}")
        return self.max_step(2, n)

    def dominant_step(self, n: Optional[int] = None) -> bool:
        """
        Check whether the sigma(n) step outweighs all other steps over 2..n combined.

        When it does, every S_j with j >= sigma lies on the same side of every S_i
        with i < sigma, just as in the ultra-fat walk.
        """
        n = self.n if n is None else n
        position, _ = self.sigma(n)
        magnitudes = np.abs(self._increments[1:n])
        largest = abs(self._increments[position - 1])
        return bool(largest > magnitudes.sum() - largest)

    def order_keys(self) -> "np.ndarray[Any, Any]":
        """Sort keys of the partial sums (the sums themselves)."""
        return self._partial_sums

    def __repr__(self) -> str:
        return f"RealWalkSample(n={self.n}, model={self.model!r}, alpha={self.alpha!r})"


def stable_increments(rng: np.random.Generator, alpha: float, size: int) -> "np.ndarray[Any, Any]":
    """
    Symmetric alpha-stable variates by the Chambers-Mallows-Stuck method.

    With V uniform on (-pi/2, pi/2) and W standard exponential,
    ``X = sin(alpha V) / cos(V)**(1/alpha) * (cos((1 - alpha) V) / W)**((1 - alpha)/alpha)``,
    which reduces to ``tan(V)`` at alpha = 1 and to a centered Gaussian of variance 2
    at alpha = 2.

    Args:
        rng: Source generator
        alpha: Stability index in (0, 2]
        size: Number of variates

    Returns:
        Array of variates
    """
    if not 0.0 < alpha <= 2.0:
        raise ValueError(f"Stability index must lie in (0, 2], got {alpha}")
    v = math.pi * (rng.random(size) - 0.5)
    w = rng.exponential(size=size)
    if alpha == 1.0:
        return np.tan(v)
    t1 = np.sin(alpha * v) / np.cos(v) ** (1.0 / alpha)
    t2 = (np.cos((1.0 - alpha) * v) / w) ** ((1.0 - alpha) / alpha)
    return t1 * t2


def sample_stable(n: int, alpha: float, seed: SeedLike = 0) -> RealWalkSample:
    """
    Sample a symmetric alpha-stable walk.

    Args:
        n: Number of steps, at least 1
        alpha: Stability index in (0, 2]
        seed: Master seed, ``(seed, *keys)`` stream key, or generator

    Returns:
        The sampled walk

    Examples:
        >>> sample_stable(8, alpha=1.0, seed=3).n
        8
    """
    if n < 1:
        raise ValueError(f"A walk needs n >= 1 steps, got {n}")
    increments = stable_increments(as_generator(seed), alpha, n)
    return RealWalkSample(increments, model="stable", alpha=alpha)


def sample_gaussian(n: int, seed: SeedLike = 0) -> RealWalkSample:
    """Sample a walk with standard normal increments."""
    if n < 1:
        raise ValueError(f"A walk needs n >= 1 steps, got {n}")
    increments = as_generator(seed).standard_normal(n)
    return RealWalkSample(increments, model="gaussian", alpha=2.0)


def tail_dominance(samples: Sequence[RealWalkSample], n: int) -> float:
    """
    Empirical probability that the largest step outweighs all the others.

    With W_n = max |X_k| and Z_n = sum |X_k| over k <= n, this is the frequency of
    ``W_n > Z_n - W_n``.

    Args:
        samples: Non-empty batch of walks with at least ``n`` steps
        n: Horizon

    Returns:
        Frequency in [0, 1]
    """
    if not samples:
        raise ValueError("tail_dominance needs a non-empty batch")
    hits = 0
    for walk in samples:
        if walk.n < n:
            raise ValueError(f"Walk of {walk.n} steps is shorter than the horizon {n}")
        magnitudes = np.abs(walk.increments[:n])
        largest = magnitudes.max()
        hits += int(largest > magnitudes.sum() - largest)
    frequency = hits / len(samples)
    logger.debug("Tail dominance at n=%d over %d walks: %.4f", n, len(samples), frequency)
    return frequency


def dominant_up_frequency(samples: Sequence[RealWalkSample], n: int) -> float:
    """
    Empirical probability that sigma(n) is an up step that does not dominate.

    This is the event on which the ultra-fat split identity can fail for a real walk.

    Args:
        samples: Non-empty batch of walks with at least ``n`` steps
        n: Horizon, at least 2

    Returns:
        Frequency in [0, 1]
    """
    if not samples:
        raise ValueError("dominant_up_frequency needs a non-empty batch")
    misses = sum(1 for walk in samples if walk.sigma(n).up and not walk.dominant_step(n))
    return misses / len(samples)
