"""Ultra-fat tailed walk module.

A step k is ``sign_k * g(|U_k|)``. The partial sums are never built explicitly:
for i < j the sign of S_j - S_i is the sign of the largest-magnitude step among
positions i+1..j, which a sparse table answers in O(1).
"""

import csv
import logging
from pathlib import Path
from typing import Any, List, NamedTuple, Optional, Sequence, Tuple, Union

import numpy as np

from ultralis.ordered_space.ultra_element import Ordering
from ultralis.walk.rng import SeedLike, as_generator
from ultralis.walk.sparse_table import SparseTable

logger = logging.getLogger(__name__)


class SplitPoint(NamedTuple):
    """Position of the largest step in a range and whether that step goes up."""

    position: int
    up: bool


class WalkSample:
    """One realized ultra-fat walk of ``n`` steps, positions numbered from 1."""

    model = "ultrafat"
    alpha: Optional[float] = None

    def __init__(self, signs: Sequence[int], magnitudes: Sequence[float]) -> None:
        """
        Initialize a walk from its sign and magnitude vectors.

        Args:
            signs: Step signs, each +1 or -1
            magnitudes: Pairwise distinct step magnitudes in (0, 1)

        Examples:
            >>> walk = WalkSample([1, 1], [0.2, 0.7])
            >>> walk.compare_partial_sums(1, 2)
            <Ordering.LESS: -1>
        """
        sign_array = np.asarray(signs, dtype=np.int8)
        magnitude_array = np.asarray(magnitudes, dtype=np.float64)
        if sign_array.ndim != 1 or sign_array.size == 0:
            raise ValueError("A walk needs at least one step")
        if sign_array.shape != magnitude_array.shape:
            raise ValueError(
                f"signs and magnitudes differ in length: {sign_array.size} != {magnitude_array.size}"
            )
        if not np.all(np.abs(sign_array) == 1):
            raise ValueError("Signs must be +1 or -1")
        if np.any(magnitude_array <= 0.0) or np.any(magnitude_array >= 1.0):
            raise ValueError("Magnitudes must lie in (0, 1)")
        if np.unique(magnitude_array).size != magnitude_array.size:
            raise ValueError("Magnitudes must be pairwise distinct")
        sign_array.setflags(write=False)
        magnitude_array.setflags(write=False)
        self._signs = sign_array
        self._magnitudes = magnitude_array
        self._rmq = SparseTable(magnitude_array)
        self._ranks: Optional["np.ndarray[Any, Any]"] = None

    @classmethod
    def from_arrays(cls, signs: Sequence[int], magnitudes: Sequence[float]) -> "WalkSample":
        """Alias of the constructor, for symmetry with the samplers."""
        return cls(signs, magnitudes)

    @property
    def n(self) -> int:
        """Number of steps."""
        return int(self._signs.size)

    @property
    def signs(self) -> "np.ndarray[Any, Any]":
        """Read-only step signs."""
        return self._signs

    @property
    def magnitudes(self) -> "np.ndarray[Any, Any]":
        """Read-only step magnitudes."""
        return self._magnitudes

    def _check_position(self, k: int) -> None:
        if not 1 <= k <= self.n:
            raise IndexError(f"Position {k} outside 1..{self.n}")

    def max_step(self, first: int, last: int) -> SplitPoint:
        """
        Largest-magnitude step among positions ``first..last``.

        Args:
            first: First position (1-based)
            last: Last position, ``last >= first``

        Returns:
            The position of that step and whether it is positive
        """
        self._check_position(first)
        self._check_position(last)
        if last < first:
            raise IndexError(f"Empty step range {first}..{last}")
        index = self._rmq.argmax(first - 1, last - 1)
        return SplitPoint(index + 1, bool(self._signs[index] > 0))

    def compare_partial_sums(self, i: int, j: int) -> Ordering:
        """
        Compare S_i with S_j.

        Args:
            i: First position (1-based)
            j: Second position (1-based)

        Returns:
            Ordering of S_i relative to S_j; EQUAL only when ``i == j``
        """
        self._check_position(i)
        self._check_position(j)
        if i == j:
            return Ordering.EQUAL
        if i < j:
            return Ordering.LESS if self.max_step(i + 1, j).up else Ordering.GREATER
        return Ordering.GREATER if self.max_step(j + 1, i).up else Ordering.LESS

    def sigma(self, n: Optional[int] = None) -> SplitPoint:
        """
        Position in 2..n of the largest step, with the up/down flag.

        Args:
            n: Prefix length, defaults to the full walk

        Returns:
            ``SplitPoint(sigma, up)``
        """
        n = self.n if n is None else n
        if n < 2:
            raise ValueError(f"sigma needs a prefix of at least 2 steps, got {n}")
        return self.max_step(2, n)

    def order_keys(self) -> "np.ndarray[Any, Any]":
        """
        Rank of each partial sum S_1..S_n under the walk's order (0 is the smallest).

        The segment ``a..b`` holds a contiguous block of ranks. Splitting it at the
        largest step over ``a+1..b`` puts ``a..sigma-1`` entirely below ``sigma..b``
        on an up step and entirely above it on a down step.

        Returns:
            Integer array whose entry k-1 is the rank of S_k
        """
        if self._ranks is not None:
            return self._ranks
        ranks = np.empty(self.n, dtype=np.int64)
        argmax = self._rmq.argmax
        signs = self._signs
        stack: List[Tuple[int, int, int]] = [(1, self.n, 0)]
        while stack:
            first, last, lo = stack.pop()
            if first == last:
                ranks[first - 1] = lo
                continue
            # positions first+1..last are 0-based indices first..last-1
            index = argmax(first, last - 1)
            position, up = index + 1, signs[index] > 0
            left_size = position - first
            right_size = last - position + 1
            if up:
                stack.append((first, position - 1, lo))
                stack.append((position, last, lo + left_size))
            else:
                stack.append((position, last, lo))
                stack.append((first, position - 1, lo + right_size))
        ranks.setflags(write=False)
        self._ranks = ranks
        return ranks

    def dump_csv(self, path: Union[str, Path]) -> None:
        """
        Write the walk as CSV with columns ``k,sign,magnitude``.

        Args:
            path: Destination file
        """
        with open(path, "w", newline="") as handle:
            writer = csv.writer(handle)
            writer.writerow(["k", "sign", "magnitude"])
            for k, (sign, magnitude) in enumerate(zip(self._signs, self._magnitudes), start=1):
                writer.writerow([k, int(sign), repr(float(magnitude))])
        logger.debug("Dumped %d-step walk to %s", self.n, path)

    def __repr__(self) -> str:
        return f"WalkSample(n={self.n})"


def distinct_uniforms(rng: np.random.Generator, n: int) -> "np.ndarray[Any, Any]":
    """
    Draw ``n`` pairwise distinct uniforms from (0, 1).

    Zeros and repeated values are redrawn in place, in position order, so the result
    is a deterministic function of the generator state.

    Args:
        rng: Source generator
        n: Number of values

    Returns:
        Array of distinct values in (0, 1)
    """
    values = rng.random(n)
    while True:
        _, first_seen = np.unique(values, return_index=True)
        repeated = np.ones(n, dtype=bool)
        repeated[first_seen] = False
        repeated |= values == 0.0
        bad = np.flatnonzero(repeated)
        if bad.size == 0:
            return values
        logger.debug("Redrawing %d colliding magnitudes", bad.size)
        values[bad] = rng.random(bad.size)


def sample_ultrafat(n: int, seed: SeedLike = 0) -> WalkSample:
    """
    Sample an ultra-fat tailed walk.

    Signs are IID uniform on {+1, -1}; magnitudes are IID uniform on (0, 1) and drawn
    after the signs from the same stream.

    Args:
        n: Number of steps, at least 1
        seed: Master seed, ``(seed, *keys)`` stream key, or generator

    Returns:
        The sampled walk

    Examples:
        >>> sample_ultrafat(4, seed=1).n
        4
    """
    if n < 1:
        raise ValueError(f"A walk needs n >= 1 steps, got {n}")
    rng = as_generator(seed)
    signs = rng.integers(0, 2, size=n, dtype=np.int8) * 2 - 1
    magnitudes = distinct_uniforms(rng, n)
    return WalkSample(signs, magnitudes)
