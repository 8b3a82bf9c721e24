"""Patience sorting over walks with a strict total order on their partial sums."""

import functools
import itertools
from bisect import bisect_left
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Protocol, Sequence, Tuple

import numpy as np

from ultralis.ordered_space.ultra_element import Ordering
from ultralis.walk.ultrafat_walk import SplitPoint


class OrderedWalk(Protocol):
    """A walk whose partial sums S_1..S_n can be compared."""

    @property
    def n(self) -> int: ...

    def compare_partial_sums(self, i: int, j: int) -> Ordering: ...

    def order_keys(self) -> "np.ndarray[Any, Any]": ...

    def max_step(self, first: int, last: int) -> SplitPoint: ...

    def sigma(self, n: Optional[int] = None) -> SplitPoint: ...


@dataclass(frozen=True)
class LisResult:
    """
    LIS trajectory of a walk.

    ``lengths[t]`` is L(t) for t = 0..n, with L(0) = 0.
    """

    lengths: "np.ndarray[Any, Any]"
    witness: Optional[List[int]] = None

    @property
    def n(self) -> int:
        """Number of positions covered."""
        return int(self.lengths.size - 1)

    @property
    def final(self) -> int:
        """L(n)."""
        return int(self.lengths[-1])


@dataclass(frozen=True)
class FirstPassage:
    """First-passage times T(l) = least t with L(t) >= l."""

    times: Dict[int, int] = field(default_factory=dict)

    def __getitem__(self, length: int) -> int:
        return self.times[length]

    def get(self, length: int) -> Optional[int]:
        """T(length), or None when the length is never reached."""
        return self.times.get(length)


def patience_piles(keys: Sequence[Any], track: bool) -> Tuple[List[int], Optional[List[int]]]:
    """
    Run patience sorting on comparable keys.

    Returns the pile count after each element and, when ``track`` is set, the indices
    of one longest strictly increasing subsequence.
    """
    tops: List[Any] = []
    top_index: List[int] = []
    predecessor: List[int] = []
    counts: List[int] = []
    for index, key in enumerate(keys):
        # bisect_left: an equal key replaces the top instead of extending a pile
        pile = bisect_left(tops, key)
        if pile == len(tops):
            tops.append(key)
            top_index.append(index)
        else:
            tops[pile] = key
            top_index[pile] = index
        if track:
            predecessor.append(top_index[pile - 1] if pile > 0 else -1)
        counts.append(len(tops))
    if not track:
        return counts, None
    witness: List[int] = []
    cursor = top_index[-1] if top_index else -1
    while cursor >= 0:
        witness.append(cursor)
        cursor = predecessor[cursor]
    witness.reverse()
    return counts, witness


def lis_of_keys(keys: Sequence[Any]) -> int:
    """Length of the longest strictly increasing subsequence of ``keys``."""
    tops: List[Any] = []
    for key in keys:
        pile = bisect_left(tops, key)
        if pile == len(tops):
            tops.append(key)
        else:
            tops[pile] = key
    return len(tops)


def lis_trajectory(
    walk: OrderedWalk,
    n: Optional[int] = None,
    witness: bool = False,
    use_keys: bool = True,
) -> LisResult:
    """
    Compute L(t) for t = 1..n by patience sorting.

    S_0 never belongs to the subsequence. With ``use_keys`` the walk's precomputed
    order keys are bisected directly; otherwise every comparison goes through
    ``compare_partial_sums``. Both make O(n log n) comparisons and give identical
    results.

    Args:
        walk: Walk with a strict total order on its partial sums
        n: Prefix length, defaults to the full walk
        witness: Whether to recover one longest increasing subsequence
        use_keys: Bisect order keys rather than calling the comparator

    Returns:
        The trajectory, with witness positions (1-based) when requested

    Examples:
        >>> from ultralis.walk.stable_walk import RealWalkSample
        >>> lis_trajectory(RealWalkSample([1.0, 2.0, -1.0])).lengths.tolist()
        [0, 1, 2, 2]
    """
    n = walk.n if n is None else n
    if not 0 <= n <= walk.n:
        raise ValueError(f"Prefix length {n} outside 0..{walk.n}")
    if use_keys:
        keys: Sequence[Any] = walk.order_keys()[:n].tolist()
    else:
        key = functools.cmp_to_key(lambda i, j: int(walk.compare_partial_sums(i, j)))
        keys = [key(position) for position in range(1, n + 1)]
    counts, path = patience_piles(keys, witness)
    lengths = np.zeros(n + 1, dtype=np.int64)
    lengths[1:] = counts
    lengths.setflags(write=False)
    positions = None if path is None else [index + 1 for index in path]
    return LisResult(lengths=lengths, witness=positions)


def lis_length(walk: OrderedWalk, first: int = 1, last: Optional[int] = None) -> int:
    """
    LIS length of the partial sums at positions ``first..last``.

    Args:
        walk: Walk with a strict total order on its partial sums
        first: First position (1-based)
        last: Last position, defaults to ``walk.n``

    Returns:
        The LIS length, 0 for an empty range
    """
    last = walk.n if last is None else last
    if last < first:
        return 0
    return lis_of_keys(walk.order_keys()[first - 1 : last].tolist())


def first_passage(result: LisResult) -> FirstPassage:
    """
    First-passage times of an LIS trajectory.

    Args:
        result: Trajectory from :func:`lis_trajectory`

    Returns:
        ``times[l]`` for l = 1..L(n)

    Examples:
        >>> first_passage(LisResult(np.array([0, 1, 2, 2, 3]))).times
        {1: 1, 2: 2, 3: 4}
    """
    times: Dict[int, int] = {}
    reached = 0
    for t in range(1, result.n + 1):
        current = int(result.lengths[t])
        while reached < current:
            reached += 1
            times[reached] = t
    return FirstPassage(times)


def lis_dp(keys: Sequence[Any]) -> int:
    """Quadratic dynamic-programming LIS, kept as a reference for patience sorting."""
    best: List[int] = []
    for j, key in enumerate(keys):
        best.append(1 + max((best[i] for i in range(j) if keys[i] < key), default=0))
    return max(best, default=0)


def brute_force_lis(walk: OrderedWalk, n: Optional[int] = None) -> int:
    """
    LIS by checking subsets from the largest down, using only the comparator.

    Exponential in ``n``; meant for n <= 10.
    """
    n = walk.n if n is None else n
    positions = range(1, n + 1)
    for size in range(n, 0, -1):
        for subset in itertools.combinations(positions, size):
            if all(
                walk.compare_partial_sums(a, b) is Ordering.LESS
                for a, b in zip(subset, subset[1:])
            ):
                return size
    return 0
