"""Greedy increasing subsequence module."""

from typing import List, Optional, Tuple

from ultralis.lis.patience import OrderedWalk


def greedy_length(walk: OrderedWalk, n: Optional[int] = None) -> int:
    """
    Length of the greedy increasing subsequence of S_1..S_n.

    A segment ``a..b`` of positions is split at the largest step over ``a+1..b`` into
    ``a..sigma-1`` and ``sigma..b``. An up step keeps both sides; a down step keeps
    only the side with more positions (the left one on a tie). A single position
    counts 1. The result never exceeds the LIS length.

    Args:
        walk: Ultra-fat walk
        n: Prefix length, defaults to the full walk

    Returns:
        The greedy length

    Examples:
        >>> from ultralis.walk.ultrafat_walk import WalkSample
        >>> greedy_length(WalkSample([1, 1, 1], [0.1, 0.2, 0.3]))
        3
    """
    n = walk.n if n is None else n
    if not 1 <= n <= walk.n:
        raise ValueError(f"Prefix length {n} outside 1..{walk.n}")
    kept = 0
    stack: List[Tuple[int, int]] = [(1, n)]
    while stack:
        first, last = stack.pop()
        if first == last:
            kept += 1
            continue
        sigma, up = walk.max_step(first + 1, last)
        left = (first, sigma - 1)
        right = (sigma, last)
        if up:
            stack.append(left)
            stack.append(right)
        elif sigma - first >= last - sigma + 1:
            stack.append(left)
        else:
            stack.append(right)
    return kept
