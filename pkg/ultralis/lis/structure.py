"""Pointwise structural identities and inequalities of the LIS."""

import logging
from dataclasses import dataclass
from typing import Any, List, Optional

from ultralis.lis.patience import (
    OrderedWalk,
    first_passage,
    lis_length,
    lis_trajectory,
    patience_piles,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SplitCheck:
    """Components of the split at the largest step and the outcome of the identity."""

    n: int
    sigma: int
    up: bool
    left: int
    right: int
    total: int

    @property
    def expected(self) -> int:
        """Right-hand side: sum of both sides on an up step, their max on a down step."""
        return self.left + self.right if self.up else max(self.left, self.right)

    @property
    def passed(self) -> bool:
        """Whether L(n) equals the right-hand side exactly."""
        return self.total == self.expected

    @property
    def within_bounds(self) -> bool:
        """``max(left, right) <= L(n) <= left + right``, which holds for any walk."""
        return max(self.left, self.right) <= self.total <= self.left + self.right


@dataclass(frozen=True)
class InequalityCheck:
    """Both sides of a pointwise inequality ``lhs <= rhs``."""

    lhs: float
    rhs: float

    @property
    def passed(self) -> bool:
        """Whether the inequality holds."""
        return self.lhs <= self.rhs


def lis_subinterval(walk: OrderedWalk, m: int, n: int) -> int:
    """
    L(m, n): LIS of S_{m+1}..S_n, the initial element S_m excluded.

    Args:
        walk: Walk with a strict total order on its partial sums
        m: Start offset, ``0 <= m < n``
        n: End position, at most ``walk.n``

    Returns:
        The LIS length of positions m+1..n
    """
    if not 0 <= m < n:
        raise ValueError(f"lis_subinterval needs 0 <= m < n, got m={m}, n={n}")
    if n > walk.n:
        raise ValueError(f"End position {n} beyond walk length {walk.n}")
    return lis_length(walk, m + 1, n)


def verify_split_recursion(walk: OrderedWalk, n: Optional[int] = None) -> SplitCheck:
    """
    Check L(n) against the split at sigma(n).

    On an up step L(n) = L(sigma-1) + L(sigma-1, n); on a down step it is the max of
    the two. Exact for ultra-fat walks; for real walks only ``within_bounds`` is
    guaranteed.

    Args:
        walk: Walk to check
        n: Prefix length, at least 2

    Returns:
        The split components
    """
    n = walk.n if n is None else n
    if n < 2:
        raise ValueError(f"Split recursion needs n >= 2, got {n}")
    sigma, up = walk.sigma(n)
    check = SplitCheck(
        n=n,
        sigma=sigma,
        up=up,
        left=lis_length(walk, 1, sigma - 1),
        right=lis_subinterval(walk, sigma - 1, n),
        total=lis_length(walk, 1, n),
    )
    if not check.passed:
        logger.debug("Split identity fails: %s", check)
    return check


def verify_subadditivity(walk: OrderedWalk, s: int, t: int) -> InequalityCheck:
    """
    Check L(s + t) <= L(s) + L(t) shifted by s.

    Args:
        walk: Walk with at least ``s + t`` steps
        s: First block length, at least 1
        t: Second block length, at least 1

    Returns:
        ``lhs = L(s + t)`` against ``rhs = L(s) + L(s, s + t)``
    """
    if s < 1 or t < 1:
        raise ValueError(f"Block lengths must be positive, got s={s}, t={t}")
    if s + t > walk.n:
        raise ValueError(f"s + t = {s + t} exceeds walk length {walk.n}")
    return InequalityCheck(
        lhs=lis_length(walk, 1, s + t),
        rhs=lis_length(walk, 1, s) + lis_subinterval(walk, s, s + t),
    )


def _suffix_passage(walk: OrderedWalk, offset: int, length: int) -> Optional[int]:
    """Least t with LIS(S_{offset+1}..S_{offset+t}) >= length, or None."""
    keys: List[Any] = walk.order_keys()[offset:].tolist()
    counts, _ = patience_piles(keys, track=False)
    for t, count in enumerate(counts, start=1):
        if count >= length:
            return t
    return None


def verify_superadditivity(walk: OrderedWalk, ell: int, m: int) -> InequalityCheck:
    """
    Check T(ell + m) >= T(ell) + T(m) shifted by T(ell).

    Unreached passage times count as infinite, so the check only fails when
    T(ell + m) is finite and smaller than the right-hand side.

    Args:
        walk: Walk to check
        ell: First length, at least 1
        m: Second length, at least 1

    Returns:
        ``lhs = T(ell) + T(m) o theta^T(ell)`` against ``rhs = T(ell + m)``
    """
    if ell < 1 or m < 1:
        raise ValueError(f"Lengths must be positive, got ell={ell}, m={m}")
    times = first_passage(lis_trajectory(walk))
    combined = times.get(ell + m)
    if combined is None:
        return InequalityCheck(lhs=0.0, rhs=float("inf"))
    head = times.get(ell)
    tail = None if head is None else _suffix_passage(walk, head, m)
    if head is None or tail is None:
        return InequalityCheck(lhs=float("inf"), rhs=float(combined))
    return InequalityCheck(lhs=float(head + tail), rhs=float(combined))


def verify_block_bound(walk: OrderedWalk, j: int, block: int) -> InequalityCheck:
    """
    Check that L(j * block) is at least the LIS of each of its j consecutive blocks.

    Together with independence of the blocks this gives
    P(L(k) < x) <= P(L(k / j) < x) ** j.

    Args:
        walk: Walk with at least ``j * block`` steps
        j: Number of blocks
        block: Block length

    Returns:
        ``lhs = max block LIS`` against ``rhs = L(j * block)``
    """
    if j < 1 or block < 1:
        raise ValueError(f"Need j >= 1 and block >= 1, got j={j}, block={block}")
    if j * block > walk.n:
        raise ValueError(f"{j} blocks of {block} exceed walk length {walk.n}")
    best = max(lis_length(walk, i * block + 1, (i + 1) * block) for i in range(j))
    return InequalityCheck(lhs=float(best), rhs=float(lis_length(walk, 1, j * block)))
