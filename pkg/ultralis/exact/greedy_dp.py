"""Expected greedy length by dynamic programming over prefix sums."""

from fractions import Fraction
from typing import Any, List, Union

import numpy as np


def greedy_mean_dp(n_max: int, exact: bool = False) -> Union["np.ndarray[Any, Any]", List[Fraction]]:
    """
    Expected greedy lengths z_1..z_{n_max}.

    ``z_1 = 1`` and ``z_n = 1/(n-1) sum_{k=2}^{n} [ (z_{k-1} + z_{n-k+1})/2 + z_{max(k-1, n-k+1)}/2 ]``.
    Both halves of the first sum equal the prefix sum P_{n-1}; the max term visits
    each j >= ceil(n/2) twice except j = n/2, which is visited once, so each step is
    O(1) given running prefix sums.

    Args:
        n_max: Largest n, at least 1
        exact: Return Fractions instead of a float array

    Returns:
        Sequence whose entry n-1 is z_n

    Examples:
        >>> greedy_mean_dp(3, exact=True)
        [Fraction(1, 1), Fraction(3, 2), Fraction(2, 1)]
    """
    if n_max < 1:
        raise ValueError(f"n_max must be at least 1, got {n_max}")
    one = Fraction(1) if exact else 1.0
    z: List[Any] = [None, one]
    prefix: List[Any] = [one * 0, one]
    for n in range(2, n_max + 1):
        half = (n + 1) // 2
        total = 2 * prefix[n - 1] - prefix[half - 1]
        if n % 2 == 0:
            total -= z[n // 2] / 2
        value = total / (n - 1)
        z.append(value)
        prefix.append(prefix[n - 1] + value)
    if exact:
        return z[1:]
    return np.asarray(z[1:], dtype=np.float64)
