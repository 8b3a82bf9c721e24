"""Exact laws of L(n) and of the greedy length for small n.

The magnitude order of steps 2..n is uniform over all (n-1)! orders and independent
of the 2**(n-1) equiprobable sign patterns; step 1 plays no role. Enumerating both
gives the exact law. Conditioning on sigma(n) gives a second, recursive route to the
same law that scales to any n.
"""

import csv
import itertools
import logging
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple, Union

from ultralis.lis.greedy import greedy_length
from ultralis.lis.patience import lis_length
from ultralis.walk.ultrafat_walk import WalkSample

logger = logging.getLogger(__name__)

MAX_ENUMERATION_N = 9

_STATISTICS: Dict[str, Callable[[WalkSample], int]] = {
    "lis": lis_length,
    "greedy": greedy_length,
}


@dataclass(frozen=True, eq=False)
class ExactDistribution:
    """Exact probability mass function on the non-negative integers."""

    pmf: Mapping[int, Fraction]
    n: Optional[int] = None

    def __post_init__(self) -> None:
        cleaned = {int(k): Fraction(p) for k, p in self.pmf.items() if p != 0}
        if any(p < 0 for p in cleaned.values()):
            raise ValueError("Probabilities must be non-negative")
        if sum(cleaned.values()) != 1:
            raise ValueError(f"Probabilities sum to {sum(cleaned.values())}, not 1")
        if any(k < 0 for k in cleaned):
            raise ValueError("Support must be non-negative")
        if self.n is not None and any(k > self.n for k in cleaned):
            raise ValueError(f"Support exceeds instance size {self.n}")
        object.__setattr__(self, "pmf", dict(sorted(cleaned.items())))

    @classmethod
    def point_mass(cls, value: int) -> "ExactDistribution":
        """Law concentrated on a single value."""
        return cls({value: Fraction(1)})

    @classmethod
    def from_counts(cls, counts: Mapping[int, int], n: Optional[int] = None) -> "ExactDistribution":
        """Normalize integer counts into a law."""
        total = sum(counts.values())
        if total <= 0:
            raise ValueError("Counts must have a positive total")
        return cls({k: Fraction(c, total) for k, c in counts.items()}, n=n)

    @property
    def mean(self) -> Fraction:
        """Exact mean."""
        return sum((k * p for k, p in self.pmf.items()), Fraction(0))

    @property
    def variance(self) -> Fraction:
        """Exact variance."""
        mu = self.mean
        return sum(((k - mu) ** 2 * p for k, p in self.pmf.items()), Fraction(0))

    @property
    def support_max(self) -> int:
        """Largest value with positive probability."""
        return max(self.pmf)

    def tail(self, k: int) -> Fraction:
        """P(X >= k)."""
        return sum((p for value, p in self.pmf.items() if value >= k), Fraction(0))

    def below(self, q: float) -> Fraction:
        """P(X < q)."""
        return sum((p for value, p in self.pmf.items() if value < q), Fraction(0))

    def median(self) -> int:
        """Smallest m with P(X <= m) >= 1/2."""
        cumulative = Fraction(0)
        for value, p in self.pmf.items():
            cumulative += p
            if cumulative >= Fraction(1, 2):
                return value
        return self.support_max

    def expectation(self, phi: Callable[[int], float]) -> float:
        """E phi(X) in floating point."""
        return float(sum(float(p) * phi(k) for k, p in self.pmf.items()))

    def __repr__(self) -> str:
        body = ", ".join(f"{k}: {p}" for k, p in self.pmf.items())
        return f"ExactDistribution(n={self.n}, pmf={{{body}}})"


def convolve(first: ExactDistribution, second: ExactDistribution) -> ExactDistribution:
    """Law of X + Y for independent X, Y."""
    pmf: Dict[int, Fraction] = {}
    for a, p in first.pmf.items():
        for b, q in second.pmf.items():
            pmf[a + b] = pmf.get(a + b, Fraction(0)) + p * q
    return ExactDistribution(pmf)


def max_law(first: ExactDistribution, second: ExactDistribution) -> ExactDistribution:
    """Law of max(X, Y) for independent X, Y."""
    pmf: Dict[int, Fraction] = {}
    for a, p in first.pmf.items():
        for b, q in second.pmf.items():
            top = max(a, b)
            pmf[top] = pmf.get(top, Fraction(0)) + p * q
    return ExactDistribution(pmf)


def expected_max(first: ExactDistribution, second: ExactDistribution) -> Fraction:
    """E max(X, Y) for independent X, Y."""
    return max_law(first, second).mean


def expected_min(first: ExactDistribution, second: ExactDistribution) -> Fraction:
    """E min(X, Y) = sum over k >= 1 of P(X >= k) P(Y >= k), for independent X, Y."""
    top = min(first.support_max, second.support_max)
    return sum((first.tail(k) * second.tail(k) for k in range(1, top + 1)), Fraction(0))


def _pattern_counts(job: Tuple[int, Tuple[int, ...], str]) -> Counter:
    """Tally the statistic over every magnitude order for one sign pattern."""
    n, tail_signs, statistic = job
    measure = _STATISTICS[statistic]
    signs = (1,) + tail_signs
    scale = n + 1
    counts: Counter = Counter()
    for order in itertools.permutations(range(n - 1)):
        # step 1 gets the smallest magnitude; it never enters a comparison
        magnitudes = [1 / scale] + [(rank + 2) / scale for rank in order]
        counts[measure(WalkSample(signs, magnitudes))] += 1
    return counts


def _enumerate(n: int, statistic: str, workers: int) -> ExactDistribution:
    if statistic not in _STATISTICS:
        raise ValueError(f"Unknown statistic: {statistic}")
    if not 2 <= n <= MAX_ENUMERATION_N:
        raise ValueError(f"Exact enumeration supports 2 <= n <= {MAX_ENUMERATION_N}, got {n}")
    jobs = [(n, pattern, statistic) for pattern in itertools.product((1, -1), repeat=n - 1)]
    totals: Counter = Counter()
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for counts in pool.map(_pattern_counts, jobs):
                totals.update(counts)
    else:
        for job in jobs:
            totals.update(_pattern_counts(job))
    expected_total = math.factorial(n - 1) * 2 ** (n - 1)
    if sum(totals.values()) != expected_total:
        raise RuntimeError(f"Enumerated {sum(totals.values())} cases, expected {expected_total}")
    logger.debug("Enumerated %d cases for %s at n=%d", expected_total, statistic, n)
    return ExactDistribution.from_counts(totals, n=n)


def exact_lis_distribution(n: int, workers: int = 1) -> ExactDistribution:
    """
    Exact law of L(n) by full enumeration.

    Args:
        n: Instance size, 2 <= n <= 9; the cost is (n-1)! * 2**(n-1) walks
        workers: Processes to spread the sign patterns over

    Returns:
        The exact law

    Examples:
        >>> exact_lis_distribution(2).mean
        Fraction(3, 2)
    """
    return _enumerate(n, "lis", workers)


def exact_greedy_distribution(n: int, workers: int = 1) -> ExactDistribution:
    """Exact law of the greedy length by full enumeration (2 <= n <= 9)."""
    return _enumerate(n, "greedy", workers)


def recursive_distributions(n_max: int, statistic: str = "lis") -> Dict[int, ExactDistribution]:
    """
    Exact laws for n = 1..n_max from the split at sigma(n).

    Given sigma(n) = k, uniform on 2..n, the two sides are independent copies of the
    size k-1 and n-k+1 laws and the step is up with probability 1/2. The LIS adds the
    sides on an up step and takes their max on a down step; the greedy length keeps
    the larger side on a down step.

    Args:
        n_max: Largest size
        statistic: ``"lis"`` or ``"greedy"``

    Returns:
        Mapping from n to its exact law
    """
    if statistic not in _STATISTICS:
        raise ValueError(f"Unknown statistic: {statistic}")
    if n_max < 1:
        raise ValueError(f"n_max must be at least 1, got {n_max}")
    laws: Dict[int, ExactDistribution] = {1: ExactDistribution.point_mass(1)}
    for n in range(2, n_max + 1):
        pmf: Dict[int, Fraction] = {}
        weight = Fraction(1, 2 * (n - 1))
        for k in range(2, n + 1):
            left, right = laws[k - 1], laws[n - k + 1]
            up = convolve(left, right)
            down = max_law(left, right) if statistic == "lis" else laws[max(k - 1, n - k + 1)]
            for law in (up, down):
                for value, p in law.pmf.items():
                    pmf[value] = pmf.get(value, Fraction(0)) + weight * p
        laws[n] = ExactDistribution(pmf, n=n)
    return laws


def lis_mean_recursion(n: int, laws: Mapping[int, ExactDistribution]) -> Fraction:
    """
    Right-hand side of the exact mean identity for E L(n).

    ``a_n = 1/(2(n-1)) sum_k (a_{k-1} + a_{n-k+1}) + 1/(2(n-1)) sum_k E max{L(k-1), L(n-k+1)}``
    over k = 2..n, with independent copies in the max.

    Args:
        n: Size, at least 2
        laws: Exact laws for every size 1..n-1

    Returns:
        The value the identity assigns to E L(n)
    """
    if n < 2:
        raise ValueError(f"The mean identity needs n >= 2, got {n}")
    weight = Fraction(1, 2 * (n - 1))
    total = Fraction(0)
    for k in range(2, n + 1):
        left, right = laws[k - 1], laws[n - k + 1]
        total += left.mean + right.mean + expected_max(left, right)
    return weight * total


def exact_table(max_n: int, statistic: str = "lis", workers: int = 1) -> List[ExactDistribution]:
    """Enumerated laws for n = 2..max_n."""
    return [_enumerate(n, statistic, workers) for n in range(2, max_n + 1)]


def mean_summary_path(path: Union[str, Path]) -> Path:
    """Location of the ``n,mean`` summary written next to an exact table."""
    path = Path(path)
    return path.with_name(f"{path.stem}_mean{path.suffix or '.csv'}")


def write_exact_csv(laws: Sequence[ExactDistribution], path: Union[str, Path]) -> Path:
    """
    Write exact laws as ``n,value,probability`` rows plus an ``n,mean`` summary.

    Probabilities and means are exact fractions (``1/2``). The summary goes to
    :func:`mean_summary_path`.

    Args:
        laws: Laws with their ``n`` set
        path: Target of the pmf table

    Returns:
        Path of the summary file
    """
    if any(law.n is None for law in laws):
        raise ValueError("Every law needs its n to be written")
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["n", "value", "probability"])
        for law in laws:
            for value, p in law.pmf.items():
                writer.writerow([law.n, value, str(p)])
    summary = mean_summary_path(path)
    with open(summary, "w", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["n", "mean"])
        writer.writerows([law.n, str(law.mean)] for law in laws)
    logger.info("Wrote %d exact laws to %s and means to %s", len(laws), path, summary)
    return summary
