"""Power-law exponent fits on log-log axes."""

import logging
from dataclasses import dataclass
from typing import Literal, Sequence, Tuple

import numpy as np
from scipy import stats

from ultralis.harness.sweep import SweepRow

logger = logging.getLogger(__name__)

MIN_FIT_POINTS = 4

Statistic = Literal["mean", "median", "greedy"]


@dataclass(frozen=True)
class ExponentFit:
    """Least-squares fit of log(value) = slope * log(n) + intercept."""

    slope: float
    intercept: float
    stderr: float
    ci95: Tuple[float, float]
    grid: Tuple[Tuple[float, float], ...]

    def contains(self, value: float) -> bool:
        """Whether ``value`` lies inside the 95% interval."""
        return self.ci95[0] <= value <= self.ci95[1]


def fit_power_law(ns: Sequence[float], values: Sequence[float]) -> ExponentFit:
    """
    Ordinary least squares of log(values) on log(ns).

    Args:
        ns: Positive sizes, at least four of them
        values: Positive statistics, one per size

    Returns:
        The fit with a Student-t 95% interval on the slope

    Examples:
        >>> fit_power_law([2, 4, 8, 16], [2**0.7, 4**0.7, 8**0.7, 16**0.7]).slope
        0.7...
    """
    x = np.asarray(ns, dtype=np.float64)
    y = np.asarray(values, dtype=np.float64)
    if x.shape != y.shape:
        raise ValueError(f"Got {x.size} sizes and {y.size} values")
    if x.size < MIN_FIT_POINTS:
        raise ValueError(f"A fit needs at least {MIN_FIT_POINTS} points, got {x.size}")
    if np.any(x <= 0) or np.any(y <= 0):
        raise ValueError("Sizes and values must be positive for a log-log fit")
    result = stats.linregress(np.log(x), np.log(y))
    half_width = float(stats.t.ppf(0.975, x.size - 2)) * float(result.stderr)
    slope = float(result.slope)
    fit = ExponentFit(
        slope=slope,
        intercept=float(result.intercept),
        stderr=float(result.stderr),
        ci95=(slope - half_width, slope + half_width),
        grid=tuple((float(a), float(b)) for a, b in zip(x, y)),
    )
    logger.info("Fitted exponent %.4f (95%% CI %.4f..%.4f)", slope, *fit.ci95)
    return fit


def fit_exponent(rows: Sequence[SweepRow], statistic: Statistic = "mean", n_min: int = 1) -> ExponentFit:
    """
    Fit the growth exponent of a sweep table.

    Args:
        rows: Sweep rows, one per n
        statistic: ``"mean"``, ``"median"`` or ``"greedy"``
        n_min: Ignore rows with n below this cutoff

    Returns:
        The fit over the retained rows
    """
    kept = [row for row in rows if row.n >= n_min]
    if statistic == "mean":
        values = [row.mean_L for row in kept]
    elif statistic == "median":
        values = [row.median_L for row in kept]
    elif statistic == "greedy":
        values = [row.mean_greedy for row in kept if row.mean_greedy is not None]
        if len(values) != len(kept):
            raise ValueError("Greedy fit needs a table with greedy means")
    else:
        raise ValueError(f"Unknown statistic: {statistic}")
    return fit_power_law([row.n for row in kept], values)
