"""Monte Carlo sweeps over an n grid.

Each (n, replica) task draws from its own stream keyed by ``(seed, n, replica)``, so
the table depends only on the configuration, never on the worker count.
"""

import csv
import json
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Any, List, Optional, Sequence, Tuple, Union

import numpy as np

from ultralis.harness.config import ExperimentConfig
from ultralis.lis.greedy import greedy_length
from ultralis.lis.patience import lis_length
from ultralis.walk.stable_walk import sample_gaussian, sample_stable
from ultralis.walk.ultrafat_walk import sample_ultrafat

logger = logging.getLogger(__name__)

COLUMNS = ("model", "alpha", "n", "replicas", "mean_L", "median_L", "var_L", "mean_greedy", "seed")

Task = Tuple[str, Optional[float], int, int, int]


@dataclass(frozen=True)
class Summary:
    """Mean, median, variance and standard error of a sample."""

    mean: float
    median: float
    variance: float
    stderr: float


@dataclass(frozen=True)
class SweepRow:
    """One persisted row of a sweep table."""

    model: str
    alpha: Optional[float]
    n: int
    replicas: int
    mean_L: float
    median_L: float
    var_L: float
    mean_greedy: Optional[float]
    seed: int


def summarize(values: Sequence[float]) -> Summary:
    """
    Summary statistics of a non-empty sample.

    The variance is the unbiased one; a single value gives variance 0.

    Examples:
        >>> summarize([1, 2, 3]).median
        2.0
    """
    data = np.asarray(values, dtype=np.float64)
    if data.size == 0:
        raise ValueError("Cannot summarize an empty sample")
    variance = float(data.var(ddof=1)) if data.size > 1 else 0.0
    return Summary(
        mean=float(data.mean()),
        median=float(np.median(data)),
        variance=variance,
        stderr=math.sqrt(variance / data.size),
    )


def simulate_replica(task: Task) -> Tuple[int, Optional[int]]:
    """
    Run one replica and return its LIS length and greedy length.

    The greedy length is only defined for ultra-fat walks and is None otherwise.
    """
    model, alpha, n, replica, seed = task
    key = (seed, n, replica)
    if model == "ultrafat":
        walk = sample_ultrafat(n, seed=key)
        return lis_length(walk), greedy_length(walk)
    if model == "stable":
        if alpha is None:
            raise ValueError("Stable model needs alpha")
        return lis_length(sample_stable(n, alpha, seed=key)), None
    if model == "gaussian":
        return lis_length(sample_gaussian(n, seed=key)), None
    raise ValueError(f"Unknown model: {model}")


def _tasks(cfg: ExperimentConfig) -> List[Task]:
    return [
        (cfg.model, cfg.alpha, n, replica, cfg.seed)
        for n in cfg.n_grid
        for replica in range(cfg.reps)
    ]


def run_sweep(cfg: ExperimentConfig) -> List[SweepRow]:
    """
    Simulate ``cfg.reps`` walks at every n of the grid.

    Args:
        cfg: Validated configuration

    Returns:
        One row per n, in grid order
    """
    tasks = _tasks(cfg)
    logger.info(
        "Sweeping %s over %d sizes x %d replicas on %d worker(s)",
        cfg.model,
        len(cfg.n_grid),
        cfg.reps,
        cfg.workers,
    )
    outcomes: List[Tuple[int, Optional[int]]]
    if cfg.workers > 1:
        chunksize = max(1, len(tasks) // (cfg.workers * 8))
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            # map keeps task order, so the fold below is scheduling independent
            outcomes = list(pool.map(simulate_replica, tasks, chunksize=chunksize))
    else:
        outcomes = [simulate_replica(task) for task in tasks]

    rows: List[SweepRow] = []
    for index, n in enumerate(cfg.n_grid):
        block = outcomes[index * cfg.reps : (index + 1) * cfg.reps]
        stats = summarize([lis for lis, _ in block])
        greedy = [g for _, g in block if g is not None]
        rows.append(
            SweepRow(
                model=cfg.model,
                alpha=cfg.alpha,
                n=n,
                replicas=cfg.reps,
                mean_L=stats.mean,
                median_L=stats.median,
                var_L=stats.variance,
                mean_greedy=float(np.mean(greedy)) if greedy else None,
                seed=cfg.seed,
            )
        )
        logger.debug("n=%d: mean L %.4f (se %.4f)", n, stats.mean, stats.stderr)
    return rows


def sample_lengths(
    model: str, n: int, reps: int, seed: int, alpha: Optional[float] = None
) -> "np.ndarray[Any, Any]":
    """Raw LIS lengths of ``reps`` replicas at one n, keyed like :func:`run_sweep`."""
    return np.array(
        [simulate_replica((model, alpha, n, replica, seed))[0] for replica in range(reps)],
        dtype=np.int64,
    )


def _format(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def write_table(rows: Sequence[SweepRow], path: Union[str, Path], fmt: str = "csv") -> None:
    """
    Persist a sweep table.

    Args:
        rows: Table rows
        path: Output file
        fmt: ``"csv"`` or ``"json"``
    """
    if fmt == "csv":
        with open(path, "w", newline="") as handle:
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(COLUMNS)
            for row in rows:
                record = asdict(row)
                writer.writerow([_format(record[column]) for column in COLUMNS])
    elif fmt == "json":
        with open(path, "w") as handle:
            json.dump([asdict(row) for row in rows], handle, indent=2)
            handle.write("\n")
    else:
        raise ValueError(f"Unknown format: {fmt}")
    logger.info("Wrote %d rows to %s", len(rows), path)


def _optional_float(text: str) -> Optional[float]:
    return float(text) if text else None


def read_table(path: Union[str, Path]) -> List[SweepRow]:
    """
    Load a table written by :func:`write_table`; the format follows the file suffix.

    Raises:
        ValueError: If a column is missing
    """
    path = Path(path)
    if path.suffix == ".json":
        with open(path) as handle:
            return [SweepRow(**record) for record in json.load(handle)]
    with open(path, newline="") as handle:
        reader = csv.DictReader(handle)
        missing = set(COLUMNS) - set(reader.fieldnames or ())
        if missing:
            raise ValueError(f"{path} lacks columns {sorted(missing)}")
        return [
            SweepRow(
                model=record["model"],
                alpha=_optional_float(record["alpha"]),
                n=int(record["n"]),
                replicas=int(record["replicas"]),
                mean_L=float(record["mean_L"]),
                median_L=float(record["median_L"]),
                var_L=float(record["var_L"]),
                mean_greedy=_optional_float(record["mean_greedy"]),
                seed=int(record["seed"]),
            )
            for record in reader
        ]
