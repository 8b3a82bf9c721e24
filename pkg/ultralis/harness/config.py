"""Experiment configuration.

Config files are ``key = value`` lines; ``#`` starts a comment. Values from a file
override the defaults and command-line flags override the file.
"""

import logging
import re
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Tuple, Union

logger = logging.getLogger(__name__)

MODELS = ("ultrafat", "stable", "gaussian")
FORMATS = ("csv", "json")

_DYADIC = re.compile(r"^\s*2\^(\d+)\s*\.\.\s*2\^(\d+)\s*$")


def parse_n_grid(text: str) -> Tuple[int, ...]:
    """
    Parse an n grid.

    Args:
        text: Comma-separated integers, or a dyadic range ``2^a..2^b``

    Returns:
        The grid as a tuple

    Examples:
        >>> parse_n_grid("2^3..2^5")
        (8, 16, 32)
        >>> parse_n_grid("10, 100")
        (10, 100)
    """
    match = _DYADIC.match(text)
    if match:
        low, high = int(match.group(1)), int(match.group(2))
        if low > high:
            raise ValueError(f"Empty dyadic range: {text}")
        return tuple(2**e for e in range(low, high + 1))
    try:
        return tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError:
        raise ValueError(f"Cannot parse n grid: {text!r}") from None


@dataclass(frozen=True)
class ExperimentConfig:
    """Parameters of one Monte Carlo sweep."""

    model: str = "ultrafat"
    alpha: Optional[float] = None
    n_grid: Tuple[int, ...] = tuple(2**e for e in range(10, 15))
    reps: int = 200
    seed: int = 0
    workers: int = 1
    out: Optional[str] = None
    format: str = "csv"

    def __post_init__(self) -> None:
        if self.model not in MODELS:
            raise ValueError(f"Unknown model: {self.model}")
        if self.model == "stable":
            if self.alpha is None or not 0.0 < self.alpha <= 2.0:
                raise ValueError(f"Stable model needs alpha in (0, 2], got {self.alpha}")
        elif self.alpha is not None:
            logger.warning("alpha=%s ignored for model %s", self.alpha, self.model)
            object.__setattr__(self, "alpha", None)
        object.__setattr__(self, "n_grid", tuple(int(n) for n in self.n_grid))
        if not self.n_grid:
            raise ValueError("n grid must not be empty")
        if self.n_grid[0] < 1:
            raise ValueError(f"n grid entries must be positive, got {self.n_grid[0]}")
        if any(b <= a for a, b in zip(self.n_grid, self.n_grid[1:])):
            raise ValueError(f"n grid must be strictly increasing: {self.n_grid}")
        if self.reps < 1:
            raise ValueError(f"reps must be at least 1, got {self.reps}")
        if self.seed < 0:
            raise ValueError(f"seed must be non-negative, got {self.seed}")
        if self.workers < 1:
            raise ValueError(f"workers must be at least 1, got {self.workers}")
        if self.format not in FORMATS:
            raise ValueError(f"Unknown format: {self.format}")

    def with_overrides(self, overrides: Mapping[str, Any]) -> "ExperimentConfig":
        """Return a copy with every non-None override applied."""
        known = {f.name for f in fields(self)}
        unknown = set(overrides) - known
        if unknown:
            raise ValueError(f"Unknown config keys: {sorted(unknown)}")
        changes = {key: value for key, value in overrides.items() if value is not None}
        return replace(self, **changes)


def _convert(key: str, raw: str) -> Any:
    if key == "n_grid":
        return parse_n_grid(raw)
    if key == "alpha":
        return None if raw.lower() in ("", "none") else float(raw)
    if key in ("reps", "seed", "workers"):
        return int(raw)
    if key == "out":
        return raw or None
    return raw


def load_config_file(path: Union[str, Path]) -> Dict[str, Any]:
    """
    Read a ``key = value`` config file.

    Args:
        path: File to read

    Returns:
        Typed values keyed by config field name

    Raises:
        ValueError: On a malformed line or an unknown key
    """
    known = {f.name for f in fields(ExperimentConfig)}
    values: Dict[str, Any] = {}
    with open(path) as handle:
        for number, line in enumerate(handle, start=1):
            body = line.split("#", 1)[0].strip()
            if not body:
                continue
            if "=" not in body:
                raise ValueError(f"{path}:{number}: expected key = value, got {body!r}")
            key, raw = (part.strip() for part in body.split("=", 1))
            key = key.replace("-", "_")
            if key not in known:
                raise ValueError(f"{path}:{number}: unknown key {key!r}")
            try:
                values[key] = _convert(key, raw)
            except ValueError as exc:
                raise ValueError(f"{path}:{number}: {exc}") from None
    logger.debug("Loaded %d settings from %s", len(values), path)
    return values


def build_config(
    file_path: Optional[Union[str, Path]] = None, overrides: Optional[Mapping[str, Any]] = None
) -> ExperimentConfig:
    """Combine defaults, an optional config file and flag overrides, in that order."""
    merged: Dict[str, Any] = {}
    if file_path is not None:
        merged.update(load_config_file(file_path))
    if overrides:
        merged.update({key: value for key, value in overrides.items() if value is not None})
    return ExperimentConfig().with_overrides(merged)
