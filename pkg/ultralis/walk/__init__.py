"""Walk models: ultra-fat, symmetric stable and Gaussian."""

from ultralis.walk.rng import StreamFactory, as_generator
from ultralis.walk.sparse_table import SparseTable
from ultralis.walk.stable_walk import (
    RealWalkSample,
    dominant_up_frequency,
    sample_gaussian,
    sample_stable,
    tail_dominance,
)
from ultralis.walk.ultrafat_walk import SplitPoint, WalkSample, sample_ultrafat

__all__ = [
    "RealWalkSample",
    "SparseTable",
    "SplitPoint",
    "StreamFactory",
    "WalkSample",
    "as_generator",
    "dominant_up_frequency",
    "sample_gaussian",
    "sample_stable",
    "sample_ultrafat",
    "tail_dominance",
]
