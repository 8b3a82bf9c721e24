"""ultralis - Longest increasing subsequences of heavy-tailed random walks.

Package Structure:
    - ordered_space: Lexicographically ordered module of formal combinations
    - walk: Ultra-fat, symmetric stable and Gaussian walks
    - lis: Patience sorting, greedy subsequence and structural checks
    - exact: Exact small-n laws, greedy expectation DP and NBU inequalities
    - numerics: Quadrature, root finding and the exponent bounds
    - harness: Configuration, Monte Carlo sweeps, exponent fits and the CLI
"""

__version__ = "0.1.0"

# Core objects - Class-based API
from ultralis.exact.enumeration import ExactDistribution
from ultralis.harness.config import ExperimentConfig
from ultralis.lis.patience import LisResult
from ultralis.numerics.quadrature import Quadrature
from ultralis.numerics.roots import ConvergenceError, RootFinder
from ultralis.ordered_space.ultra_element import UltraElement
from ultralis.walk.stable_walk import RealWalkSample
from ultralis.walk.ultrafat_walk import WalkSample

__all__ = [
    # Core - Classes
    "UltraElement",
    "WalkSample",
    "RealWalkSample",
    "LisResult",
    "ExactDistribution",
    "Quadrature",
    "RootFinder",
    "ConvergenceError",
    "ExperimentConfig",
]
