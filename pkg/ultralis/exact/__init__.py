"""Exact small-n laws, greedy expectation DP and NBU inequality checks."""

from ultralis.exact.enumeration import (
    MAX_ENUMERATION_N,
    ExactDistribution,
    convolve,
    exact_greedy_distribution,
    exact_lis_distribution,
    exact_table,
    expected_max,
    expected_min,
    lis_mean_recursion,
    max_law,
    mean_summary_path,
    recursive_distributions,
    write_exact_csv,
)
from ultralis.exact.greedy_dp import greedy_mean_dp
from ultralis.exact.nbu import (
    BoundReport,
    NbuReport,
    TailSums,
    check_block_tail,
    check_convex_domination,
    check_min_bound,
    check_quantile_bound,
    check_tail_domination,
    empirical_nbu_check,
    geometric_expectation,
    geometric_min_mean,
    is_nbu,
    min_nbu_bound,
)

__all__ = [
    "MAX_ENUMERATION_N",
    "BoundReport",
    "ExactDistribution",
    "NbuReport",
    "TailSums",
    "check_block_tail",
    "check_convex_domination",
    "check_min_bound",
    "check_quantile_bound",
    "check_tail_domination",
    "convolve",
    "empirical_nbu_check",
    "exact_greedy_distribution",
    "exact_lis_distribution",
    "exact_table",
    "expected_max",
    "expected_min",
    "geometric_expectation",
    "geometric_min_mean",
    "greedy_mean_dp",
    "is_nbu",
    "lis_mean_recursion",
    "max_law",
    "mean_summary_path",
    "min_nbu_bound",
    "recursive_distributions",
    "write_exact_csv",
]
