"""LIS engine: patience sorting, first passage, greedy subsequence, structural checks."""

from ultralis.lis.greedy import greedy_length
from ultralis.lis.patience import (
    FirstPassage,
    LisResult,
    brute_force_lis,
    first_passage,
    lis_dp,
    lis_length,
    lis_trajectory,
)
from ultralis.lis.structure import (
    InequalityCheck,
    SplitCheck,
    lis_subinterval,
    verify_block_bound,
    verify_split_recursion,
    verify_subadditivity,
    verify_superadditivity,
)

__all__ = [
    "FirstPassage",
    "InequalityCheck",
    "LisResult",
    "SplitCheck",
    "brute_force_lis",
    "first_passage",
    "greedy_length",
    "lis_dp",
    "lis_length",
    "lis_subinterval",
    "lis_trajectory",
    "verify_block_bound",
    "verify_split_recursion",
    "verify_subadditivity",
    "verify_superadditivity",
]
