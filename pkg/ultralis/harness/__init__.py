"""Experiment harness: configuration, sweeps, exponent fits and property suites."""

from ultralis.harness.checks import SUITE_NAMES, CheckResult, SuiteReport, check_suite
from ultralis.harness.config import ExperimentConfig, build_config, load_config_file, parse_n_grid
from ultralis.harness.fit import ExponentFit, fit_exponent, fit_power_law
from ultralis.harness.logging_setup import configure_logging
from ultralis.harness.sweep import (
    Summary,
    SweepRow,
    read_table,
    run_sweep,
    sample_lengths,
    summarize,
    write_table,
)

__all__ = [
    "SUITE_NAMES",
    "CheckResult",
    "ExperimentConfig",
    "ExponentFit",
    "Summary",
    "SuiteReport",
    "SweepRow",
    "build_config",
    "check_suite",
    "configure_logging",
    "fit_exponent",
    "fit_power_law",
    "load_config_file",
    "parse_n_grid",
    "read_table",
    "run_sweep",
    "sample_lengths",
    "summarize",
    "write_table",
]
