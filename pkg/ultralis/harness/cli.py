"""Command-line entry point.

Exit status: 0 on success, 1 when a check fails, 2 on bad input, I/O errors or a
solver that misses its tolerance.
"""

import argparse
import csv
import json
import logging
import sys
from dataclasses import asdict
from typing import Any, Dict, List, Optional, Sequence

from ultralis import __version__
from ultralis.exact.enumeration import (
    MAX_ENUMERATION_N,
    ExactDistribution,
    exact_table,
    recursive_distributions,
    write_exact_csv,
)
from ultralis.exact.greedy_dp import greedy_mean_dp
from ultralis.harness.checks import SUITE_NAMES, check_suite
from ultralis.harness.config import FORMATS, MODELS, build_config, parse_n_grid
from ultralis.harness.fit import fit_exponent, fit_power_law
from ultralis.harness.logging_setup import configure_logging
from ultralis.harness.sweep import read_table, run_sweep, write_table
from ultralis.numerics.exponents import c_beta, solve_beta0, solve_beta1
from ultralis.numerics.roots import ConvergenceError

logger = logging.getLogger(__name__)


def _emit(payload: Any) -> None:
    json.dump(payload, sys.stdout, indent=2, default=str)
    sys.stdout.write("\n")


def _cmd_constants(args: argparse.Namespace) -> int:
    beta0 = solve_beta0(tol=args.tol, method=args.method)
    beta1 = solve_beta1(tol=max(args.tol, 1e-10), method=args.method)
    _emit({"beta0": asdict(beta0), "beta1": asdict(beta1), "c_beta0": c_beta(beta0.root)})
    return 0


def _cmd_simulate(args: argparse.Namespace) -> int:
    cfg = build_config(
        args.config,
        {
            "model": args.model,
            "alpha": args.alpha,
            "n_grid": parse_n_grid(args.n_grid) if args.n_grid else None,
            "reps": args.reps,
            "seed": args.seed,
            "workers": args.workers,
            "out": args.out,
            "format": args.format,
        },
    )
    rows = run_sweep(cfg)
    if cfg.out:
        write_table(rows, cfg.out, cfg.format)
    else:
        _emit([asdict(row) for row in rows])
    return 0


def _cmd_fit(args: argparse.Namespace) -> int:
    fit = fit_exponent(read_table(args.table), statistic=args.statistic, n_min=args.n_min)
    _emit(asdict(fit))
    return 0


def _cmd_exact(args: argparse.Namespace) -> int:
    laws: List[ExactDistribution]
    if args.method == "enumerate":
        laws = exact_table(args.max_n, args.statistic, workers=args.workers)
    else:
        table = recursive_distributions(args.max_n, args.statistic)
        laws = [table[n] for n in range(2, args.max_n + 1)]
    if args.out:
        write_exact_csv(laws, args.out)
    else:
        _emit(
            [
                {
                    "n": law.n,
                    "mean": str(law.mean),
                    "variance": str(law.variance),
                    "pmf": {str(k): str(p) for k, p in law.pmf.items()},
                }
                for law in laws
            ]
        )
    return 0


def _cmd_greedy_dp(args: argparse.Namespace) -> int:
    if args.low > args.high:
        raise ValueError(f"Empty dyadic range 2^{args.low}..2^{args.high}")
    z = greedy_mean_dp(2**args.high)
    ns = [2**e for e in range(args.low, args.high + 1)]
    values = [float(z[n - 1]) for n in ns]
    if args.out:
        with open(args.out, "w", newline="") as handle:
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(["n", "z"])
            writer.writerows(zip(ns, values))
    payload: Dict[str, Any] = {"n": ns, "z": values}
    if len(ns) >= 4:
        payload["fit"] = asdict(fit_power_law(ns, values))
    _emit(payload)
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    params = {
        "n": args.n,
        "t": args.t,
        "reps": args.reps,
        "seed": args.seed,
        "max_n": args.max_n,
        "alpha": args.alpha,
        "workers": args.workers,
    }
    report = check_suite(args.suite, params)
    _emit(report.to_dict())
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with every subcommand."""
    parser = argparse.ArgumentParser(
        prog="ultralis", description="LIS of heavy-tailed random walks: simulation, exact laws and bounds."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="More logging (repeatable).")
    parser.add_argument("-q", "--quiet", action="count", default=0, help="Less logging.")
    commands = parser.add_subparsers(dest="command", required=True)

    constants = commands.add_parser("constants", help="Solve for the exponent bounds beta0 and beta1.")
    constants.add_argument("--tol", type=float, default=1e-9, help="Root tolerance (default: 1e-9).")
    constants.add_argument("--method", choices=["bisect", "newton"], default="bisect")
    constants.set_defaults(handler=_cmd_constants)

    simulate = commands.add_parser("simulate", help="Monte Carlo sweep over an n grid.")
    simulate.add_argument("--config", help="key = value config file; flags take precedence.")
    simulate.add_argument("--model", choices=MODELS)
    simulate.add_argument("--alpha", type=float, help="Stability index for --model stable.")
    simulate.add_argument("--n-grid", dest="n_grid", help="Comma list or dyadic range such as 2^10..2^20.")
    simulate.add_argument("--reps", type=int, help="Replicas per n.")
    simulate.add_argument("--seed", type=int, help="Master seed.")
    simulate.add_argument("--workers", type=int, help="Worker processes.")
    simulate.add_argument("--out", help="Output table; JSON to stdout when omitted.")
    simulate.add_argument("--format", choices=FORMATS)
    simulate.set_defaults(handler=_cmd_simulate)

    fit = commands.add_parser("fit", help="Fit the growth exponent of a sweep table.")
    fit.add_argument("table", help="CSV or JSON table written by simulate.")
    fit.add_argument("--statistic", choices=["mean", "median", "greedy"], default="mean")
    fit.add_argument("--n-min", dest="n_min", type=int, default=1, help="Ignore rows with smaller n.")
    fit.set_defaults(handler=_cmd_fit)

    exact = commands.add_parser("exact", help="Exact laws of L(n) or of the greedy length.")
    exact.add_argument("--max-n", dest="max_n", type=int, default=8)
    exact.add_argument("--statistic", choices=["lis", "greedy"], default="lis")
    exact.add_argument(
        "--method",
        choices=["enumerate", "recursive"],
        default="enumerate",
        help=f"Full enumeration (n <= {MAX_ENUMERATION_N}) or the split recursion (any n).",
    )
    exact.add_argument("--workers", type=int, default=1)
    exact.add_argument(
        "--out", help="CSV of n,value,probability plus an n,mean summary beside it; JSON to stdout when omitted."
    )
    exact.set_defaults(handler=_cmd_exact)

    greedy = commands.add_parser("greedy-dp", help="Expected greedy lengths and their fitted slope.")
    greedy.add_argument("--low", type=int, default=14, help="Smallest exponent of the dyadic grid.")
    greedy.add_argument("--high", type=int, default=20, help="Largest exponent of the dyadic grid.")
    greedy.add_argument("--out", help="Optional CSV of n,z.")
    greedy.set_defaults(handler=_cmd_greedy_dp)

    check = commands.add_parser("check", help="Run a property suite; exit 1 on any failure.")
    check.add_argument("--suite", choices=SUITE_NAMES, required=True)
    check.add_argument("--n", type=int, help="Walk length.")
    check.add_argument("--t", type=int, help="Horizon for the nbu suite.")
    check.add_argument("--reps", type=int, help="Replicas.")
    check.add_argument("--seed", type=int, help="Master seed.")
    check.add_argument("--max-n", dest="max_n", type=int, help="Largest exact size.")
    check.add_argument("--alpha", type=float, help="Stability index for real-walk checks.")
    check.add_argument("--workers", type=int, help="Worker processes for enumeration.")
    check.set_defaults(handler=_cmd_check)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the command line and return the exit status."""
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose - args.quiet)
    try:
        status: int = args.handler(args)
    except (ValueError, OSError, ConvergenceError) as exc:
        logger.error("%s", exc)
        return 2
    return status


if __name__ == "__main__":
    sys.exit(main())
