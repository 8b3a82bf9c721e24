"""Property suites with machine-readable reports.

Every suite returns a :class:`SuiteReport`; the command line prints it as JSON and
exits non-zero when any check fails.
"""

import logging
import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, List, Mapping, Optional

import numpy as np

from ultralis.exact.enumeration import (
    MAX_ENUMERATION_N,
    exact_greedy_distribution,
    exact_lis_distribution,
    lis_mean_recursion,
    recursive_distributions,
)
from ultralis.exact.greedy_dp import greedy_mean_dp
from ultralis.exact.nbu import (
    check_block_tail,
    check_convex_domination,
    check_min_bound,
    check_quantile_bound,
    check_tail_domination,
    empirical_nbu_check,
    geometric_min_mean,
    is_nbu,
    min_nbu_bound,
)
from ultralis.harness.fit import fit_power_law
from ultralis.harness.sweep import sample_lengths, summarize
from ultralis.lis.structure import (
    verify_block_bound,
    verify_split_recursion,
    verify_subadditivity,
    verify_superadditivity,
)
from ultralis.numerics.exponents import (
    BETA0_DECIMAL,
    BETA0_DECIMAL_TOL,
    BETA1_DECIMAL,
    beta0_equation,
    c_beta,
    c_beta_quadrature,
    solve_beta0,
    solve_beta1,
)
from ultralis.walk.rng import StreamFactory
from ultralis.walk.stable_walk import sample_stable, tail_dominance
from ultralis.walk.ultrafat_walk import sample_ultrafat

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one named check."""

    name: str
    passed: bool
    detail: Dict[str, Any] = field(default_factory=dict)


@dataclass
class SuiteReport:
    """All checks of one suite."""

    suite: str
    params: Dict[str, Any]
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        """True when every check passed."""
        return all(check.passed for check in self.checks)

    def add(self, name: str, passed: bool, **detail: Any) -> None:
        self.checks.append(CheckResult(name=name, passed=bool(passed), detail=detail))
        if not passed:
            logger.warning("Check %s failed: %s", name, detail)

    def to_dict(self) -> Dict[str, Any]:
        """JSON-compatible form."""
        return {
            "suite": self.suite,
            "passed": self.passed,
            "params": self.params,
            "checks": [asdict(check) for check in self.checks],
        }


def _constants(report: SuiteReport) -> None:
    residual_tol, tol1 = report.params["residual_tol"], report.params["tol1"]
    for method in ("bisect", "newton"):
        root = solve_beta0(method=method).root
        report.add(f"beta0_{method}_residual", abs(beta0_equation(root)) < residual_tol, value=root)
    beta0 = solve_beta0().root
    report.add("beta0_c_beta_one", abs(c_beta(beta0) - 1.0) < residual_tol, c_beta=c_beta(beta0))
    report.add(
        "beta0_published_decimal",
        abs(beta0 - BETA0_DECIMAL) < BETA0_DECIMAL_TOL,
        value=beta0,
        published=BETA0_DECIMAL,
        tol=BETA0_DECIMAL_TOL,
    )
    via_c = solve_beta0(formulation="c_beta").root
    report.add("beta0_c_beta_form", abs(via_c - beta0) < residual_tol, value=via_c)
    beta1 = solve_beta1().root
    report.add("beta1", abs(beta1 - BETA1_DECIMAL) < tol1, value=beta1)
    report.add("beta0_below_beta1", beta0 < beta1, beta0=beta0, beta1=beta1)
    for beta in (0.0, 0.5, 1.0):
        closed, integral = c_beta(beta), c_beta_quadrature(beta)
        report.add(f"c_beta_{beta}", abs(closed - integral) < 1e-10, closed=closed, quadrature=integral)


def _recursion(report: SuiteReport) -> None:
    n, reps, seed = report.params["n"], report.params["reps"], report.params["seed"]
    violations = 0
    for replica in range(reps):
        violations += not verify_split_recursion(sample_ultrafat(n, seed=(seed, n, replica))).passed
    report.add("ultrafat_split_identity", violations == 0, n=n, reps=reps, violations=violations)

    alpha = report.params["alpha"]
    outside = dominant_failures = dominant = 0
    for replica in range(reps):
        walk = sample_stable(n, alpha, seed=(seed, n, replica))
        check = verify_split_recursion(walk)
        outside += not check.within_bounds
        if walk.dominant_step():
            dominant += 1
            dominant_failures += not check.passed
    report.add("stable_split_bounds", outside == 0, alpha=alpha, violations=outside)
    report.add(
        "stable_dominant_split_identity",
        dominant_failures == 0,
        alpha=alpha,
        dominant=dominant,
        violations=dominant_failures,
    )


def _subadd(report: SuiteReport) -> None:
    n, reps, seed = report.params["n"], report.params["reps"], report.params["seed"]
    if n < 2:
        raise ValueError(f"subadd suite needs n >= 2, got {n}")
    streams = StreamFactory(seed)
    sub = sup = block = 0
    for replica in range(reps):
        walk = sample_ultrafat(n, seed=(seed, n, replica))
        rng = streams.generator(n, replica, 1)
        s = int(rng.integers(1, n))
        sub += not verify_subadditivity(walk, s, n - s).passed
        ell, m = (int(v) for v in rng.integers(1, max(2, int(math.sqrt(n))) + 1, size=2))
        sup += not verify_superadditivity(walk, ell, m).passed
        block += not verify_block_bound(walk, 2, n // 2).passed
    report.add("subadditivity", sub == 0, n=n, reps=reps, violations=sub)
    report.add("superadditivity", sup == 0, n=n, reps=reps, violations=sup)
    report.add("block_bound", block == 0, n=n, reps=reps, violations=block)


def _domination(report: SuiteReport) -> None:
    max_n = report.params["max_n"]
    laws = recursive_distributions(max_n)
    for n in range(1, max_n + 1):
        law = laws[n]
        report.add(f"nbu_{n}", is_nbu(law))
        tail = check_tail_domination(law)
        report.add(f"tail_domination_{n}", tail.passed, gap=tail.gap)
        convex = check_convex_domination(law, lambda k: float(k * k))
        report.add(f"convex_domination_{n}", convex.passed, lhs=convex.lhs, rhs=convex.rhs)
        for q in range(1, law.support_max + 2):
            quantile = check_quantile_bound(law, q)
            report.add(f"quantile_bound_{n}_q{q}", quantile.passed, lhs=quantile.lhs, rhs=quantile.rhs)
    for n in range(1, max_n + 1):
        for m in range(n, max_n + 1):
            bound = check_min_bound(laws[n], laws[m])
            report.add(f"min_bound_{n}_{m}", bound.passed, bound=bound.lhs, value=bound.rhs)
    for a, b in ((Fraction(1), Fraction(1)), (Fraction(3, 2), Fraction(2)), (Fraction(5), Fraction(1, 3))):
        report.add(
            f"geometric_min_equality_{a}_{b}",
            geometric_min_mean(a, b) == min_nbu_bound(a, b),
            value=str(geometric_min_mean(a, b)),
        )
    for k in range(1, max_n // 2 + 1):
        for x in range(1, laws[2 * k].support_max + 2):
            block = check_block_tail(laws[k], laws[2 * k], 2, x)
            report.add(f"block_tail_{k}_x{x}", block.passed, lhs=block.lhs, rhs=block.rhs)


def _nbu(report: SuiteReport) -> None:
    t, reps, seed = report.params["t"], report.params["reps"], report.params["seed"]
    lengths = sample_lengths("ultrafat", t, reps, seed)
    top = int(np.median(lengths))
    for a in range(1, top + 1):
        for b in range(a, top + 1):
            result = empirical_nbu_check(lengths, a, b, min_samples=report.params["min_samples"])
            report.add(f"nbu_t{t}_a{a}_b{b}", result.passed, difference=result.difference, z=result.z)


def _exact(report: SuiteReport) -> None:
    max_n = min(report.params["max_n"], MAX_ENUMERATION_N)
    reps, seed = report.params["reps"], report.params["seed"]
    workers = report.params["workers"]
    lis_laws = recursive_distributions(max_n, "lis")
    greedy_laws = recursive_distributions(max_n, "greedy")
    dp = greedy_mean_dp(max_n, exact=True)
    for n in range(2, max_n + 1):
        enumerated = exact_lis_distribution(n, workers=workers)
        report.add(f"lis_enumeration_vs_recursion_{n}", enumerated.pmf == lis_laws[n].pmf)
        greedy = exact_greedy_distribution(n, workers=workers)
        report.add(f"greedy_enumeration_vs_recursion_{n}", greedy.pmf == greedy_laws[n].pmf)
        report.add(f"greedy_dp_mean_{n}", greedy.mean == dp[n - 1], mean=str(greedy.mean))
        identity = lis_mean_recursion(n, lis_laws)
        report.add(f"mean_identity_{n}", identity == enumerated.mean, mean=str(enumerated.mean))
        stats = summarize(sample_lengths("ultrafat", n, reps, seed))
        exact_mean = float(enumerated.mean)
        z = (stats.mean - exact_mean) / stats.stderr if stats.stderr > 0 else 0.0
        report.add(f"monte_carlo_mean_{n}", abs(z) <= 3.0, exact=exact_mean, sampled=stats.mean, z=z)


def _greedy(report: SuiteReport) -> None:
    low, high = report.params["low"], report.params["high"]
    z = greedy_mean_dp(2**high)
    ns = [2**e for e in range(low, high + 1)]
    fit = fit_power_law(ns, [z[n - 1] for n in ns])
    band = report.params["band"]
    report.add("greedy_slope", abs(fit.slope - BETA0_DECIMAL) <= band, slope=fit.slope, band=band)
    small = greedy_mean_dp(3, exact=True)
    report.add("greedy_small_values", small == [1, Fraction(3, 2), 2], values=[str(v) for v in small])


def _tail(report: SuiteReport) -> None:
    n, reps, seed = report.params["n"], report.params["reps"], report.params["seed"]
    alphas = report.params["alphas"]
    frequencies = []
    for alpha in alphas:
        samples = [sample_stable(n, alpha, seed=(seed, n, replica)) for replica in range(reps)]
        frequencies.append(tail_dominance(samples, n))
    decreasing = all(b < a for a, b in zip(frequencies, frequencies[1:]))
    report.add("tail_dominance_decreasing", decreasing, alphas=list(alphas), frequencies=frequencies)


_SUITES: Dict[str, Callable[[SuiteReport], None]] = {
    "constants": _constants,
    "recursion": _recursion,
    "subadd": _subadd,
    "domination": _domination,
    "nbu": _nbu,
    "exact": _exact,
    "greedy": _greedy,
    "tail": _tail,
}

DEFAULTS: Dict[str, Dict[str, Any]] = {
    "constants": {"residual_tol": 1e-9, "tol1": 1e-5},
    "recursion": {"n": 100, "reps": 1000, "seed": 0, "alpha": 1.0},
    "subadd": {"n": 100, "reps": 1000, "seed": 0},
    "domination": {"max_n": 8},
    "nbu": {"t": 64, "reps": 100_000, "seed": 0, "min_samples": 10_000},
    "exact": {"max_n": 6, "reps": 10_000, "seed": 0, "workers": 1},
    "greedy": {"low": 14, "high": 20, "band": 0.02},
    "tail": {"n": 100, "reps": 10_000, "seed": 0, "alphas": (0.25, 1.0, 2.0)},
}

SUITE_NAMES = tuple(_SUITES)


def check_suite(name: str, params: Optional[Mapping[str, Any]] = None) -> SuiteReport:
    """
    Run a named property suite.

    Args:
        name: One of :data:`SUITE_NAMES`
        params: Overrides for the suite's defaults; unknown keys are ignored

    Returns:
        The report

    Raises:
        ValueError: For an unknown suite
    """
    if name not in _SUITES:
        raise ValueError(f"Unknown suite: {name}")
    merged = dict(DEFAULTS[name])
    merged.update({key: value for key, value in (params or {}).items() if key in merged and value is not None})
    report = SuiteReport(suite=name, params=merged)
    logger.info("Running suite %s with %s", name, merged)
    _SUITES[name](report)
    logger.info("Suite %s: %d checks, %s", name, len(report.checks), "pass" if report.passed else "FAIL")
    return report
