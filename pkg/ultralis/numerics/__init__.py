"""Numerical solvers for the exponent bounds."""

from ultralis.numerics.exponents import (
    BETA0_DECIMAL,
    BETA0_DECIMAL_TOL,
    BETA1_DECIMAL,
    c_beta,
    c_beta_quadrature,
    iterate_lower_recursion,
    reverse_riemann_sum,
    solve_beta0,
    solve_beta1,
    upper_functional,
)
from ultralis.numerics.quadrature import Quadrature
from ultralis.numerics.roots import ConvergenceError, RootFinder, RootResult

__all__ = [
    "BETA0_DECIMAL",
    "BETA0_DECIMAL_TOL",
    "BETA1_DECIMAL",
    "ConvergenceError",
    "Quadrature",
    "RootFinder",
    "RootResult",
    "c_beta",
    "c_beta_quadrature",
    "iterate_lower_recursion",
    "reverse_riemann_sum",
    "solve_beta0",
    "solve_beta1",
    "upper_functional",
]
