"""Quadrature class module."""

import logging
from typing import Callable, Optional

from scipy import integrate

from ultralis.numerics.roots import ConvergenceError

logger = logging.getLogger(__name__)


class Quadrature:
    """Class-based interface for adaptive Gauss-Kronrod integration."""

    def __init__(
        self,
        func: Callable[[float], float],
        tol: float = 1e-10,
        limit: int = 200,
    ) -> None:
        """
        Initialize a Quadrature calculator for a function.

        The rule never evaluates the interval endpoints, so integrands that are only
        defined on the open interval are fine.

        Args:
            func: The function to integrate
            tol: Absolute and relative error target
            limit: Maximum number of subintervals

        Examples:
            >>> def f(x): return x**2
            >>> Quadrature(f).between(0, 1)
            0.333...
        """
        if tol <= 0:
            raise ValueError(f"Quadrature tolerance must be positive, got {tol}")
        self.func = func
        self.tol = tol
        self.limit = limit
        self.error_estimate: Optional[float] = None

    def between(self, a: float, b: float) -> float:
        """
        Calculate the definite integral between two bounds.

        Args:
            a: Lower bound
            b: Upper bound

        Returns:
            The integral value

        Raises:
            ConvergenceError: If the error target is not met within ``limit`` subintervals
        """
        result = integrate.quad(
            self.func, a, b, epsabs=self.tol, epsrel=self.tol, limit=self.limit, full_output=1
        )
        value, error = result[0], result[1]
        if len(result) > 3:
            raise ConvergenceError(f"Quadrature on [{a}, {b}] did not converge: {result[3]}")
        self.error_estimate = float(error)
        logger.debug("Integral on [%g, %g] = %.15g (error %.2e)", a, b, value, error)
        return float(value)
