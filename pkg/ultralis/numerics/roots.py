"""Root finding class module."""

import logging
from dataclasses import dataclass
from typing import Callable, Literal, Optional, Tuple

from scipy import optimize

logger = logging.getLogger(__name__)

RootMethod = Literal["bisect", "newton"]


class ConvergenceError(RuntimeError):
    """A numerical routine missed its tolerance within its iteration budget."""


@dataclass(frozen=True)
class RootResult:
    """A bracketed root with its residual."""

    root: float
    residual: float
    bracket: Tuple[float, float]
    iterations: int
    method: str


class RootFinder:
    """Class-based interface for finding a sign change of a scalar function."""

    def __init__(
        self,
        func: Callable[[float], float],
        fprime: Optional[Callable[[float], float]] = None,
        maxiter: int = 200,
    ) -> None:
        """
        Initialize a RootFinder for a function.

        Args:
            func: Continuous function with a sign change on the bracket
            fprime: Derivative for Newton steps; secant steps are used without it
            maxiter: Iteration cap

        Examples:
            >>> RootFinder(lambda x: x * x - 2).solve((0.0, 2.0), tol=1e-12).root
            1.41421356...
        """
        self.func = func
        self.fprime = fprime
        self.maxiter = maxiter

    def _check_bracket(self, bracket: Tuple[float, float]) -> None:
        lo, hi = bracket
        if not lo < hi:
            raise ValueError(f"Bracket must satisfy lo < hi, got {bracket}")
        if self.func(lo) * self.func(hi) > 0:
            raise ValueError(f"No sign change on {bracket}")

    def bisect(self, bracket: Tuple[float, float], tol: float) -> RootResult:
        """
        Plain bisection.

        Args:
            bracket: Interval with a sign change
            tol: Target for both the bracket width and the residual

        Returns:
            The root
        """
        self._check_bracket(bracket)
        root, info = optimize.bisect(
            self.func, *bracket, xtol=tol / 10, maxiter=self.maxiter, full_output=True, disp=False
        )
        if not info.converged:
            raise ConvergenceError(f"Bisection on {bracket} stopped after {info.iterations} steps")
        return self._finish(root, bracket, info.iterations, "bisect", tol)

    def newton(self, bracket: Tuple[float, float], tol: float) -> RootResult:
        """
        Newton (or secant) iteration from the bracket midpoint.

        Falls back to Brent's method when the iteration fails or leaves the bracket.

        Args:
            bracket: Interval with a sign change
            tol: Target for both the step size and the residual

        Returns:
            The root
        """
        self._check_bracket(bracket)
        lo, hi = bracket
        root, info = optimize.newton(
            self.func,
            0.5 * (lo + hi),
            fprime=self.fprime,
            tol=tol / 10,
            maxiter=self.maxiter,
            full_output=True,
            disp=False,
        )
        if info.converged and lo <= root <= hi:
            return self._finish(root, bracket, info.iterations, "newton", tol)
        logger.debug("Newton left %s or stalled; falling back to Brent", bracket)
        root, info = optimize.brentq(
            self.func, lo, hi, xtol=tol / 10, maxiter=self.maxiter, full_output=True, disp=False
        )
        if not info.converged:
            raise ConvergenceError(f"Brent fallback on {bracket} did not converge")
        return self._finish(root, bracket, info.iterations, "brent", tol)

    def solve(
        self, bracket: Tuple[float, float], tol: float, method: RootMethod = "bisect"
    ) -> RootResult:
        """Dispatch to :meth:`bisect` or :meth:`newton`."""
        if tol <= 0:
            raise ValueError(f"Tolerance must be positive, got {tol}")
        if method == "bisect":
            return self.bisect(bracket, tol)
        elif method == "newton":
            return self.newton(bracket, tol)
        else:
            raise ValueError(f"Unknown method: {method}")

    def _finish(
        self, root: float, bracket: Tuple[float, float], iterations: int, method: str, tol: float
    ) -> RootResult:
        residual = abs(self.func(root))
        if residual >= tol:
            raise ConvergenceError(f"Residual {residual:.3e} at {root} exceeds tolerance {tol}")
        logger.debug("%s root %.12f after %d iterations", method, root, iterations)
        return RootResult(
            root=float(root),
            residual=float(residual),
            bracket=(float(bracket[0]), float(bracket[1])),
            iterations=int(iterations),
            method=method,
        )
