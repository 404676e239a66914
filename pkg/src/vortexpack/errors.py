"""Exception hierarchy shared across the package."""

__all__ = [
    "VortexpackError",
    "DomainError",
    "ConvergenceError",
    "QuadratureBudgetError",
    "ParameterMismatchError",
    "BranchCutError",
]


class VortexpackError(Exception):
    """Base class for all package-specific errors."""


class DomainError(VortexpackError, ValueError):
    """Argument outside the documented supported range."""


class ConvergenceError(VortexpackError, ArithmeticError):
    """No evaluation regime attained the requested tolerance."""


class QuadratureBudgetError(ConvergenceError):
    """Adaptive integration ran out of subdivisions.

    Carries the best available estimate and the tolerance actually achieved.
    """

    def __init__(self, message, best_estimate=None, achieved_tolerance=None):
        super().__init__(message)
        self.best_estimate = best_estimate
        self.achieved_tolerance = achieved_tolerance


class ParameterMismatchError(VortexpackError, ValueError):
    """Two packets that must share (sigma, pbar, m) do not."""


class BranchCutError(VortexpackError, ArithmeticError):
    """The invariant square root landed on the closed negative real axis."""
