"""
errors module

Exception hierarchy shared by the numerical core, the experiment graphs and
the command line. Validation problems subclass ``ValueError``, numerical
failures subclass ``ArithmeticError`` so callers that only know the builtin
types still catch them.
"""

from typing import Optional


class LangevinGraphError(Exception):
    """
    Base class of every exception raised by langevingraph.
    """

    pass


class ConfigError(LangevinGraphError, ValueError):
    """
    Raised when an experiment configuration is rejected.

    Args:
        message (str): Human readable description of the violated constraint.
        key_path (Optional[str]): Dotted path of the offending key, e.g.
            ``"bistable.gamma_diag"``.
    """

    def __init__(self, message: str, key_path: Optional[str] = None):
        self.key_path = key_path
        if key_path:
            message = f"{key_path}: {message}"
        super().__init__(message)


class ValidationError(LangevinGraphError, ValueError):
    """
    Raised when an input violates an invariant of the receiving operation.
    """

    pass


class DomainError(ValidationError):
    """
    Raised when a scalar parameter lies outside its admissible domain.
    """

    pass


class DimensionError(ValidationError):
    """
    Raised on shape mismatches (non-square matrices, wrong vector lengths).
    """

    pass


class ScopeError(ValidationError):
    """
    Raised when an operation is not defined for the given model variant.
    """

    pass


class DataError(ValidationError):
    """
    Raised when a data set is too small or otherwise unusable for a fit.
    """

    pass


class DegenerateSeriesError(DataError):
    """
    Raised for zero-variance series where a normalisation is impossible.
    """

    pass


class NumericalError(LangevinGraphError, ArithmeticError):
    """
    Base class of numerical failures (instability, loss of definiteness, ...).
    """

    pass


class StabilityError(NumericalError):
    """
    Raised when a matrix is not Hurwitz / positive-stable or a step size is
    too large for the time scale it has to resolve.
    """

    pass


class DefinitenessError(NumericalError):
    """
    Raised when a matrix that must be symmetric positive definite is not.
    """

    pass


class SingularityError(NumericalError):
    """
    Raised for singular matrices and coincident particles.
    """

    pass


class CommutationError(NumericalError):
    """
    Raised when two matrices that must commute do not.
    """

    pass


class ConvergenceError(NumericalError):
    """
    Raised when an iterative routine fails to converge.

    Args:
        message (str): Description of the failure.
        iterations (Optional[int]): Number of iterations performed.
    """

    def __init__(self, message: str, iterations: Optional[int] = None):
        self.iterations = iterations
        if iterations is not None:
            message = f"{message} (after {iterations} iterations)"
        super().__init__(message)
