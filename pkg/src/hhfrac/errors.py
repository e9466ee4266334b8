"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class HHFracError(Exception):
    """Base class for all package errors."""


class DomainError(HHFracError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ConvergenceError(HHFracError, ArithmeticError):
    """Adaptive quadrature could not reach the requested tolerance.

    The best value and error estimate found so far are kept on the
    exception so callers can report them without trusting them.
    """

    def __init__(self, message: str, value: float, error_estimate: float, evaluations: int):
        super().__init__(message)
        self.value = value
        self.error_estimate = error_estimate
        self.evaluations = evaluations


class EvaluationError(HHFracError, ValueError):
    """A user-declared function produced a non-finite value."""


class ParseError(HHFracError, ValueError):
    """A function or weight descriptor does not match the mini-language."""


class PreconditionError(HHFracError, ValueError):
    """A hypothesis of an identity or inequality is not satisfied by the instance."""


class GenerationError(HHFracError, RuntimeError):
    """Random instance generation exhausted its retry budget."""
