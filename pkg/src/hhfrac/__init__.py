"""Numerical checks of Hermite-Hadamard and Fejer type inequalities for
Riemann-Liouville fractional integrals."""

from ._backend import BACKEND, COMPILED
from .errors import (
    ConvergenceError,
    DomainError,
    EvaluationError,
    GenerationError,
    HHFracError,
    ParseError,
    PreconditionError,
)
from .fractional import j_left, j_right, midpoint_pair, whole_pair
from .models import Interval, parse_function, parse_weight, sup_norm
from .quadrature import QuadConfig, QuadResult, integrate
from .special import gamma, rl_power_rule

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "COMPILED",
    "ConvergenceError",
    "DomainError",
    "EvaluationError",
    "GenerationError",
    "HHFracError",
    "Interval",
    "ParseError",
    "PreconditionError",
    "QuadConfig",
    "QuadResult",
    "gamma",
    "integrate",
    "j_left",
    "j_right",
    "midpoint_pair",
    "parse_function",
    "parse_weight",
    "rl_power_rule",
    "sup_norm",
    "whole_pair",
]
