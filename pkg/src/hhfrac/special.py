"""Gamma function and closed-form fractional power rules used as analytic oracles."""

from __future__ import annotations

import math

from ._backend import kernels
from .errors import DomainError

# Largest argument for which the result stays finite in double precision.
GAMMA_MAX_ARG = 171.62


def _positive(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value) or value <= 0.0:
        raise DomainError(f"{name} must be a positive finite real, got {value!r}")
    return value


def gamma(x: float) -> float:
    """Gamma function on the positive reals (Lanczos, g=7, 9 terms).

    Relative error is below 1e-13 on (0, 170].  Raises ``DomainError`` for
    non-positive or non-finite input and ``OverflowError`` when the result
    would not fit in a double.
    """
    x = _positive("x", x)
    if x > GAMMA_MAX_ARG:
        raise OverflowError(f"gamma({x}) overflows double precision")
    return kernels.lanczos_gamma(x)


def rl_power_rule(alpha: float, beta: float, a: float, x: float) -> float:
    """Left Riemann-Liouville integral of ``(t - a)**beta`` evaluated at ``x``.

    Equals ``gamma(beta + 1) / gamma(alpha + beta + 1) * (x - a)**(alpha + beta)``.
    """
    alpha = _positive("alpha", alpha)
    beta = float(beta)
    if not math.isfinite(beta) or beta < 0.0:
        raise DomainError(f"beta must be a finite real >= 0, got {beta!r}")
    if not x > a:
        raise DomainError(f"need x > a, got a={a!r}, x={x!r}")
    return gamma(beta + 1.0) / gamma(alpha + beta + 1.0) * (x - a) ** (alpha + beta)
