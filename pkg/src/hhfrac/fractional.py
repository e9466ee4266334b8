"""Left and right Riemann-Liouville fractional integrals.

    J_{a+}^alpha f(x) = 1/Gamma(alpha) * int_a^x (x-t)**(alpha-1) f(t) dt,   x > a
    J_{b-}^alpha f(x) = 1/Gamma(alpha) * int_x^b (t-x)**(alpha-1) f(t) dt,   x < b

Order zero is the identity operator.  All values carry the quadrature error
estimate, scaled by ``1/Gamma(alpha)``.
"""

from __future__ import annotations

import math
from typing import Callable, Sequence

import numpy as np

from .errors import DomainError
from .models import Interval, WeightModel
from .quadrature import (
    QuadConfig,
    QuadResult,
    integrate_left_weighted,
    integrate_right_weighted,
    vectorized,
)
from .special import gamma


def check_order(alpha: float, allow_zero: bool = False) -> float:
    alpha = float(alpha)
    if not math.isfinite(alpha) or alpha < 0 or (alpha == 0 and not allow_zero):
        raise DomainError(f"fractional order must be a positive finite real, got {alpha!r}")
    return alpha


def _identity(f: Callable, x: float) -> QuadResult:
    return QuadResult(float(vectorized(f)(np.array([float(x)]))[0]), 0.0, 1)


def j_left(
    f: Callable,
    alpha: float,
    a: float,
    x: float,
    cfg: QuadConfig | None = None,
    points: Sequence[float] = (),
) -> QuadResult:
    """``J_{a+}^alpha f(x)``; the kernel is singular at ``t = x`` when ``alpha < 1``."""
    alpha = check_order(alpha, allow_zero=True)
    if alpha == 0:
        return _identity(f, x)
    if not x > a:
        raise DomainError(f"J_{{a+}} needs x > a, got a={a!r}, x={x!r}")
    # (x - t)**(alpha-1) is the right-endpoint weight on [a, x]
    return integrate_right_weighted(f, alpha, a, x, cfg, points).scaled(1.0 / gamma(alpha))


def j_right(
    f: Callable,
    alpha: float,
    x: float,
    b: float,
    cfg: QuadConfig | None = None,
    points: Sequence[float] = (),
) -> QuadResult:
    """``J_{b-}^alpha f(x)``; the kernel is singular at ``t = x`` when ``alpha < 1``."""
    alpha = check_order(alpha, allow_zero=True)
    if alpha == 0:
        return _identity(f, x)
    if not x < b:
        raise DomainError(f"J_{{b-}} needs x < b, got x={x!r}, b={b!r}")
    return integrate_left_weighted(f, alpha, x, b, cfg, points).scaled(1.0 / gamma(alpha))


def midpoint_pair(
    h: Callable,
    alpha: float,
    iv: Interval,
    cfg: QuadConfig | None = None,
    points: Sequence[float] = (),
) -> tuple[QuadResult, QuadResult]:
    """Half-interval operators anchored at the midpoint ``m``.

    Returns ``(J_{m-}^alpha h(a), J_{m+}^alpha h(b))``, i.e.
    ``1/Gamma(alpha) int_a^m (t-a)**(alpha-1) h`` and
    ``1/Gamma(alpha) int_m^b (b-t)**(alpha-1) h``.
    """
    m = iv.midpoint
    return j_right(h, alpha, iv.a, m, cfg, points), j_left(h, alpha, m, iv.b, cfg, points)


def midpoint_pair_weight(
    g: WeightModel, alpha: float, iv: Interval, cfg: QuadConfig | None = None
) -> tuple[QuadResult, QuadResult]:
    """``midpoint_pair`` applied to a weight model."""
    return midpoint_pair(g.g, alpha, iv, cfg)


def whole_pair(
    h: Callable,
    alpha: float,
    iv: Interval,
    cfg: QuadConfig | None = None,
    points: Sequence[float] = (),
) -> tuple[QuadResult, QuadResult]:
    """``(J_{a+}^alpha h(b), J_{b-}^alpha h(a))`` over the whole interval."""
    return j_left(h, alpha, iv.a, iv.b, cfg, points), j_right(h, alpha, iv.a, iv.b, cfg, points)
