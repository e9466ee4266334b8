"""Piecewise kernel of the midpoint identity.

    k(t) =  int_a^t (s-a)**(alpha-1) g(s) ds     for a <= t <= m
    k(t) =  int_b^t (b-s)**(alpha-1) g(s) ds     for m <  t <= b   (<= 0 when g >= 0)

Each branch is a cumulative integral in the substituted variable
``u = (s-a)**alpha`` (resp. ``(b-s)**alpha``), built once per quadrature
configuration and then queried in vectorized form.
"""

from __future__ import annotations

import numpy as np

from ..errors import DomainError
from ..fractional import check_order
from ..models import Interval, WeightModel
from ..quadrature import DEFAULT_QUAD, CumulativeIntegral, QuadConfig


class KernelK:
    def __init__(self, alpha: float, weight: WeightModel, interval: Interval):
        self.alpha = check_order(alpha)
        self.weight = weight
        self.interval = interval
        self._cache: dict[QuadConfig, tuple[CumulativeIntegral, CumulativeIntegral]] = {}

    def branches(self, cfg: QuadConfig | None = None) -> tuple[CumulativeIntegral, CumulativeIntegral]:
        cfg = cfg or DEFAULT_QUAD
        if cfg not in self._cache:
            a, b, m = self.interval.a, self.interval.b, self.interval.midpoint
            inv = 1.0 / self.alpha
            g = self.weight.g
            left = CumulativeIntegral(lambda u: g(a + u**inv), 0.0, (m - a) ** self.alpha, cfg)
            right = CumulativeIntegral(lambda u: g(b - u**inv), 0.0, (b - m) ** self.alpha, cfg)
            self._cache[cfg] = (left, right)
        return self._cache[cfg]

    def error_estimate(self, cfg: QuadConfig | None = None) -> float:
        left, right = self.branches(cfg)
        return (left.error_estimate + right.error_estimate) / self.alpha

    def __call__(self, t, cfg: QuadConfig | None = None) -> np.ndarray:
        t = np.atleast_1d(np.asarray(t, dtype=float))
        a, b, m = self.interval.a, self.interval.b, self.interval.midpoint
        left, right = self.branches(cfg)
        out = np.empty_like(t)
        lo = t <= m
        if np.any(lo):
            out[lo] = left(np.maximum(t[lo] - a, 0.0) ** self.alpha) / self.alpha
        if np.any(~lo):
            out[~lo] = -right(np.maximum(b - t[~lo], 0.0) ** self.alpha) / self.alpha
        return out


def eval_kernel(k: KernelK, t: float, cfg: QuadConfig | None = None) -> float:
    if not k.interval.a <= t <= k.interval.b:
        raise DomainError(f"t={t!r} outside [{k.interval.a}, {k.interval.b}]")
    return float(k(t, cfg)[0])
