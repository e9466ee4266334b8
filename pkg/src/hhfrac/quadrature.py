"""Adaptive integration of smooth and endpoint-singular integrands.

Every numeric integral in the package goes through this module.  Integrands
are callables that accept a 1-D numpy array and return values of the same
shape; scalar-only callables and constants are handled transparently.

The weighted operations remove the algebraic endpoint factor analytically::

    int_a^x (t-a)**(alpha-1) f(t) dt = (1/alpha) int_0^{(x-a)**alpha} f(a + u**(1/alpha)) du

so orders below one cost the same as smooth problems.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from ._backend import kernels
from .errors import ConvergenceError, DomainError, EvaluationError

Integrand = Callable[[np.ndarray], np.ndarray]

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(21)


@dataclass(frozen=True)
class QuadConfig:
    target_abs_tol: float = 1e-10
    target_rel_tol: float = 1e-10
    max_subdivisions: int = 2000

    def __post_init__(self):
        if not (self.target_abs_tol > 0 and self.target_rel_tol > 0):
            raise DomainError("quadrature tolerances must be strictly positive")
        if self.max_subdivisions < 1:
            raise DomainError("max_subdivisions must be >= 1")


DEFAULT_QUAD = QuadConfig()


@dataclass(frozen=True)
class QuadResult:
    value: float
    error_estimate: float
    evaluations: int

    def __add__(self, other: "QuadResult") -> "QuadResult":
        return QuadResult(
            self.value + other.value,
            self.error_estimate + other.error_estimate,
            self.evaluations + other.evaluations,
        )

    def __neg__(self) -> "QuadResult":
        return QuadResult(-self.value, self.error_estimate, self.evaluations)

    def scaled(self, c: float) -> "QuadResult":
        return QuadResult(c * self.value, abs(c) * self.error_estimate, self.evaluations)


def vectorized(f: Callable) -> Integrand:
    """Wrap ``f`` so it maps float arrays to float arrays of the same shape.

    Non-finite output raises ``EvaluationError``.
    """
    state = {"scalar": False}

    def call(x: np.ndarray) -> np.ndarray:
        if not state["scalar"]:
            try:
                y = np.asarray(f(x), dtype=float)
            except (TypeError, ValueError):
                state["scalar"] = True
            else:
                if y.shape != x.shape:
                    y = np.broadcast_to(y, x.shape)
        if state["scalar"]:
            y = np.fromiter((f(float(xi)) for xi in x), dtype=float, count=len(x))
        if not np.all(np.isfinite(y)):
            bad = x[~np.isfinite(y)][0]
            raise EvaluationError(f"integrand is not finite at t={bad!r}")
        return y

    call.__wrapped__ = f  # type: ignore[attr-defined]
    return call


def _breaks(lo: float, hi: float, points: Iterable[float]) -> np.ndarray:
    inner = sorted({float(p) for p in points if lo < p < hi})
    return np.array([lo, *inner, hi], dtype=float)


def _run(func: Integrand, breaks: np.ndarray, cfg: QuadConfig):
    out = kernels.adaptive_gk21(
        func, breaks, cfg.target_abs_tol, cfg.target_rel_tol, cfg.max_subdivisions
    )
    value, err, neval, _nsub, converged = out[:5]
    if not converged:
        raise ConvergenceError(
            f"tolerance not reached within {cfg.max_subdivisions} subdivisions "
            f"on [{breaks[0]!r}, {breaks[-1]!r}] (estimate {err:.3g})",
            value,
            err,
            neval,
        )
    return out


def integrate(
    f: Callable,
    a: float,
    b: float,
    cfg: QuadConfig | None = None,
    points: Sequence[float] = (),
) -> QuadResult:
    """Integrate ``f`` over ``[a, b]``; ``points`` are interior breakpoints (kinks)."""
    cfg = cfg or DEFAULT_QUAD
    a, b = float(a), float(b)
    if not a < b:
        raise DomainError(f"need a < b, got a={a!r}, b={b!r}")
    value, err, neval = _run(vectorized(f), _breaks(a, b, points), cfg)[:3]
    return QuadResult(value, err, neval)


def _check_order(alpha: float) -> float:
    alpha = float(alpha)
    if not (math.isfinite(alpha) and alpha > 0):
        raise DomainError(f"alpha must be a positive finite real, got {alpha!r}")
    return alpha


def integrate_left_weighted(
    f: Callable,
    alpha: float,
    a: float,
    x: float,
    cfg: QuadConfig | None = None,
    points: Sequence[float] = (),
) -> QuadResult:
    """Compute ``int_a^x (t-a)**(alpha-1) f(t) dt`` via ``u = (t-a)**alpha``."""
    alpha = _check_order(alpha)
    a, x = float(a), float(x)
    if not a < x:
        raise DomainError(f"need a < x, got a={a!r}, x={x!r}")
    fv = vectorized(f)
    inv = 1.0 / alpha

    def sub(u):
        return fv(a + u**inv)

    upper = (x - a) ** alpha
    mapped = [(p - a) ** alpha for p in points if a < p < x]
    cfg = cfg or DEFAULT_QUAD
    value, err, neval = _run(sub, _breaks(0.0, upper, mapped), cfg)[:3]
    return QuadResult(value * inv, err * inv, neval)


def integrate_right_weighted(
    f: Callable,
    alpha: float,
    x: float,
    b: float,
    cfg: QuadConfig | None = None,
    points: Sequence[float] = (),
) -> QuadResult:
    """Compute ``int_x^b (b-t)**(alpha-1) f(t) dt`` via ``u = (b-t)**alpha``."""
    alpha = _check_order(alpha)
    x, b = float(x), float(b)
    if not x < b:
        raise DomainError(f"need x < b, got x={x!r}, b={b!r}")
    fv = vectorized(f)
    inv = 1.0 / alpha

    def sub(u):
        return fv(b - u**inv)

    upper = (b - x) ** alpha
    mapped = [(b - p) ** alpha for p in points if x < p < b]
    cfg = cfg or DEFAULT_QUAD
    value, err, neval = _run(sub, _breaks(0.0, upper, mapped), cfg)[:3]
    return QuadResult(value * inv, err * inv, neval)


class CumulativeIntegral:
    """``F(s) = int_lo^s h`` for many ``s`` from one adaptive partition.

    The partition is built once to the configured tolerance; a query adds the
    prefix sum of whole panels to a 21-point Gauss-Legendre rule on the
    partial panel, vectorized over all query points.
    """

    def __init__(
        self,
        h: Callable,
        lo: float,
        hi: float,
        cfg: QuadConfig | None = None,
        points: Sequence[float] = (),
    ):
        cfg = cfg or DEFAULT_QUAD
        lo, hi = float(lo), float(hi)
        if not lo < hi:
            raise DomainError(f"need lo < hi, got lo={lo!r}, hi={hi!r}")
        self.h = vectorized(h)
        self.lo, self.hi = lo, hi
        value, err, neval, _, _, lefts, rights, vals, errs = _run(
            self.h, _breaks(lo, hi, points), cfg
        )
        order = np.argsort(lefts, kind="stable")
        self._lefts = lefts[order]
        self._rights = rights[order]
        self._before = np.concatenate(([0.0], np.cumsum(vals[order])[:-1]))
        self.total = QuadResult(value, err, neval)

    @property
    def error_estimate(self) -> float:
        return self.total.error_estimate

    def __call__(self, s) -> np.ndarray:
        s = np.atleast_1d(np.asarray(s, dtype=float))
        idx = np.searchsorted(self._lefts, s, side="right") - 1
        idx = np.clip(idx, 0, len(self._lefts) - 1)
        left = self._lefts[idx]
        half = 0.5 * (np.minimum(s, self.hi) - left)
        nodes = (left + half)[:, None] + half[:, None] * _GL_NODES[None, :]
        vals = self.h(nodes.ravel()).reshape(nodes.shape)
        return self._before[idx] + half * (vals @ _GL_WEIGHTS)
