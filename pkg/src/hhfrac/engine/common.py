"""Helpers shared by the evaluators: instance records, hypothesis checks, shared sides."""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Any

import numpy as np

from ..errors import ConvergenceError, EvaluationError, PreconditionError
from ..fractional import midpoint_pair
from ..models import (
    FunctionModel,
    Interval,
    WeightModel,
    check_symmetry,
    claim_violations,
    min_value,
    sup_norm,
)
from ..quadrature import QuadConfig
from .report import INCONCLUSIVE, InequalityReport


def record(
    f: FunctionModel | None = None,
    g: WeightModel | None = None,
    iv: Interval | None = None,
    **extra: Any,
) -> dict[str, Any]:
    rec: dict[str, Any] = {}
    if f is not None:
        rec["f"] = f.spec
    if g is not None:
        rec["g"] = g.spec
    if iv is not None:
        rec["a"], rec["b"] = iv.a, iv.b
    rec.update({k: v for k, v in extra.items() if v is not None})
    return rec


def guarded(name: str):
    """Turn quadrature or evaluation failures into an inconclusive report."""

    def wrap(fn):
        @functools.wraps(fn)
        def inner(*args, **kwargs):
            try:
                return fn(*args, **kwargs)
            except (ConvergenceError, EvaluationError) as exc:
                return InequalityReport(
                    name=name,
                    sides=[],
                    slack=math.nan,
                    verdict=INCONCLUSIVE,
                    instance=dict(kwargs.get("meta") or {}),
                    notes={"error": f"{type(exc).__name__}: {exc}"},
                )

        return inner

    return wrap


def require_convex(f: FunctionModel, iv: Interval) -> None:
    if not f.claims.f_convex:
        raise PreconditionError(f"{f.spec}: no convexity claim for f")
    bad = claim_violations(f, iv)
    if bad:
        raise PreconditionError(f"{f.spec}: claims {bad} fail on [{iv.a}, {iv.b}]")


def require_df_convex(f: FunctionModel, iv: Interval) -> None:
    if not f.claims.df_convex:
        raise PreconditionError(f"{f.spec}: no convexity claim for |f'|")
    bad = claim_violations(f, iv)
    if bad:
        raise PreconditionError(f"{f.spec}: claims {bad} fail on [{iv.a}, {iv.b}]")


def require_dfq_convex(f: FunctionModel, iv: Interval, q: float) -> None:
    if not f.claims.dfq_convex(q):
        raise PreconditionError(f"{f.spec}: no convexity claim for |f'|^{q:g}")
    bad = claim_violations(f, iv, q)
    if bad:
        raise PreconditionError(f"{f.spec}: claims {bad} fail on [{iv.a}, {iv.b}]")


def require_fejer_weight(g: WeightModel, iv: Interval) -> None:
    norm = sup_norm(g, iv.a, iv.b).value
    asym = check_symmetry(g, iv)
    if asym > 1e-12 * (1.0 + norm):
        raise PreconditionError(f"{g.spec}: not symmetric about the midpoint (gap {asym:.3g})")
    if min_value(g, iv) < 0:
        raise PreconditionError(f"{g.spec}: weight takes negative values")


def product(f: FunctionModel, g: WeightModel):
    return lambda x: f.f(x) * g.g(x)


@dataclass(frozen=True)
class MidpointSides:
    """Pieces of ``f(m)[J_{m-} g(a) + J_{m+} g(b)] - [J_{m-}(fg)(a) + J_{m+}(fg)(b)]``."""

    weight_term: float
    product_term: float
    value: float
    error_estimate: float


def midpoint_sides(
    f: FunctionModel, g: WeightModel, alpha: float, iv: Interval, cfg: QuadConfig | None
) -> MidpointSides:
    gl, gr = midpoint_pair(g.g, alpha, iv, cfg)
    pl, pr = midpoint_pair(product(f, g), alpha, iv, cfg, f.kinks)
    fm = f.fv(iv.midpoint)
    weight_term = fm * (gl.value + gr.value)
    product_term = pl.value + pr.value
    err = abs(fm) * (gl.error_estimate + gr.error_estimate) + pl.error_estimate + pr.error_estimate
    return MidpointSides(weight_term, product_term, weight_term - product_term, err)


def weight_norms(g: WeightModel, iv: Interval) -> tuple[float, float, float]:
    """``(||g||_[a,b], ||g||_[a,m], ||g||_[m,b])``; the full norm is the max of the halves."""
    m = iv.midpoint
    left = sup_norm(g, iv.a, m).value
    right = sup_norm(g, m, iv.b).value
    full = max(left, right, sup_norm(g, iv.a, iv.b).value)
    return full, left, right


def abs_df_endpoints(f: FunctionModel, iv: Interval) -> tuple[float, float]:
    return abs(f.dfv(iv.a)), abs(f.dfv(iv.b))


def max_abs(h, iv: Interval, n: int = 129) -> float:
    return float(np.max(np.abs(h(iv.grid(n)))))
