"""Upper bounds on the midpoint deviation in terms of ``|f'(a)|`` and ``|f'(b)|``.

The closed-form right-hand sides are plain functions of the endpoint
derivative magnitudes ``A = |f'(a)|``, ``B = |f'(b)|``, the length ``L``, the
order ``alpha`` and the weight norms, so they can be checked against each
other without quadrature.
"""

from __future__ import annotations

import math

from ..errors import DomainError
from ..fractional import check_order, whole_pair
from ..models import FunctionModel, Interval, WeightModel
from ..quadrature import QuadConfig, integrate
from ..special import gamma
from .common import (
    abs_df_endpoints,
    guarded,
    midpoint_sides,
    product,
    record,
    require_df_convex,
    require_dfq_convex,
    weight_norms,
)
from .report import DEFAULT_TOL, PASS, InequalityReport, Side, Tolerance, verdict, worst


def mean_bound_rhs(A: float, B: float, L: float) -> float:
    return L / 8.0 * (A + B)


def mean_holder_rhs(A: float, B: float, L: float, p: float) -> float:
    r = p / (p - 1.0)
    return (
        L
        / 16.0
        * (4.0 / (p + 1.0)) ** (1.0 / p)
        * ((A**r + 3.0 * B**r) ** (1.0 / r) + (3.0 * A**r + B**r) ** (1.0 / r))
    )


def sup_bound_rhs(A, B, L, alpha, norms) -> tuple[float, float]:
    """``(sharp, final)``: the two-half-norm form and the whole-norm form."""
    full, left, right = norms
    g1 = gamma(alpha + 1.0)
    sharp = (
        L ** (alpha + 1.0)
        / (2.0 ** (alpha + 2.0) * (alpha + 2.0) * (alpha + 1.0) * g1)
        * (
            left * ((alpha + 3.0) * A + (alpha + 1.0) * B)
            + right * ((alpha + 1.0) * A + (alpha + 3.0) * B)
        )
    )
    final = L ** (alpha + 1.0) * full / (2.0 ** (alpha + 1.0) * (alpha + 1.0) * g1) * (A + B)
    return sharp, final


def power_mean_rhs(A, B, L, alpha, q, norms) -> dict[str, float]:
    """Candidate right-hand sides of the power-mean bound.

    ``stmt`` and ``proof`` differ only in the power of two of the constant
    (``2**(alpha+1+1/q)`` vs ``2**(alpha+1/q)``).  ``final`` replaces both
    half norms by the whole norm and keeps the ``alpha+3`` coefficients;
    ``printed_weak`` is the same with those coefficients dropped to 1.
    """
    full, left, right = norms
    g1 = gamma(alpha + 1.0)
    Aq, Bq = A**q, B**q
    xl = ((alpha + 3.0) * Aq + (alpha + 1.0) * Bq) ** (1.0 / q)
    xr = ((alpha + 1.0) * Aq + (alpha + 3.0) * Bq) ** (1.0 / q)
    base = L ** (alpha + 1.0) / ((alpha + 1.0) * (alpha + 2.0) ** (1.0 / q) * g1)
    c_stmt = base / 2.0 ** (alpha + 1.0 + 1.0 / q)
    c_proof = base / 2.0 ** (alpha + 1.0 / q)
    weak = (Aq + (alpha + 1.0) * Bq) ** (1.0 / q) + ((alpha + 1.0) * Aq + Bq) ** (1.0 / q)
    return {
        "stmt": c_stmt * (left * xl + right * xr),
        "proof": c_proof * (left * xl + right * xr),
        "final": c_stmt * full * (xl + xr),
        "printed_weak": c_stmt * full * weak,
    }


def holder_rhs(A, B, L, alpha, p, norms) -> tuple[float, float]:
    """``(sharp, final)`` for the Holder bound with ``q = p/(p-1)``."""
    full, left, right = norms
    q = p / (p - 1.0)
    c = L ** (alpha + 1.0) / (
        2.0 ** (alpha + 1.0 + 2.0 / q) * (alpha * p + 1.0) ** (1.0 / p) * gamma(alpha + 1.0)
    )
    xl = (3.0 * A**q + B**q) ** (1.0 / q)
    xr = (A**q + 3.0 * B**q) ** (1.0 / q)
    return c * (left * xl + right * xr), c * full * (xl + xr)


def _check_exponent(name: str, v: float) -> float:
    v = float(v)
    if not (math.isfinite(v) and v > 1.0):
        raise DomainError(f"{name} must be a finite real > 1, got {v!r}")
    return v


def _chain_report(name, lhs, rhs, err, tol, instance, notes=None) -> InequalityReport:
    """Report for ``lhs <= rhs[0] <= rhs[1] <= ...``."""
    sides = [Side("lhs", lhs, err)] + [Side(label, v) for label, v in rhs]
    values = [s.value for s in sides]
    slack = min(hi - lo for lo, hi in zip(values, values[1:]))
    scale = max(abs(v) for v in values)
    return InequalityReport(
        name=name,
        sides=sides,
        slack=slack,
        verdict=verdict(slack, scale, err, tol),
        instance=instance,
        error_budget=err,
        notes=notes or {},
    )


def _mean_deviation(f: FunctionModel, iv: Interval, cfg) -> tuple[float, float]:
    total = integrate(f.f, iv.a, iv.b, cfg, f.kinks)
    return abs(total.value / iv.length - f.fv(iv.midpoint)), total.error_estimate / iv.length


@guarded("kirmaci-1")
def midpoint_mean_bound(
    f: FunctionModel,
    iv: Interval,
    cfg: QuadConfig | None = None,
    tol: Tolerance = DEFAULT_TOL,
    meta: dict | None = None,
) -> InequalityReport:
    """``|mean(f) - f(m)| <= (b-a)/8 (|f'(a)| + |f'(b)|)`` for convex ``|f'|``."""
    require_df_convex(f, iv)
    lhs, err = _mean_deviation(f, iv, cfg)
    A, B = abs_df_endpoints(f, iv)
    return _chain_report(
        "kirmaci-1", lhs, [("rhs", mean_bound_rhs(A, B, iv.length))], err, tol,
        record(f, None, iv, **(meta or {})),
    )


@guarded("kirmaci-2")
def midpoint_mean_holder_bound(
    f: FunctionModel,
    iv: Interval,
    p: float,
    cfg: QuadConfig | None = None,
    tol: Tolerance = DEFAULT_TOL,
    meta: dict | None = None,
) -> InequalityReport:
    """Holder-type bound on ``|mean(f) - f(m)|`` for convex ``|f'|**(p/(p-1))``."""
    p = _check_exponent("p", p)
    require_dfq_convex(f, iv, p / (p - 1.0))
    lhs, err = _mean_deviation(f, iv, cfg)
    A, B = abs_df_endpoints(f, iv)
    return _chain_report(
        "kirmaci-2", lhs, [("rhs", mean_holder_rhs(A, B, iv.length, p))], err, tol,
        record(f, None, iv, p=p, **(meta or {})),
    )


@guarded("thm24")
def midpoint_sup_bound(
    f: FunctionModel,
    g: WeightModel,
    alpha: float,
    iv: Interval,
    cfg: QuadConfig | None = None,
    tol: Tolerance = DEFAULT_TOL,
    meta: dict | None = None,
) -> InequalityReport:
    """``|midpoint deviation| <= rhs_sharp <= rhs_final`` for convex ``|f'|``.

    ``rhs_sharp`` uses the sup norms of ``g`` on each half interval and
    ``rhs_final`` the norm on the whole interval.
    """
    alpha = check_order(alpha)
    require_df_convex(f, iv)
    mid = midpoint_sides(f, g, alpha, iv, cfg)
    norms = weight_norms(g, iv)
    A, B = abs_df_endpoints(f, iv)
    sharp, final = sup_bound_rhs(A, B, iv.length, alpha, norms)
    return _chain_report(
        "thm24",
        abs(mid.value),
        [("rhs_sharp", sharp), ("rhs_final", final)],
        mid.error_estimate,
        tol,
        record(f, g, iv, alpha=alpha, **(meta or {})),
        {"norms": dict(zip(("whole", "left_half", "right_half"), norms))},
    )


@guarded("thm25")
def midpoint_power_mean_bound(
    f: FunctionModel,
    g: WeightModel,
    alpha: float,
    iv: Interval,
    q: float,
    cfg: QuadConfig | None = None,
    tol: Tolerance = DEFAULT_TOL,
    meta: dict | None = None,
) -> InequalityReport:
    """Power-mean bound evaluated against every candidate constant.

    The bounded quantity is the midpoint deviation.  The whole-interval
    variant ``|f(m)[J_{a+}g(b)+J_{b-}g(a)] - [J_{a+}(fg)(b)+J_{b-}(fg)(a)]|``
    is computed as well and compared with the ``stmt`` candidate in
    ``notes["whole_interval_lhs"]``.  The overall verdict covers the
    ``stmt``, ``proof`` and ``final`` candidates; ``printed_weak`` is recorded
    only.
    """
    alpha = check_order(alpha)
    q = _check_exponent("q", q)
    require_dfq_convex(f, iv, q)
    mid = midpoint_sides(f, g, alpha, iv, cfg)
    lhs, err = abs(mid.value), mid.error_estimate
    norms = weight_norms(g, iv)
    A, B = abs_df_endpoints(f, iv)
    cands = power_mean_rhs(A, B, iv.length, alpha, q, norms)

    def judge(rhs: float, lhs_value: float = lhs, lhs_err: float = err) -> str:
        return verdict(rhs - lhs_value, max(abs(rhs), abs(lhs_value)), lhs_err, tol)

    per = {name: judge(v) for name, v in cands.items()}
    gl, gr = whole_pair(g.g, alpha, iv, cfg)
    pl, pr = whole_pair(product(f, g), alpha, iv, cfg, f.kinks)
    whole = abs(f.fv(iv.midpoint) * (gl.value + gr.value) - (pl.value + pr.value))
    whole_err = abs(f.fv(iv.midpoint)) * (gl.error_estimate + gr.error_estimate) + pl.error_estimate + pr.error_estimate
    sides = [Side("lhs", lhs, err)] + [Side(f"rhs_{k}", v) for k, v in cands.items()]
    gated = ("stmt", "proof", "final")
    slack = min(cands[k] - lhs for k in gated)
    return InequalityReport(
        name="thm25",
        sides=sides,
        slack=slack,
        verdict=worst(*(per[k] for k in gated)),
        instance=record(f, g, iv, alpha=alpha, q=q, **(meta or {})),
        error_budget=err,
        notes={
            "candidates": per,
            "whole_interval_lhs": {
                "value": whole,
                "error_estimate": whole_err,
                "vs_stmt": judge(cands["stmt"], whole, whole_err),
            },
            "resolutions": [
                "stray 'dt' inside the displayed norms ignored",
                "alpha+3 coefficients kept in the whole-norm bound (rhs_final)",
                "bounded quantity is the midpoint deviation, not the whole-interval variant",
            ],
            "all_candidates_pass": all(v == PASS for v in per.values()),
        },
    )


@guarded("thm26")
def midpoint_holder_bound(
    f: FunctionModel,
    g: WeightModel,
    alpha: float,
    iv: Interval,
    p: float,
    cfg: QuadConfig | None = None,
    tol: Tolerance = DEFAULT_TOL,
    meta: dict | None = None,
) -> InequalityReport:
    """Holder bound with ``q = p/(p-1)``: ``|midpoint deviation| <= rhs_sharp <= rhs_final``."""
    alpha = check_order(alpha)
    p = _check_exponent("p", p)
    q = p / (p - 1.0)
    require_dfq_convex(f, iv, q)
    mid = midpoint_sides(f, g, alpha, iv, cfg)
    norms = weight_norms(g, iv)
    A, B = abs_df_endpoints(f, iv)
    sharp, final = holder_rhs(A, B, iv.length, alpha, p, norms)
    return _chain_report(
        "thm26",
        abs(mid.value),
        [("rhs_sharp", sharp), ("rhs_final", final)],
        mid.error_estimate,
        tol,
        record(f, g, iv, alpha=alpha, p=p, q=q, **(meta or {})),
    )
