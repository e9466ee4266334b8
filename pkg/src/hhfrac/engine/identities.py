"""Equality claims: the midpoint fractional identity, the midpoint-mean identity,
and the weighted-power identity.  Each report has ``slack = -|lhs - rhs|``.
"""

from __future__ import annotations

import numpy as np

from ..errors import DomainError, PreconditionError
from ..fractional import check_order
from ..models import FunctionModel, Interval, WeightModel, min_value
from ..quadrature import (
    CumulativeIntegral,
    QuadConfig,
    QuadResult,
    integrate,
    integrate_left_weighted,
    integrate_right_weighted,
)
from ..special import gamma
from .common import guarded, max_abs, midpoint_sides, record
from .kernel import KernelK
from .report import DEFAULT_TOL, InequalityReport, Side, Tolerance, verdict

_ZERO = QuadResult(0.0, 0.0, 1)


def _identity_report(name, sides, lhs, rhs, err, tol, instance, notes=None) -> InequalityReport:
    slack = -abs(lhs - rhs)
    scale = max(abs(s.value) for s in sides)
    return InequalityReport(
        name=name,
        sides=sides,
        slack=slack,
        verdict=verdict(slack, scale, err, tol),
        instance=instance,
        error_budget=err,
        notes=notes or {},
    )


def kernel_integral(
    f: FunctionModel, k: KernelK, cfg: QuadConfig | None = None
) -> tuple[float, float]:
    """``int_a^b k(t) f'(t) dt`` split at the midpoint and at the kinks of ``f'``.

    Returns ``(value, error_estimate)``; the estimate includes the kernel's own
    cumulative-integral error times ``int |f'|``.
    """
    iv = k.interval
    a, b, m = iv.a, iv.b, iv.midpoint

    def integrand(t):
        return k(t, cfg) * f.df(t)

    left = integrate(integrand, a, m, cfg, f.kinks_in(a, m))
    right = integrate(integrand, m, b, cfg, f.kinks_in(m, b))
    df_l1 = max_abs(f.df, iv) * iv.length
    err = left.error_estimate + right.error_estimate + k.error_estimate(cfg) * df_l1
    return left.value + right.value, err


@guarded("lemma23")
def midpoint_identity_residual(
    f: FunctionModel,
    g: WeightModel,
    alpha: float,
    iv: Interval,
    cfg: QuadConfig | None = None,
    tol: Tolerance = DEFAULT_TOL,
    meta: dict | None = None,
) -> InequalityReport:
    """Residual of the midpoint identity

        f(m)[J_{m-} g(a) + J_{m+} g(b)] - [J_{m-}(fg)(a) + J_{m+}(fg)(b)]
            = 1/Gamma(alpha) int_a^b k(t) f'(t) dt.

    The left side uses the fractional operators; the right side is a double
    integral through the cumulative kernel, so the two routes share nothing
    beyond the weight and the quadrature backend.
    """
    alpha = check_order(alpha)
    lhs = midpoint_sides(f, g, alpha, iv, cfg)
    kval, kerr = kernel_integral(f, KernelK(alpha, g, iv), cfg)
    gam = gamma(alpha)
    rhs, rhs_err = kval / gam, kerr / gam
    sides = [
        Side("weight_term", lhs.weight_term),
        Side("product_term", lhs.product_term),
        Side("lhs", lhs.value, lhs.error_estimate),
        Side("rhs", rhs, rhs_err),
    ]
    return _identity_report(
        "lemma23",
        sides,
        lhs.value,
        rhs,
        lhs.error_estimate + rhs_err,
        tol,
        record(f, g, iv, alpha=alpha, **(meta or {})),
    )


@guarded("kirmaci-id")
def midpoint_mean_identity_residual(
    f: FunctionModel,
    iv: Interval,
    cfg: QuadConfig | None = None,
    tol: Tolerance = DEFAULT_TOL,
    meta: dict | None = None,
) -> InequalityReport:
    """Residual of

        mean(f) - f(m) = (b-a) [ int_0^1/2 t f'(ta+(1-t)b) dt + int_1/2^1 (t-1) f'(ta+(1-t)b) dt ].
    """
    a, b, L = iv.a, iv.b, iv.length
    total = integrate(f.f, a, b, cfg, f.kinks)
    mean = total.value / L
    lhs = mean - f.fv(iv.midpoint)
    lhs_err = total.error_estimate / L
    # kinks of f' in the t variable
    tk = [(b - k) / L for k in f.kinks_in(a, b)]
    first = integrate(lambda t: t * f.df(t * a + (1 - t) * b), 0.0, 0.5, cfg, tk)
    second = integrate(lambda t: (t - 1) * f.df(t * a + (1 - t) * b), 0.5, 1.0, cfg, tk)
    rhs = L * (first.value + second.value)
    rhs_err = L * (first.error_estimate + second.error_estimate)
    sides = [
        Side("mean", mean, lhs_err),
        Side("lhs", lhs, lhs_err),
        Side("rhs", rhs, rhs_err),
    ]
    return _identity_report(
        "kirmaci-id", sides, lhs, rhs, lhs_err + rhs_err, tol, record(f, None, iv, **(meta or {}))
    )


def _ratio(cumulative, dist, w0: float):
    """``cumulative / dist`` with the limit ``w0`` where ``dist`` underflows to zero."""
    safe = np.where(dist > 0, dist, 1.0)
    return np.where(dist > 0, cumulative / safe, w0)


@guarded("eq0")
def weighted_power_identity_residual(
    f: FunctionModel,
    w: WeightModel,
    alpha: float,
    x: float,
    iv: Interval,
    cfg: QuadConfig | None = None,
    tol: Tolerance = DEFAULT_TOL,
    meta: dict | None = None,
) -> InequalityReport:
    """Residual of the weighted-power identity at the split point ``x``.

    With ``Wl(t) = int_a^t w`` and ``Wr(t) = int_t^b w``::

        int_a^x Wl**alpha f' - int_x^b Wr**alpha f'
            = [Wl(x)**alpha + Wr(x)**alpha] f(x)
              - alpha int_a^x Wl**(alpha-1) w f - alpha int_x^b Wr**(alpha-1) w f

    The cumulative weights come from one adaptive partition per side.  The
    ``alpha - 1`` power is singular at the outer endpoints when ``alpha < 1``;
    it is factored as ``(t-a)**(alpha-1) (Wl/(t-a))**(alpha-1)`` and handed to
    the weighted quadrature whenever ``w`` does not vanish there.
    """
    alpha = check_order(alpha)
    a, b = iv.a, iv.b
    x = float(x)
    if not a <= x <= b:
        raise DomainError(f"x={x!r} outside [{a}, {b}]")
    if min_value(w, iv) < 0:
        raise PreconditionError(f"{w.spec}: weight must be nonnegative for real powers")
    wv = w.g
    kinks = f.kinks

    L1 = M1 = L2 = M2 = _ZERO
    wl_x = wr_x = 0.0
    cum_err = 0.0
    if x > a:
        cum = CumulativeIntegral(wv, a, x, cfg)
        wl_x = cum.total.value
        cum_err += cum.error_estimate
        L1 = integrate(
            lambda t: np.maximum(cum(t), 0.0) ** alpha * f.df(t), a, x, cfg, kinks
        )
        wa = w.gv(a)
        if wa > 0:
            M1 = integrate_left_weighted(
                lambda t: alpha * _ratio(cum(t), t - a, wa) ** (alpha - 1) * wv(t) * f.f(t),
                alpha,
                a,
                x,
                cfg,
                kinks,
            )
        else:
            M1 = integrate(
                lambda t: alpha * np.maximum(cum(t), 0.0) ** (alpha - 1) * wv(t) * f.f(t),
                a,
                x,
                cfg,
                kinks,
            )
    if x < b:
        # Wr(t) = R(b - t) with R(v) = int_0^v w(b - s) ds
        rev = CumulativeIntegral(lambda v: wv(b - v), 0.0, b - x, cfg)
        wr_x = rev.total.value
        cum_err += rev.error_estimate
        L2 = integrate(
            lambda t: np.maximum(rev(b - t), 0.0) ** alpha * f.df(t), x, b, cfg, kinks
        )
        wb = w.gv(b)
        if wb > 0:
            M2 = integrate_right_weighted(
                lambda t: alpha * _ratio(rev(b - t), b - t, wb) ** (alpha - 1) * wv(t) * f.f(t),
                alpha,
                x,
                b,
                cfg,
                kinks,
            )
        else:
            M2 = integrate(
                lambda t: alpha * np.maximum(rev(b - t), 0.0) ** (alpha - 1) * wv(t) * f.f(t),
                x,
                b,
                cfg,
                kinks,
            )

    boundary = (wl_x**alpha + wr_x**alpha) * f.fv(x)
    lhs = L1.value - L2.value
    rhs = boundary - M1.value - M2.value
    quad_err = L1.error_estimate + L2.error_estimate + M1.error_estimate + M2.error_estimate
    sens = (1.0 + alpha) * (max_abs(f.f, iv) + max_abs(f.df, iv)) * (iv.length + 1.0)
    err = quad_err + cum_err * sens
    sides = [
        Side("left_derivative_term", L1.value, L1.error_estimate),
        Side("right_derivative_term", L2.value, L2.error_estimate),
        Side("boundary_term", boundary),
        Side("left_weighted_term", M1.value, M1.error_estimate),
        Side("right_weighted_term", M2.value, M2.error_estimate),
        Side("lhs", lhs),
        Side("rhs", rhs),
    ]
    return _identity_report(
        "eq0", sides, lhs, rhs, err, tol, record(f, w, iv, alpha=alpha, x=x, **(meta or {}))
    )
