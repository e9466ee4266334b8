"""Three-sided (sandwich) inequalities for convex functions.

Each report lists ``(lower, middle, upper)`` and its slack is the smaller of
the two gaps ``middle - lower`` and ``upper - middle``.
"""

from __future__ import annotations

from ..errors import PreconditionError
from ..fractional import check_order, whole_pair
from ..models import FunctionModel, Interval, WeightModel
from ..quadrature import QuadConfig, integrate
from ..special import gamma
from .common import guarded, product, record, require_convex, require_fejer_weight
from .report import DEFAULT_TOL, InequalityReport, Side, Tolerance, verdict


def _sandwich(name, lower, middle, upper, err, tol, instance, notes=None) -> InequalityReport:
    sides = [Side("lower", lower), middle, Side("upper", upper)]
    lo, mid, up = (s.value for s in sides)
    slack = min(mid - lo, up - mid)
    scale = max(abs(lo), abs(mid), abs(up))
    return InequalityReport(
        name=name,
        sides=sides,
        slack=slack,
        verdict=verdict(slack, scale, err, tol),
        instance=instance,
        error_budget=err,
        notes=notes or {},
    )


@guarded("hh")
def hh_classical(
    f: FunctionModel,
    iv: Interval,
    cfg: QuadConfig | None = None,
    tol: Tolerance = DEFAULT_TOL,
    check: bool = True,
    meta: dict | None = None,
) -> InequalityReport:
    """``f(m) <= mean(f) <= (f(a) + f(b))/2``.

    ``check=False`` skips the convexity hypothesis; negative controls use it
    to show that a concave input is reported as a failure.
    """
    if check:
        require_convex(f, iv)
    total = integrate(f.f, iv.a, iv.b, cfg, f.kinks)
    L = iv.length
    mean = Side("mean", total.value / L, total.error_estimate / L)
    return _sandwich(
        "hh",
        f.fv(iv.midpoint),
        mean,
        0.5 * (f.fv(iv.a) + f.fv(iv.b)),
        mean.error_estimate,
        tol,
        record(f, None, iv, **(meta or {})),
    )


@guarded("fejer")
def fejer_classical(
    f: FunctionModel,
    g: WeightModel,
    iv: Interval,
    cfg: QuadConfig | None = None,
    tol: Tolerance = DEFAULT_TOL,
    check: bool = True,
    meta: dict | None = None,
) -> InequalityReport:
    """``f(m) int g <= int f g <= (f(a)+f(b))/2 int g`` for symmetric nonnegative ``g``."""
    if check:
        require_convex(f, iv)
    require_fejer_weight(g, iv)
    ig = integrate(g.g, iv.a, iv.b, cfg)
    ifg = integrate(product(f, g), iv.a, iv.b, cfg, f.kinks)
    avg = 0.5 * (f.fv(iv.a) + f.fv(iv.b))
    fm = f.fv(iv.midpoint)
    err = ifg.error_estimate + max(abs(fm), abs(avg)) * ig.error_estimate
    return _sandwich(
        "fejer",
        fm * ig.value,
        Side("weighted_integral", ifg.value, ifg.error_estimate),
        avg * ig.value,
        err,
        tol,
        record(f, g, iv, **(meta or {})),
    )


@guarded("hh-frac")
def hh_fractional(
    f: FunctionModel,
    alpha: float,
    iv: Interval,
    cfg: QuadConfig | None = None,
    tol: Tolerance = DEFAULT_TOL,
    check: bool = True,
    meta: dict | None = None,
) -> InequalityReport:
    """``f(m) <= Gamma(alpha+1)/(2(b-a)**alpha) [J_{a+} f(b) + J_{b-} f(a)] <= (f(a)+f(b))/2``.

    Requires ``0 <= a``.
    """
    alpha = check_order(alpha)
    if iv.a < 0:
        raise PreconditionError(f"fractional Hermite-Hadamard needs a >= 0, got a={iv.a!r}")
    if check:
        require_convex(f, iv)
    jl, jr = whole_pair(f.f, alpha, iv, cfg, f.kinks)
    c = gamma(alpha + 1.0) / (2.0 * iv.length**alpha)
    middle = Side("fractional_mean", c * (jl.value + jr.value), c * (jl.error_estimate + jr.error_estimate))
    return _sandwich(
        "hh-frac",
        f.fv(iv.midpoint),
        middle,
        0.5 * (f.fv(iv.a) + f.fv(iv.b)),
        middle.error_estimate,
        tol,
        record(f, None, iv, alpha=alpha, **(meta or {})),
    )


@guarded("fejer-frac")
def fejer_fractional(
    f: FunctionModel,
    g: WeightModel,
    alpha: float,
    iv: Interval,
    cfg: QuadConfig | None = None,
    tol: Tolerance = DEFAULT_TOL,
    check: bool = True,
    meta: dict | None = None,
) -> InequalityReport:
    """Weighted fractional sandwich with ``S = J_{a+} g(b) + J_{b-} g(a)``::

        f(m) S <= J_{a+}(fg)(b) + J_{b-}(fg)(a) <= (f(a)+f(b))/2 S
    """
    alpha = check_order(alpha)
    if check:
        require_convex(f, iv)
    require_fejer_weight(g, iv)
    gl, gr = whole_pair(g.g, alpha, iv, cfg)
    pl, pr = whole_pair(product(f, g), alpha, iv, cfg, f.kinks)
    s = gl.value + gr.value
    avg = 0.5 * (f.fv(iv.a) + f.fv(iv.b))
    fm = f.fv(iv.midpoint)
    err = pl.error_estimate + pr.error_estimate + max(abs(fm), abs(avg)) * (gl.error_estimate + gr.error_estimate)
    return _sandwich(
        "fejer-frac",
        fm * s,
        Side("weighted_fractional", pl.value + pr.value, pl.error_estimate + pr.error_estimate),
        avg * s,
        err,
        tol,
        record(f, g, iv, alpha=alpha, **(meta or {})),
    )
