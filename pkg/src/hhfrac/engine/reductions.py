"""Consistency checks at ``g = 1`` and ``alpha = 1``.

At that point the fractional midpoint quantities collapse to classical ones:
the midpoint deviation becomes ``f(m)(b-a) - int f`` and the fractional bounds
become ``(b-a)`` times the classical midpoint-mean bounds.  Each check
compares two independently assembled values; the report fails if any pair
disagrees beyond its tolerance.
"""

from __future__ import annotations

from ..models import FunctionModel, Interval, WeightModel, parse_weight
from ..quadrature import QuadConfig, integrate
from .bounds import _check_exponent, holder_rhs, mean_bound_rhs, mean_holder_rhs, sup_bound_rhs
from .common import abs_df_endpoints, guarded, midpoint_sides, product, record, weight_norms
from .report import DEFAULT_TOL, InequalityReport, Side, Tolerance, verdict, worst

# closed-form right-hand sides agree to rounding only
FORMULA_TOL = Tolerance(atol=0.0, rtol=1e-12)


def _pairs_report(name, pairs, instance) -> InequalityReport:
    """``pairs``: ``(label, x, y, err, tol)``; each pair is judged as an equality."""
    sides: list[Side] = []
    verdicts: list[str] = []
    slacks: list[float] = []
    errs = 0.0
    checks = {}
    for label, x, y, err, tol in pairs:
        slack = -abs(x - y)
        v = verdict(slack, max(abs(x), abs(y)), err, tol)
        sides += [Side(f"{label}_a", x, err), Side(f"{label}_b", y)]
        verdicts.append(v)
        slacks.append(slack)
        errs += err
        checks[label] = v
    return InequalityReport(
        name=name,
        sides=sides,
        slack=min(slacks),
        verdict=worst(*verdicts),
        instance=instance,
        error_budget=errs,
        notes={"checks": checks},
    )


def _classical_deviation(f: FunctionModel, iv: Interval, cfg) -> tuple[float, float]:
    """``f(m)(b-a) - int f`` by plain quadrature."""
    total = integrate(f.f, iv.a, iv.b, cfg, f.kinks)
    return f.fv(iv.midpoint) * iv.length - total.value, total.error_estimate


@guarded("order-one-identity")
def midpoint_identity_at_order_one(
    f: FunctionModel,
    g: WeightModel,
    iv: Interval,
    cfg: QuadConfig | None = None,
    tol: Tolerance = DEFAULT_TOL,
    meta: dict | None = None,
) -> InequalityReport:
    """Fractional midpoint deviation at ``alpha = 1`` vs ``f(m) int g - int f g``."""
    mid = midpoint_sides(f, g, 1.0, iv, cfg)
    ig = integrate(g.g, iv.a, iv.b, cfg)
    ifg = integrate(product(f, g), iv.a, iv.b, cfg, f.kinks)
    classical = f.fv(iv.midpoint) * ig.value - ifg.value
    err = mid.error_estimate + abs(f.fv(iv.midpoint)) * ig.error_estimate + ifg.error_estimate
    return _pairs_report(
        "order-one-identity",
        [("lhs", mid.value, classical, err, tol)],
        record(f, g, iv, alpha=1.0, **(meta or {})),
    )


def _unit_weight_lhs(f, iv, cfg, tol):
    one = parse_weight("one", iv)
    mid = midpoint_sides(f, one, 1.0, iv, cfg)
    dev, dev_err = _classical_deviation(f, iv, cfg)
    return one, ("lhs", abs(mid.value), abs(dev), mid.error_estimate + dev_err, tol)


@guarded("unit-weight-sup")
def sup_bound_at_unit_weight(
    f: FunctionModel,
    iv: Interval,
    cfg: QuadConfig | None = None,
    tol: Tolerance = DEFAULT_TOL,
    meta: dict | None = None,
) -> InequalityReport:
    """Sup-norm bound at ``g = 1``, ``alpha = 1`` vs ``(b-a)`` times the classical bound."""
    one, lhs_pair = _unit_weight_lhs(f, iv, cfg, tol)
    A, B = abs_df_endpoints(f, iv)
    L = iv.length
    _, final = sup_bound_rhs(A, B, L, 1.0, weight_norms(one, iv))
    return _pairs_report(
        "unit-weight-sup",
        [
            ("rhs_vs_scaled_classical", final, L * mean_bound_rhs(A, B, L), 0.0, FORMULA_TOL),
            ("rhs_vs_closed_form", final, L * L * (A + B) / 8.0, 0.0, FORMULA_TOL),
            lhs_pair,
        ],
        record(f, one, iv, alpha=1.0, **(meta or {})),
    )


@guarded("unit-weight-holder")
def holder_bound_at_unit_weight(
    f: FunctionModel,
    iv: Interval,
    p: float,
    cfg: QuadConfig | None = None,
    tol: Tolerance = DEFAULT_TOL,
    meta: dict | None = None,
) -> InequalityReport:
    """Holder bound at ``g = 1``, ``alpha = 1`` vs ``(b-a)`` times the classical Holder bound."""
    p = _check_exponent("p", p)
    one, lhs_pair = _unit_weight_lhs(f, iv, cfg, tol)
    A, B = abs_df_endpoints(f, iv)
    L = iv.length
    _, final = holder_rhs(A, B, L, 1.0, p, weight_norms(one, iv))
    return _pairs_report(
        "unit-weight-holder",
        [
            ("rhs_vs_scaled_classical", final, L * mean_holder_rhs(A, B, L, p), 0.0, FORMULA_TOL),
            lhs_pair,
        ],
        record(f, one, iv, alpha=1.0, p=p, **(meta or {})),
    )
