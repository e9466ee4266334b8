"""Evaluators that turn an instance into an ``InequalityReport``."""

from .bounds import (
    holder_rhs,
    mean_bound_rhs,
    mean_holder_rhs,
    midpoint_holder_bound,
    midpoint_mean_bound,
    midpoint_mean_holder_bound,
    midpoint_power_mean_bound,
    midpoint_sup_bound,
    power_mean_rhs,
    sup_bound_rhs,
)
from .identities import (
    kernel_integral,
    midpoint_identity_residual,
    midpoint_mean_identity_residual,
    weighted_power_identity_residual,
)
from .kernel import KernelK, eval_kernel
from .reductions import (
    holder_bound_at_unit_weight,
    midpoint_identity_at_order_one,
    sup_bound_at_unit_weight,
)
from .report import (
    DEFAULT_TOL,
    FAIL,
    INCONCLUSIVE,
    PASS,
    InequalityReport,
    Side,
    Tolerance,
    verdict,
    worst,
)
from .sandwich import fejer_classical, fejer_fractional, hh_classical, hh_fractional

__all__ = [
    "DEFAULT_TOL",
    "FAIL",
    "INCONCLUSIVE",
    "PASS",
    "InequalityReport",
    "KernelK",
    "Side",
    "Tolerance",
    "eval_kernel",
    "fejer_classical",
    "fejer_fractional",
    "hh_classical",
    "hh_fractional",
    "holder_bound_at_unit_weight",
    "holder_rhs",
    "kernel_integral",
    "mean_bound_rhs",
    "mean_holder_rhs",
    "midpoint_holder_bound",
    "midpoint_identity_at_order_one",
    "midpoint_identity_residual",
    "midpoint_mean_bound",
    "midpoint_mean_holder_bound",
    "midpoint_mean_identity_residual",
    "midpoint_power_mean_bound",
    "midpoint_sup_bound",
    "power_mean_rhs",
    "sup_bound_at_unit_weight",
    "sup_bound_rhs",
    "verdict",
    "weighted_power_identity_residual",
    "worst",
]
