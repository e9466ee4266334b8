import math

import numpy as np
import pytest

from hhfrac import DomainError, Interval, gamma, j_left, j_right, midpoint_pair, rl_power_rule, whole_pair


@pytest.mark.parametrize("alpha", [0.25, 0.5, 1.0, 2.5])
@pytest.mark.parametrize("beta", [0.0, 1.0, 2.5])
def test_left_operator_power_rule(alpha, beta):
    a, x = 1.3, 4.7
    got = j_left(lambda t: (t - a) ** beta, alpha, a, x).value
    assert got == pytest.approx(rl_power_rule(alpha, beta, a, x), rel=1e-9)


@pytest.mark.parametrize("alpha", [0.25, 0.9, 1.5])
def test_right_operator_mirror_rule(alpha):
    x, b, beta = 0.0, 1.0, 2.5
    got = j_right(lambda t: (b - t) ** beta, alpha, x, b).value
    assert got == pytest.approx(rl_power_rule(alpha, beta, x, b), rel=1e-9)


def test_order_one_is_plain_integral():
    assert j_left(np.exp, 1.0, 0.0, 1.0).value == pytest.approx(math.e - 1, rel=1e-13)


def test_order_zero_is_identity():
    assert j_left(np.exp, 0.0, 0.0, 0.7).value == pytest.approx(math.exp(0.7))
    assert j_right(np.exp, 0.0, 0.7, 1.0).value == pytest.approx(math.exp(0.7))


def test_semigroup_on_exponential():
    # J^a J^b e^t at x equals J^(a+b) e^t at x; inner operator evaluated pointwise
    a0, x, alpha, beta = 0.0, 1.2, 0.6, 0.7
    inner = lambda s: np.array([j_left(np.exp, beta, a0, v).value if v > a0 else 0.0 for v in np.atleast_1d(s)])  # noqa: E731
    lhs = j_left(inner, alpha, a0, x).value
    rhs = j_left(np.exp, alpha + beta, a0, x).value
    assert lhs == pytest.approx(rhs, rel=1e-8)


def test_pairs_use_the_right_anchors():
    iv = Interval(0.0, 2.0)
    alpha = 0.5
    left, right = midpoint_pair(lambda t: np.ones_like(t), alpha, iv)
    # 1/Gamma(a) int_0^1 t^(a-1) dt = 1/Gamma(a+1), same on the right half
    assert left.value == pytest.approx(1 / gamma(alpha + 1), rel=1e-12)
    assert right.value == pytest.approx(1 / gamma(alpha + 1), rel=1e-12)
    wl, wr = whole_pair(lambda t: t, alpha, iv)
    assert wl.value == pytest.approx(rl_power_rule(alpha, 1.0, 0.0, 2.0), rel=1e-10)
    assert wr.value == pytest.approx(2.0 ** (alpha + 1) / gamma(alpha + 1) - rl_power_rule(alpha, 1.0, 0.0, 2.0), rel=1e-10)


@pytest.mark.parametrize("alpha", [-1.0, math.nan, math.inf])
def test_bad_orders(alpha):
    with pytest.raises(DomainError):
        j_left(np.exp, alpha, 0.0, 1.0)


def test_bad_points():
    with pytest.raises(DomainError):
        j_left(np.exp, 0.5, 1.0, 1.0)
    with pytest.raises(DomainError):
        j_right(np.exp, 0.5, 2.0, 1.0)
