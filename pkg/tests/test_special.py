import math

import pytest

from hhfrac import DomainError, gamma, rl_power_rule
from hhfrac import _kernels_py
from hhfrac.special import GAMMA_MAX_ARG

try:
    from hhfrac import _kernels
except ImportError:  # pragma: no cover
    _kernels = None

# 40-digit mpmath values, frozen
REFERENCE = {
    0.1: 9.5135076986687318363,
    0.5: 1.7724538509055160273,
    1.0: 1.0,
    1.5: 0.88622692545275801365,
    2.0: 1.0,
    3.7: 4.1706517837966031654,
    5.0: 24.0,
    10.3: 716430.68906237524455,
    50.0: 6.0828186403426756087e62,
    170.5: 5.5620924145599996107e305,
}


@pytest.mark.parametrize("x,expected", sorted(REFERENCE.items()))
def test_matches_frozen_reference(x, expected):
    assert gamma(x) == pytest.approx(expected, rel=1e-12)


def test_half_integer_closed_form():
    for n in range(8):
        expected = math.factorial(2 * n) / (4**n * math.factorial(n)) * math.sqrt(math.pi)
        assert gamma(n + 0.5) == pytest.approx(expected, rel=1e-13)


def test_integers_are_factorials():
    for n in range(1, 25):
        assert gamma(n) == pytest.approx(math.factorial(n - 1), rel=1e-13)


def test_live_mpmath_oracle():
    mp = pytest.importorskip("mpmath")
    for x in (0.013, 0.77, 2.5, 7.25, 33.3, 99.9):
        assert gamma(x) == pytest.approx(float(mp.gamma(mp.mpf(x))), rel=1e-12)


@pytest.mark.parametrize("bad", [0.0, -1.0, -0.5, math.nan, math.inf])
def test_rejects_nonpositive_and_nonfinite(bad):
    with pytest.raises(DomainError):
        gamma(bad)


def test_overflow_is_reported():
    assert math.isfinite(gamma(171.0))
    with pytest.raises(OverflowError):
        gamma(GAMMA_MAX_ARG + 1)


@pytest.mark.skipif(_kernels is None, reason="extension not built")
def test_backends_agree():
    for x in (0.05, 0.5, 3.3, 50.0, 170.0):
        assert _kernels.lanczos_gamma(x) == pytest.approx(_kernels_py.lanczos_gamma(x), rel=1e-15)


def test_power_rule_small_cases():
    # J^1 of (t-a)^0 is x-a, J^2 of 1 is (x-a)^2/2
    assert rl_power_rule(1.0, 0.0, 0.0, 3.0) == pytest.approx(3.0)
    assert rl_power_rule(2.0, 0.0, 1.0, 3.0) == pytest.approx(2.0)
    assert rl_power_rule(0.5, 0.0, 0.0, 1.0) == pytest.approx(1.0 / gamma(1.5))


def test_power_rule_validation():
    with pytest.raises(DomainError):
        rl_power_rule(0.0, 1.0, 0.0, 1.0)
    with pytest.raises(DomainError):
        rl_power_rule(1.0, -0.5, 0.0, 1.0)
    with pytest.raises(DomainError):
        rl_power_rule(1.0, 1.0, 1.0, 1.0)
