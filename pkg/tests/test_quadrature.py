import math

import numpy as np
import pytest

from hhfrac import ConvergenceError, DomainError, EvaluationError, QuadConfig, integrate
from hhfrac import _kernels_py
from hhfrac.quadrature import (
    CumulativeIntegral,
    QuadResult,
    integrate_left_weighted,
    integrate_right_weighted,
    vectorized,
)

try:
    from hhfrac import _kernels
except ImportError:  # pragma: no cover
    _kernels = None

BACKENDS = [_kernels_py] + ([_kernels] if _kernels else [])


def test_embedded_gauss_nodes_match_legendre():
    nodes, wk, wg = _kernels_py._full_rule()
    g_nodes, g_weights = np.polynomial.legendre.leggauss(10)
    gauss_mask = wg != 0
    np.testing.assert_allclose(np.sort(nodes[gauss_mask]), g_nodes, atol=1e-15)
    np.testing.assert_allclose(wg[gauss_mask][np.argsort(nodes[gauss_mask])], g_weights, atol=1e-15)
    assert wk.sum() == pytest.approx(2.0, abs=1e-15)


def test_kronrod_rule_is_exact_to_degree_31():
    nodes, wk, _ = _kernels_py._full_rule()
    for k in range(0, 32):
        exact = 0.0 if k % 2 else 2.0 / (k + 1)
        assert wk @ nodes**k == pytest.approx(exact, abs=1e-14)


@pytest.mark.parametrize("mod", BACKENDS, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
def test_backend_values(mod):
    val, err, neval, nsub, ok = mod.adaptive_gk21(np.exp, np.array([0.0, 1.0]), 1e-12, 1e-12, 100)[:5]
    assert ok and val == pytest.approx(math.e - 1, rel=1e-14) and err < 1e-12 and neval >= 21


@pytest.mark.skipif(_kernels is None, reason="extension not built")
@pytest.mark.parametrize(
    "fn,breaks",
    [(np.sqrt, [0, 1]), (lambda x: np.abs(x - 0.3), [0, 1]), (lambda x: np.cos(30 * x), [0, 2, 3])],
)
def test_backends_agree(fn, breaks):
    b = np.array(breaks, dtype=float)
    py = _kernels_py.adaptive_gk21(fn, b, 1e-11, 1e-11, 500)
    cy = _kernels.adaptive_gk21(fn, b, 1e-11, 1e-11, 500)
    assert py[0] == pytest.approx(cy[0], rel=1e-14, abs=1e-15)
    assert py[3] == cy[3]


def test_polynomial_exact():
    r = integrate(lambda x: 3 * x**2 - x, -1.0, 2.0)
    assert r.value == pytest.approx(9.0 - 1.5, rel=1e-15)
    assert r.evaluations == 21


def test_kink_breakpoint_helps():
    f = lambda x: np.abs(x - 1 / 3)  # noqa: E731
    exact = (1 / 3) ** 2 / 2 + (2 / 3) ** 2 / 2
    with_point = integrate(f, 0, 1, points=[1 / 3])
    plain = integrate(f, 0, 1)
    assert with_point.value == pytest.approx(exact, rel=1e-15)
    assert plain.value == pytest.approx(exact, rel=1e-10)
    assert with_point.evaluations < plain.evaluations


def test_scalar_and_constant_integrands():
    assert integrate(math.sin, 0, math.pi).value == pytest.approx(2.0, rel=1e-13)
    assert integrate(lambda x: 2.5, 0, 2).value == pytest.approx(5.0)


def test_convergence_failure_carries_estimate():
    with pytest.raises(ConvergenceError) as info:
        integrate(lambda x: np.sin(1.0 / x), 1e-6, 1.0, QuadConfig(1e-14, 1e-14, 5))
    assert math.isfinite(info.value.value) and info.value.evaluations > 0


def test_nonfinite_integrand():
    with pytest.raises(EvaluationError):
        integrate(lambda x: np.where(x > 0.7, np.nan, x), 0, 1)


def test_rejects_bad_input():
    with pytest.raises(DomainError):
        integrate(np.exp, 1.0, 1.0)
    with pytest.raises(DomainError):
        QuadConfig(0.0, 1e-10)
    with pytest.raises(DomainError):
        QuadConfig(max_subdivisions=0)


@pytest.mark.parametrize("alpha", [0.1, 0.3, 0.5, 1.0, 2.5])
def test_weighted_against_beta_function(alpha):
    # int_0^1 t^(alpha-1) (1-t)^2 dt = B(alpha, 3)
    exact = math.gamma(alpha) * 2.0 / math.gamma(alpha + 3)
    left = integrate_left_weighted(lambda t: (1 - t) ** 2, alpha, 0.0, 1.0)
    right = integrate_right_weighted(lambda t: t**2, alpha, 0.0, 1.0)
    for r in (left, right):
        # for alpha > 1 the substituted integrand has a u**(1/alpha) cusp at 0
        assert abs(r.value - exact) <= max(r.error_estimate, 1e-14 * exact)
        assert r.value == pytest.approx(exact, rel=1e-9)


def test_weighted_mpmath_oracle():
    mp = pytest.importorskip("mpmath")
    mp.mp.dps = 30
    alpha, a, x = 0.35, 0.4, 2.1
    ref = mp.quad(lambda t: (t - a) ** (alpha - 1) * mp.cos(t), [a, x])
    got = integrate_left_weighted(np.cos, alpha, a, x)
    assert got.value == pytest.approx(float(ref), rel=1e-11)


def test_weighted_maps_kinks():
    alpha = 0.5
    f = lambda t: np.abs(t - 0.25)  # noqa: E731
    with_kink = integrate_left_weighted(f, alpha, 0.0, 1.0, points=[0.25])
    ref = integrate(lambda u: np.abs(u**2 - 0.25), 0.0, 1.0, points=[0.5]).value / alpha
    assert with_kink.value == pytest.approx(ref, rel=1e-13)


def test_cumulative_matches_antiderivative():
    c = CumulativeIntegral(np.cos, 0.0, 4.0)
    s = np.linspace(0.0, 4.0, 101)
    np.testing.assert_allclose(c(s), np.sin(s), atol=1e-13)
    assert c.total.value == pytest.approx(math.sin(4.0), abs=1e-14)


def test_quad_result_algebra():
    r = QuadResult(1.0, 0.1, 3) + QuadResult(2.0, 0.2, 4)
    assert r == QuadResult(3.0, pytest.approx(0.3), 7)
    assert (-r).error_estimate == r.error_estimate
    assert r.scaled(-2).value == -6.0 and r.scaled(-2).error_estimate == pytest.approx(0.6)


def test_vectorized_broadcasts_constants():
    v = vectorized(lambda x: 1.0)
    assert v(np.zeros(4)).shape == (4,)
