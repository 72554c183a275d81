"""Quadrature engines: exactness, oracles, and failure modes."""

import math

import numpy as np
import pytest

from relbargmann.errors import DomainError, NonConvergenceError
from relbargmann.hypergeom import ln_gamma
from relbargmann.quadrature import (QuadratureRule, disk_radial_rule,
                                    gauss_jacobi, gauss_legendre,
                                    integrate_disk, integrate_halfline,
                                    jacobi_rule_01)

# int_0^1 t^0.6 (1-t)^(-1/2) cos(0.6 ln t) dt, high-precision reference
COS_LOG_INTEGRAL = 1.4211313893733018673
# int_0^inf |Gamma(1.6+ix)|^4 / |Gamma(ix)|^2 dx
GAMMA_RATIO_HALFLINE = 1.3272818427052103919


def test_gauss_legendre_one_point():
    rule = gauss_legendre(1)
    assert rule.nodes.tolist() == [0.0]
    assert rule.weights.tolist() == [2.0]


def test_gauss_legendre_degree_exactness():
    rule = gauss_legendre(5)
    val = np.sum(rule.weights * rule.nodes ** 8)
    assert abs(val - 2.0 / 9.0) < 1e-14


def test_gauss_legendre_exp():
    rule = gauss_legendre(64)
    val = np.sum(rule.weights * np.exp(rule.nodes))
    assert abs(val - (math.e - 1.0 / math.e)) < 1e-14


@pytest.mark.parametrize("n", [2, 5, 9, 17])
def test_gauss_legendre_monomial_exactness(n):
    rule = gauss_legendre(n)
    for deg in range(2 * n):
        val = np.sum(rule.weights * rule.nodes ** deg)
        exact = 0.0 if deg % 2 else 2.0 / (deg + 1)
        assert abs(val - exact) < 5e-14


def test_gauss_legendre_symmetry():
    rule = gauss_legendre(12)
    assert np.allclose(rule.nodes, -rule.nodes[::-1])


def test_rule_size_validation():
    with pytest.raises(DomainError):
        gauss_legendre(0)
    with pytest.raises(DomainError):
        gauss_legendre(5000)


def test_gauss_jacobi_reduces_to_legendre():
    gj = gauss_jacobi(16, 0.0, 0.0)
    gl = gauss_legendre(16)
    assert np.allclose(gj.nodes, gl.nodes)
    assert np.allclose(gj.weights, gl.weights)


def test_gauss_jacobi_validation():
    with pytest.raises(DomainError):
        gauss_jacobi(8, -1.0, 0.0)
    with pytest.raises(DomainError):
        gauss_jacobi(8, 0.0, -1.5)


def test_jacobi_beta_function():
    rule = jacobi_rule_01(32, 0.8, -0.5)
    val = float(np.sum(rule.weights))
    beta = math.exp((ln_gamma(1.8) + ln_gamma(0.5) - ln_gamma(2.3)).real)
    assert abs(val - beta) < 1e-12


def test_jacobi_log_oscillatory():
    # doubling the rule reaches the reference for the carried cos(xi ln t)
    errors = []
    for n in (512, 2048):
        rule = jacobi_rule_01(n, 0.6, -0.5)
        val = float(np.sum(rule.weights * np.cos(0.6 * np.log(rule.nodes))))
        errors.append(abs(val - COS_LOG_INTEGRAL))
    assert errors[1] < 1e-10
    assert errors[1] < errors[0]


def test_quadrature_rule_validation():
    with pytest.raises(DomainError):
        QuadratureRule(nodes=np.array([0.5]), weights=np.array([-1.0]),
                       domain="interval")
    with pytest.raises(DomainError):
        QuadratureRule(nodes=np.array([0.5]), weights=np.array([1.0, 2.0]),
                       domain="interval")


def test_halfline_exponential():
    val, err = integrate_halfline(lambda x: np.exp(-x), decay_scale=1.0,
                                  tol=1e-12)
    assert abs(val - 1.0) < 1e-12
    assert err < 1e-10


def test_halfline_gaussian_moment():
    val, _ = integrate_halfline(lambda x: x * np.exp(-x * x),
                                decay_scale=1.0, tol=1e-12)
    assert abs(val - 0.5) < 1e-12


def test_halfline_gamma_ratio_weight():
    from scipy.special import loggamma

    def f(x):
        x = np.asarray(x, dtype=float)
        out = np.zeros_like(x)
        pos = x > 0
        out[pos] = np.exp(4.0 * loggamma(1.6 + 1j * x[pos]).real
                          - 2.0 * loggamma(1j * x[pos]).real)
        return out

    val, _ = integrate_halfline(f, decay_scale=0.5, tol=1e-10)
    assert abs(val.real - GAMMA_RATIO_HALFLINE) < 1e-8 * GAMMA_RATIO_HALFLINE
    # step-halving reference run: finer panels agree
    ref, _ = integrate_halfline(f, decay_scale=0.25, tol=1e-11, nodes=32)
    assert abs(val - ref) < 1e-8 * abs(ref)


def test_halfline_error_estimate_shrinks_with_nodes():
    from scipy.special import loggamma

    def f(x):
        x = np.asarray(x, dtype=float)
        out = np.zeros_like(x)
        pos = x > 0
        out[pos] = np.exp(4.0 * loggamma(1.6 + 1j * x[pos]).real
                          - 2.0 * loggamma(1j * x[pos]).real)
        return out

    _, err_coarse = integrate_halfline(f, decay_scale=1.0, tol=1e-6, nodes=6,
                                       max_bisect=0)
    _, err_fine = integrate_halfline(f, decay_scale=1.0, tol=1e-6, nodes=12,
                                     max_bisect=0)
    assert err_fine < err_coarse


def test_halfline_nonconvergence():
    with pytest.raises(NonConvergenceError):
        integrate_halfline(lambda x: 1.0 / (1.0 + np.asarray(x)),
                           decay_scale=0.5, tol=1e-10)


def test_halfline_fixed_layout_is_linear():
    f = lambda x: np.exp(-x)
    g = lambda x: np.exp(-2.0 * x) * np.cos(x)
    combo = lambda x: 2.0 * f(x) - 3.0 * g(x)
    vf, _ = integrate_halfline(f, decay_scale=0.5, tol=1e-10, length=30.0)
    vg, _ = integrate_halfline(g, decay_scale=0.5, tol=1e-10, length=30.0)
    vc, _ = integrate_halfline(combo, decay_scale=0.5, tol=1e-10, length=30.0)
    assert abs(vc - (2.0 * vf - 3.0 * vg)) < 1e-15


def test_disk_constant_weight_mass():
    sigma = 4.0
    val = integrate_disk(lambda z: np.ones(z.shape), sigma - 2.0, tol=1e-12)
    assert abs(val - math.pi / (sigma - 1.0)) < 1e-12


def test_disk_angular_symmetry():
    val = integrate_disk(lambda z: z, 2.0, tol=1e-12)
    assert abs(val) < 1e-14


def test_disk_radial_rule_domain_tag():
    rule = disk_radial_rule(8, 3.0)
    assert rule.domain == "disk_radial"
    assert np.all((rule.nodes > 0) & (rule.nodes < 1))


def test_disk_weight_validation():
    with pytest.raises(DomainError):
        integrate_disk(lambda z: np.ones(z.shape), -1.0)
