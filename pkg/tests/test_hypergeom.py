"""Hypergeometric kernels: frozen oracles, reductions, and domain checks."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.polynomial.legendre import leggauss

from relbargmann.errors import DomainError, NonConvergenceError, PoleError
from relbargmann.hypergeom import (F5Args, appell_f1, gauss_2f1, gauss_2f1_vec,
                                   hyp3f2_terminating_unit, kdf_f5,
                                   kdf_f5_integral, kdf_f5_series, ln_gamma,
                                   pochhammer, reciprocal_gamma)

# mpmath loggamma(2+3i), 30 digits
LOGGAMMA_2_3I = complex(-2.0928517530927333496, 2.3023965434668676262)
# mpmath hyp2f1(0.9+0.4i, 1.3-0.2i; 2.1+0.1i; 0.35+0.2i)
HYP2F1_SPOT = complex(1.1827288309065334069, 0.26332115111934873008)
# 3F2(-3, 1.8+0.6i, 1.8-0.6i; 3.6, 2.3; 1), exact finite sum at 30 digits
HYP3F2_SPOT = 0.25588969726658213052


class TestLnGamma:
    def test_at_one(self):
        assert ln_gamma(1.0) == 0.0

    def test_at_half(self):
        assert abs(ln_gamma(0.5) - math.log(math.sqrt(math.pi))) < 1e-14

    def test_complex_reference(self):
        assert abs(ln_gamma(2 + 3j) - LOGGAMMA_2_3I) < 1e-12

    def test_exp_matches_factorials(self):
        for n in range(1, 10):
            assert abs(np.exp(ln_gamma(n + 1)) - math.factorial(n)) \
                < 1e-12 * math.factorial(n)

    @pytest.mark.parametrize("bad", [0.0, -1.0, -7.0])
    def test_poles(self, bad):
        with pytest.raises(PoleError):
            ln_gamma(bad)


class TestReciprocalGamma:
    def test_regular_points(self):
        assert abs(reciprocal_gamma(2.5) - 1.0 / math.gamma(2.5)) < 1e-14
        w = 1.3 + 0.7j
        assert abs(reciprocal_gamma(w) - np.exp(-ln_gamma(w))) < 1e-14

    @pytest.mark.parametrize("zero", [0.0, -1.0, -2.0, -5.0])
    def test_entire_zeros(self, zero):
        assert reciprocal_gamma(zero) == 0.0

    def test_near_pole_continuity(self):
        eps = 1e-8
        assert abs(reciprocal_gamma(eps)) < 2e-8


class TestPochhammer:
    def test_empty_product(self):
        assert pochhammer(1.7 + 0.3j, 0) == 1.0

    def test_factorial(self):
        assert pochhammer(1.0, 5) == 120.0

    def test_gamma_ratio(self):
        # (a)_n = Gamma(a + n)/Gamma(a), cross-checked through ln_gamma
        a, n = 2.8, 7
        ratio = np.exp(ln_gamma(a + n) - ln_gamma(a))
        assert abs(pochhammer(a, n) - ratio) < 1e-12 * abs(ratio)

    def test_large_order_switches_to_gamma(self):
        # n = 140 exceeds the direct-product threshold but stays clear of
        # double-precision overflow
        a = 0.3 + 0.2j
        direct = 1.0 + 0.0j
        for i in range(140):
            direct *= a + i
        assert abs(pochhammer(a, 140) - direct) < 1e-10 * abs(direct)

    def test_terminating_zero(self):
        assert pochhammer(-3.0, 5) == 0.0

    def test_negative_order_rejected(self):
        with pytest.raises(DomainError):
            pochhammer(1.0, -1)


class TestGauss2F1:
    def test_at_zero(self):
        assert gauss_2f1(0.3, 1.7, 2.2, 0.0) == 1.0

    def test_degree_one(self):
        b, c, x = 1.4, 2.3, 0.37
        assert abs(gauss_2f1(-1.0, b, c, x) - (1.0 - b * x / c)) < 1e-15

    def test_pfaff_spot(self):
        a, b, c, x = 0.7, 0.3, 1.9, 0.4
        lhs = gauss_2f1(a, b, c, x)
        rhs = (1.0 - x) ** (-a) * gauss_2f1(a, c - b, c, x / (x - 1.0))
        assert abs(lhs - rhs) < 1e-14

    def test_complex_reference(self):
        got = gauss_2f1(0.9 + 0.4j, 1.3 - 0.2j, 2.1 + 0.1j, 0.35 + 0.2j)
        assert abs(got - HYP2F1_SPOT) < 1e-13

    def test_domain_error_outside_disk(self):
        with pytest.raises(DomainError):
            gauss_2f1(0.5, 0.7, 1.9, 1.2)

    def test_terminating_outside_disk(self):
        # polynomial case is exact at any argument
        val = gauss_2f1(-2.0, 1.5, 2.5, 3.0)
        exact = 1.0 - 2 * 1.5 / 2.5 * 3.0 + (2 * 1) / 2 * (1.5 * 2.5) / (2.5 * 3.5) * 9.0
        assert abs(val - exact) < 1e-12

    def test_lower_pole(self):
        with pytest.raises(PoleError):
            gauss_2f1(0.5, 0.7, -2.0, 0.3)

    def test_pole_after_termination_is_fine(self):
        # series terminates at the -1 upper parameter before c = -3 bites
        val = gauss_2f1(-1.0, 2.0, -3.0, 0.5)
        assert abs(val - (1.0 - 2.0 * 0.5 / -3.0)) < 1e-14

    @settings(max_examples=60, deadline=None)
    @given(a=st.floats(-2.0, 3.0), b=st.floats(-2.0, 3.0),
           c=st.floats(0.5, 4.0), x=st.floats(-0.49, 0.49))
    def test_pfaff_property(self, a, b, c, x):
        lhs = gauss_2f1(a, b, c, x)
        rhs = (1.0 - x) ** (-a) * gauss_2f1(a, c - b, c, x / (x - 1.0))
        assert abs(lhs - rhs) <= 1e-10 * (1.0 + abs(lhs))

    @settings(max_examples=40, deadline=None)
    @given(g=st.floats(1.05, 2.5), xi=st.floats(0.01, 3.0),
           x=st.floats(-0.45, 0.45))
    def test_conjugation_symmetry(self, g, xi, x):
        # conjugate parameter pairs give conjugate values at real arguments
        up = gauss_2f1(g + 1j * xi, g - 1j * xi, 2 * g, x)
        dn = gauss_2f1(g - 1j * xi, g + 1j * xi, 2 * g, x)
        assert abs(up - np.conj(dn)) < 1e-12 * (1.0 + abs(up))
        assert abs(up.imag) < 1e-12 * (1.0 + abs(up))

    def test_vectorised_matches_scalar(self):
        xi = np.array([0.3, 1.1, 2.4])
        a = 1.4 - 1j * xi
        b = 0.5 - 1j * xi
        got = gauss_2f1_vec(a, b, 1.9, 0.3 + 0.1j)
        want = [gauss_2f1(ai, bi, 1.9, 0.3 + 0.1j) for ai, bi in zip(a, b)]
        assert np.max(np.abs(got - np.asarray(want))) < 1e-13


class TestHyp3F2:
    def test_single_term(self):
        assert hyp3f2_terminating_unit(0, 1.1, 2.2, 3.3, 4.4) == 1.0

    def test_two_terms(self):
        a2, a3, b1, b2 = 2.0, 3.0, 1.5, 2.5
        want = 1.0 - a2 * a3 / (b1 * b2)
        assert abs(hyp3f2_terminating_unit(1, a2, a3, b1, b2) - want) < 1e-15

    def test_reference_value(self):
        got = hyp3f2_terminating_unit(3, 1.8 + 0.6j, 1.8 - 0.6j, 3.6, 2.3)
        assert abs(got - HYP3F2_SPOT) < 1e-14

    def test_euler_integral_oracle(self):
        # 3F2(alpha, beta, rho; tau, rho+omega; 1) equals the Euler-type
        # integral of the inner Gauss polynomial, done here with a test-local
        # logit-panel quadrature that never touches the library integrator.
        g, xi = 1.8, 0.6
        alpha, beta = -3, g + 1j * xi
        rho, tau, omega = g - 1j * xi, 2 * g, 0.5 + 1j * xi

        def inner(t):
            return np.asarray([gauss_2f1(alpha, beta, tau, tv) for tv in t])

        xg, wg = leggauss(24)
        total = 0.0 + 0.0j
        h = 0.4
        for v0 in np.arange(-60.0, 90.0, h):
            v = v0 + 0.5 * h + 0.5 * h * xg
            log_t = -np.logaddexp(0.0, -v)
            log_1mt = -np.logaddexp(0.0, v)
            t = np.exp(log_t)
            vals = np.exp(rho * log_t + omega * log_1mt) * inner(t)
            total += 0.5 * h * np.sum(wg * vals)
        total *= np.exp(ln_gamma(rho + omega) - ln_gamma(rho) - ln_gamma(omega))
        want = hyp3f2_terminating_unit(3, beta, rho, tau, rho + omega)
        assert abs(total - want) < 1e-9

    def test_denominator_pole(self):
        with pytest.raises(PoleError):
            hyp3f2_terminating_unit(4, 1.0, 2.0, -2.0, 3.0)


class TestAppellF1:
    def test_at_origin(self):
        assert appell_f1(0.9, 1.1, 1.3, 2.7, 0.0, 0.0) == 1.0

    def test_gauss_collapse_at_d_eq_b_plus_c(self):
        a, b, c = 1.3, 2.1, 0.4
        x, y = 0.2, -0.1
        lhs = appell_f1(a, b, c, b + c, x, y)
        rhs = (1.0 - y) ** (-a) * gauss_2f1(a, b, b + c, (x - y) / (1.0 - y))
        assert abs(lhs - rhs) < 1e-12

    def test_second_series_collapse(self):
        a, b, d, x = 0.8, 1.7, 2.9, 0.33
        got = appell_f1(a, b, 0.0, d, x, 0.64)
        assert abs(got - gauss_2f1(a, b, d, x)) < 1e-13

    def test_terminating_index_allows_large_y(self):
        # c = -2 terminates the y series; assemble the 3-term collapse by hand
        a, b, d, x, y = 0.9, 1.2, 2.6, 0.25, 4.0
        want = sum(pochhammer(a, q) * pochhammer(-2.0, q)
                   / (pochhammer(d, q) * math.factorial(q)) * y ** q
                   * gauss_2f1(a + q, b, d + q, x) for q in range(3))
        assert abs(appell_f1(a, b, -2.0, d, x, y) - want) < 1e-12

    def test_domain_error(self):
        with pytest.raises(DomainError):
            appell_f1(0.5, 0.6, 0.7, 1.8, 1.1, 0.2)

    def test_denominator_pole(self):
        with pytest.raises(PoleError):
            appell_f1(0.5, 0.6, 0.7, -1.0, 0.1, 0.2)


def _kernel_args(m=0, xi=0.7, chi=0.15, zeta=0.2):
    g = 1.3660254037844386
    return F5Args(c=g + 1j * xi, d=g - 1j * xi, e=g + 0.5, a=2 * g + m,
                  a_prime=2 * g, chi=chi, zeta=zeta)


class TestKdfF5:
    def test_chi_zero_collapse(self):
        args = F5Args(c=1.2 + 0.5j, d=1.2 - 0.5j, e=1.7, a=3.4, a_prime=2.4,
                      chi=0.0, zeta=0.2)
        want = gauss_2f1(args.c, args.d, args.e, 0.2)
        assert abs(kdf_f5(args) - want) < 1e-11
        assert abs(kdf_f5_integral(args) - want) < 1e-10

    def test_a_equals_aprime_collapse(self):
        args = F5Args(c=1.2 + 0.5j, d=1.2 - 0.5j, e=1.7, a=2.4, a_prime=2.4,
                      chi=0.15, zeta=0.2)
        want = gauss_2f1(args.c, args.d, args.e, 0.35)
        assert abs(kdf_f5(args) - want) < 1e-12

    def test_series_vs_integral_generic(self):
        args = F5Args(c=1.5 + 0.3j, d=1.5 - 0.3j, e=2.0, a=4.2, a_prime=3.0,
                      chi=0.1, zeta=0.15)
        assert abs(kdf_f5_series(args) - kdf_f5_integral(args)) < 1e-9

    @pytest.mark.parametrize("m", [0, 1, 2, 3])
    def test_three_paths_agree_integer_gap(self, m):
        args = _kernel_args(m=m)
        series = kdf_f5_series(args)
        assert abs(series - kdf_f5(args)) < 1e-12 * (1 + abs(series))
        assert abs(series - kdf_f5_integral(args)) < 1e-10 * (1 + abs(series))

    def test_wide_domain_against_series_limit(self):
        # |zeta| > 1: the reduction path keeps working where the series cannot
        args = _kernel_args(m=1, chi=-5.0 / 3.0, zeta=4.0 / 3.0)
        with pytest.raises(DomainError):
            kdf_f5_series(args)
        val = kdf_f5(args)
        assert np.isfinite(val.real) and np.isfinite(val.imag)

    def test_conjugation_symmetry(self):
        args = _kernel_args(m=1, xi=0.9)
        conj_args = F5Args(c=np.conj(args.c), d=np.conj(args.d), e=args.e,
                           a=args.a, a_prime=args.a_prime, chi=args.chi,
                           zeta=args.zeta)
        assert abs(kdf_f5(conj_args) - np.conj(kdf_f5(args))) < 1e-12

    def test_validation(self):
        with pytest.raises(DomainError):
            kdf_f5(F5Args(c=1.0, d=-0.5, e=1.0, a=2.0, a_prime=2.0,
                          chi=0.1, zeta=0.1))
        with pytest.raises(DomainError):
            kdf_f5(F5Args(c=1.0, d=0.5, e=0.3, a=2.0, a_prime=2.0,
                          chi=0.1, zeta=0.1))
        with pytest.raises(PoleError):
            kdf_f5(F5Args(c=1.0, d=0.5, e=2.0, a=2.0, a_prime=-1.0,
                          chi=0.1, zeta=0.1))

    def test_no_valid_path_raises(self):
        # non-integer gap, far outside both series and integral domains
        args = F5Args(c=1.5 + 0.3j, d=1.5 - 0.3j, e=2.0, a=4.2, a_prime=3.0,
                      chi=-5.0, zeta=4.0 / 3.0)
        with pytest.raises((DomainError, NonConvergenceError)):
            kdf_f5(args)
