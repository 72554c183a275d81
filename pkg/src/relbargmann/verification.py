"""Named verification suites behind the ``verify`` command.

Every suite returns a list of check records ``{name, error, tol, pass}``;
``run_suite`` wraps them into the report schema
``{suite, checks, pass, version, config}``.  All randomness is seeded, so a
given configuration always produces the identical report.
"""

from __future__ import annotations

import math

import numpy as np

from . import __version__
from .bargmann import (classical_bargmann, isometry_check, oscillator_mode,
                       relativistic_transform, relativistic_transform_m0)
from .coherent import overlap, overlap_series
from .disk import (LandauIndex, basis_gram, basis_phi, landau_level,
                   maass_apply_fd, wirtinger_dzbar_fd)
from .errors import DomainError
from .hypergeom import (F5Args, _series_2f1, appell_f1, gauss_2f1, kdf_f5,
                        kdf_f5_integral, kdf_f5_series, pochhammer)
from .orthopoly import jacobi_p, laguerre_l
from .oscillator import ModelParams, OscParams, oscillator_gram
from .quadrature import integrate_disk

SUITES = ("orthonormality-disk", "orthonormality-oscillator", "overlap",
          "resolution", "eigen-equation", "srivastava-rao", "saran",
          "f5-reductions", "isometry", "m0-reduction", "all")

_DISK_CASES = ((5.0, 0), (7.5, 1), (9.0, 2))
_MAPPING_POINTS = (0.25 + 0.1j, -0.2 + 0.15j, 0.3j, -0.35 - 0.1j, 0.1 - 0.25j)


def _check(name: str, error: float, tol: float) -> dict:
    return {"name": name, "error": float(error), "tol": float(tol),
            "pass": bool(error < tol)}


def suite_orthonormality_disk(config: dict) -> list[dict]:
    kmax = int(config.get("kmax", 8))
    tol = float(config.get("tol", 1e-8))
    checks = []
    for sigma, m in _DISK_CASES:
        idx = LandauIndex(sigma, m)
        gram = basis_gram(idx, kmax)
        dev = float(np.abs(gram - np.eye(kmax + 1)).max())
        checks.append(_check(f"disk-gram-sigma{sigma}-m{m}", dev, tol))
    return checks


def suite_orthonormality_oscillator(config: dict) -> list[dict]:
    kmax = int(config.get("kmax", 5))
    tol = float(config.get("tol", 1e-6))
    checks = []
    for c in (0.8, 1.0, 1.5):
        gram = oscillator_gram(OscParams(c), kmax)
        dev = float(np.abs(gram - np.eye(kmax + 1)).max())
        checks.append(_check(f"oscillator-gram-c{c}", dev, tol))
    return checks


def suite_overlap(config: dict) -> list[dict]:
    tol = float(config.get("tol", 1e-8))
    n_pairs = int(config.get("pairs", 50))
    rng = np.random.default_rng(20240611)
    checks = []
    for sigma, m in _DISK_CASES:
        idx = LandauIndex(sigma, m)
        worst = 0.0
        worst_sym = 0.0
        for _ in range(n_pairs):
            z, w = (complex(*p) for p in rng.uniform(-0.354, 0.354, (2, 2)))
            worst = max(worst, abs(overlap(idx, z, w)
                                   - overlap_series(idx, z, w, kmax=120)))
            worst_sym = max(worst_sym, abs(overlap(idx, z, w)
                                           - np.conj(overlap(idx, w, z))))
        checks.append(_check(f"overlap-series-sigma{sigma}-m{m}", worst, tol))
        checks.append(_check(f"overlap-hermitian-sigma{sigma}-m{m}", worst_sym, 1e-12))
    return checks


def suite_resolution(config: dict) -> list[dict]:
    tol = float(config.get("tol", 1e-5))
    checks = []
    pairs = ((0.3 + 0.1j, -0.2 - 0.25j), (0.15 - 0.3j, 0.4 + 0.05j))
    for sigma, m in ((5.0, 0), (7.5, 1)):
        idx = LandauIndex(sigma, m)
        worst = 0.0
        for z, zp in pairs:
            composed = _reproducing_composition(idx, z, zp)
            worst = max(worst, abs(composed - overlap(idx, z, zp)))
        checks.append(_check(f"reproducing-sigma{sigma}-m{m}", worst, tol))
    return checks


def _reproducing_composition(idx: LandauIndex, z: complex, zp: complex) -> complex:
    """integral of overlap(z, w) overlap(w, zp) against the state measure.

    The overlap factors supply (1-|w|^2)^(sigma - 2m) which combines with the
    measure density into the Jacobi weight sigma - 2m - 2; the remainder of
    the integrand is smooth up to the boundary, so the full disk is covered.
    """
    sigma, m = idx.sigma, idx.m

    def g(w):
        # overlap(w, zp) = conj(overlap(zp, w)) keeps w in the vectorised slot
        profile = overlap(idx, z, w) * np.conj(overlap(idx, zp, w))
        return profile * (1.0 - np.abs(w) ** 2) ** (-(sigma - 2.0 * m))

    val = integrate_disk(g, sigma - 2 * m - 2.0, tol=1e-9,
                         n_radial=96, n_angular=128, max_doublings=2)
    return val * (sigma - 2 * m - 1.0) / math.pi


def suite_eigen_equation(config: dict) -> list[dict]:
    tol = float(config.get("tol", 1e-4))
    h = float(config.get("h", 1e-4))
    sigma = float(config.get("sigma", 7.5))
    m = int(config.get("m", 1))
    k = int(config.get("k", 3))
    idx = LandauIndex(sigma, m)
    eps = landau_level(idx)
    psi = lambda w: basis_phi(k, idx, w)
    worst = 0.0
    for x in np.linspace(-0.32, 0.32, 5):
        for y in np.linspace(-0.32, 0.32, 5):
            z = complex(x, y)
            lhs = maass_apply_fd(idx, psi, z, h)
            ref = eps * psi(z)
            worst = max(worst, abs(lhs - ref) / (1.0 + abs(psi(z))))
    checks = [_check(f"maass-eigen-sigma{sigma}-m{m}-k{k}", worst, tol)]
    hol = max(abs(wirtinger_dzbar_fd(lambda w: w ** 3, z, h))
              for z in (0.2 + 0.1j, -0.3j))
    checks.append(_check("holomorphic-killed", hol, 1e-6))
    return checks


def _srivastava_rao_sides(t, g, alpha, x, y, n_terms=80):
    lhs = 0.0 + 0.0j
    for n in range(n_terms):
        coef = math.factorial(n) * t ** n / pochhammer(1.0 + alpha, n)
        lhs += coef * jacobi_p(n, g - n, alpha, x) * jacobi_p(n, g - n, alpha, y)
    quarter = 0.25 * (x - 1.0) * (y - 1.0)
    arg = -(x + 1.0) * (y + 1.0) * t / ((1.0 - t) * (4.0 - 4.0 * quarter * t))
    rhs = ((1.0 - quarter * t) ** (-(1.0 + g + alpha)) * (1.0 - t) ** g
           * gauss_2f1(1.0 + g + alpha, -g, 1.0 + alpha, arg))
    return lhs, rhs


def suite_srivastava_rao(config: dict) -> list[dict]:
    tol = float(config.get("tol", 1e-8))
    cases = ((0.2, 2.0, 1.5, 0.3, -0.4), (0.15, 1.3, 0.7, -0.2, 0.5),
             (-0.25, 3.0, 2.2, 0.6, 0.1), (0.25, 1.0, 1.9, -0.7, -0.2))
    worst = 0.0
    for t, g, alpha, x, y in cases:
        lhs, rhs = _srivastava_rao_sides(t, g, alpha, x, y)
        worst = max(worst, abs(lhs - rhs))
    return [_check("srivastava-rao-bilinear", worst, tol)]


def _saran_sides(g, mm, cpar, theta, V, y, n_terms=60):
    alpha, beta, b = -2.0 * g - mm, float(mm), 2.0 * g
    lhs = 0.0 + 0.0j
    for k in range(n_terms):
        f21 = 0.0 + 0.0j
        term = 1.0 + 0.0j
        for j in range(k + 1):
            f21 += term
            term *= (-k + j) * (cpar + j) / ((b + j) * (j + 1)) * y
        lhs += theta ** k * jacobi_p(k, alpha - k, beta - k, V) * f21
    X = y * (V + 1.0) * theta / (2.0 + (V + 1.0) * theta)
    Y = y * (V - 1.0) * theta / (2.0 + (V - 1.0) * theta)
    pref = ((1.0 + (V + 1.0) * theta / 2.0) ** alpha
            * (1.0 + (V - 1.0) * theta / 2.0) ** beta)
    rhs = pref * appell_f1(cpar, -alpha, -beta, b, X, Y)
    return lhs, rhs


def suite_saran(config: dict) -> list[dict]:
    tol = float(config.get("tol", 1e-8))
    worst = 0.0
    for (g, mm, cpar) in ((1.15, 1, 0.8 + 0.3j), (1.3, 2, 0.6 - 0.2j)):
        for (theta, V, y) in ((0.25, -2.0, 0.3), (0.2, -3.0, -0.4),
                              (0.3, -2.5, 0.35)):
            lhs, rhs = _saran_sides(g, mm, cpar, theta, V, y)
            worst = max(worst, abs(lhs - rhs))
    return [_check("saran-bilinear-reduced", worst, tol)]


def suite_f5_reductions(config: dict) -> list[dict]:
    tol_f5 = float(config.get("tol", 1e-9))
    rng = np.random.default_rng(20240613)
    checks = []

    # collapse at a = a' to a single Gauss function
    worst = 0.0
    for _ in range(20):
        gre, gim = rng.uniform(1.1, 2.0), rng.uniform(-0.8, 0.8)
        e = gre + rng.uniform(0.3, 1.0)
        a = rng.uniform(1.0, 4.0)
        chi, zeta = rng.uniform(-0.25, 0.25, 2)
        args = F5Args(c=complex(gre, gim), d=complex(gre, -gim), e=e,
                      a=a, a_prime=a, chi=chi, zeta=zeta)
        ref = gauss_2f1(args.c, args.d, e, chi + zeta)
        worst = max(worst, abs(kdf_f5(args) - ref))
    args = F5Args(c=1.2 + 0.5j, d=1.2 - 0.5j, e=1.7, a=2.4, a_prime=2.4,
                  chi=0.15, zeta=0.2)
    worst = max(worst, abs(kdf_f5(args) - gauss_2f1(args.c, args.d, 1.7, 0.35)))
    checks.append(_check("f5-collapse-a-equals-aprime", worst, tol_f5))

    # series against the integral representation
    worst = 0.0
    for gap in (1.2, 0.7):
        args = F5Args(c=1.5 + 0.3j, d=1.5 - 0.3j, e=2.0, a=3.0 + gap,
                      a_prime=3.0, chi=0.1, zeta=0.15)
        worst = max(worst, abs(kdf_f5_series(args) - kdf_f5_integral(args)))
    for m in (0, 1, 2):
        args = F5Args(c=1.2 + 0.5j, d=1.2 - 0.5j, e=1.7, a=2.4 + m,
                      a_prime=2.4, chi=0.15, zeta=0.2)
        worst = max(worst, abs(kdf_f5_series(args) - kdf_f5_integral(args)))
        worst = max(worst, abs(kdf_f5_series(args) - kdf_f5(args)))
    checks.append(_check("f5-series-vs-integral", worst, tol_f5))

    # Pfaff transformation on randomized arguments
    worst = 0.0
    for _ in range(100):
        a = rng.uniform(-2.0, 3.0)
        b = rng.uniform(-2.0, 3.0)
        c = rng.uniform(0.4, 4.0)
        x = rng.uniform(-0.5, 0.5)
        lhs = _series_2f1(a, b, c, x)
        rhs = (1.0 - x) ** (-a) * _series_2f1(a, c - b, c, x / (x - 1.0))
        worst = max(worst, abs(lhs - rhs))
    checks.append(_check("pfaff-transformation", worst, 1e-10))

    # Appell F1 collapse at d = b + c
    worst = 0.0
    for _ in range(40):
        a = rng.uniform(0.3, 2.0)
        b = rng.uniform(0.2, 2.5)
        c = rng.uniform(0.2, 2.0)
        x, y = rng.uniform(-0.3, 0.3, 2)
        lhs = appell_f1(a, b, c, b + c, x, y)
        rhs = (1.0 - y) ** (-a) * gauss_2f1(a, b, b + c, (x - y) / (1.0 - y))
        worst = max(worst, abs(lhs - rhs))
    lhs = appell_f1(1.3, 2.1, 0.4, 2.5, 0.2, -0.1)
    rhs = (1.0 + 0.1) ** (-1.3) * gauss_2f1(1.3, 2.1, 2.5, 0.3 / 1.1)
    worst = max(worst, abs(lhs - rhs))
    checks.append(_check("f1-collapse-d-equals-b-plus-c", worst, 1e-10))
    return checks


def suite_isometry(config: dict) -> list[dict]:
    tol_map = float(config.get("tol", 1e-6))
    c = float(config.get("c", 1.0))
    osc = OscParams(c)
    checks = []
    worst = 0.0
    for m in (0, 1):
        params = ModelParams(osc, m)
        idx = params.landau_index()
        for j in (0, 1, 2):
            f = oscillator_mode(j, osc)
            for z in _MAPPING_POINTS:
                got = relativistic_transform(params, f, z)
                worst = max(worst, abs(got - basis_phi(j, idx, z)))
    checks.append(_check("basis-mapping", worst, tol_map))

    def mix(xi):
        return (oscillator_mode(0, osc)(xi)
                + oscillator_mode(1, osc)(xi)) / math.sqrt(2.0)

    worst = 0.0
    for m, f in ((0, oscillator_mode(0, osc)), (0, mix),
                 (1, oscillator_mode(1, osc))):
        rep = isometry_check(ModelParams(osc, m), f)
        worst = max(worst, rep["relative_gap"])
    checks.append(_check("norm-preservation", worst, 1e-4))

    # classical baseline: Laguerre modes map to monomials
    worst = 0.0
    from scipy.special import gammaln

    for sigma in (3.0, 5.5):
        for k in range(5):
            def mode(x, k=k, sigma=sigma):
                x = np.asarray(x, dtype=float)
                return (math.exp(0.5 * (gammaln(k + 1) - gammaln(sigma + k)))
                        * x ** (0.5 * (sigma - 1.0)) * np.exp(-0.5 * x)
                        * laguerre_l(k, sigma - 1.0, x))
            ratios = [classical_bargmann(sigma, mode, z)[0] / z ** k
                      for z in (0.1, 0.2, 0.3)]
            worst = max(worst, abs(ratios[0] - ratios[1]),
                        abs(ratios[1] - ratios[2]))
    checks.append(_check("classical-monomial-image", worst, 1e-7))
    return checks


def suite_m0_reduction(config: dict) -> list[dict]:
    tol = float(config.get("tol", 1e-8))
    c = float(config.get("c", 1.0))
    osc = OscParams(c)
    params = ModelParams(osc, 0)
    f = oscillator_mode(1, osc)
    worst = 0.0
    grid = [complex(x, y) for x in (-0.3, 0.0, 0.3) for y in (-0.3, 0.0, 0.3)]
    for z in grid:
        full = relativistic_transform(params, f, z)
        reduced = relativistic_transform_m0(osc, f, z)
        worst = max(worst, abs(full - reduced))
    checks = [_check("m0-kernel-consistency", worst, tol)]

    B = lambda w: relativistic_transform_m0(osc, f, w)
    hol = max(abs(wirtinger_dzbar_fd(B, z, 1e-3))
              for z in (0.2 + 0.1j, -0.25 - 0.2j, 0.3j))
    checks.append(_check("m0-holomorphy", hol, 1e-5))
    return checks


_SUITE_FUNCS = {
    "orthonormality-disk": suite_orthonormality_disk,
    "orthonormality-oscillator": suite_orthonormality_oscillator,
    "overlap": suite_overlap,
    "resolution": suite_resolution,
    "eigen-equation": suite_eigen_equation,
    "srivastava-rao": suite_srivastava_rao,
    "saran": suite_saran,
    "f5-reductions": suite_f5_reductions,
    "isometry": suite_isometry,
    "m0-reduction": suite_m0_reduction,
}


def run_suite(suite: str, config: dict | None = None) -> dict:
    """Run one named suite (or ``all``) and return the JSON-ready report."""
    config = dict(config or {})
    if suite == "all":
        names = [n for n in SUITES if n != "all"]
    elif suite in _SUITE_FUNCS:
        names = [suite]
    else:
        raise DomainError(f"unknown suite {suite!r}; choose from {SUITES}")
    checks = []
    for name in names:
        checks.extend(_SUITE_FUNCS[name](config))
    return {
        "suite": suite,
        "checks": checks,
        "pass": all(c["pass"] for c in checks),
        "version": __version__,
        "config": {k: config[k] for k in sorted(config)},
    }
