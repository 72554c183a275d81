"""Deterministic quadrature engines.

Three geometries are covered: finite-interval Gauss rules (Legendre and
Jacobi), panel-wise integration on the half line for integrands with
exponential-type decay, and polar-coordinate integration on the unit disk
against a Jacobi-type radial weight.

Integrands passed to the composite integrators must accept numpy arrays and
evaluate elementwise; this keeps the hot loops vectorised.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy.special import roots_jacobi

from .errors import DomainError, NonConvergenceError

MAX_RULE_SIZE = 4096


@dataclass(frozen=True)
class QuadratureRule:
    """Nodes and weights together with a domain descriptor.

    ``domain`` is one of ``"interval"``, ``"half_line"`` or ``"disk_radial"``;
    ``bounds`` gives the interval endpoints where that makes sense.
    """

    nodes: np.ndarray
    weights: np.ndarray
    domain: str
    bounds: tuple[float, float] = (-1.0, 1.0)

    def __post_init__(self):
        if len(self.nodes) != len(self.weights):
            raise DomainError("nodes and weights must have equal length")
        if np.any(self.weights <= 0):
            raise DomainError("quadrature weights must be positive")


def gauss_legendre(n: int) -> QuadratureRule:
    """Standard n-point Gauss-Legendre rule on (-1, 1)."""
    if not 1 <= n <= MAX_RULE_SIZE:
        raise DomainError(f"node count must be in [1, {MAX_RULE_SIZE}], got {n}")
    x, w = leggauss(int(n))
    return QuadratureRule(nodes=x, weights=w, domain="interval", bounds=(-1.0, 1.0))


def gauss_jacobi(n: int, alpha: float, beta: float) -> QuadratureRule:
    """Gauss-Jacobi rule for the weight (1-x)^alpha (1+x)^beta on (-1, 1)."""
    if not 1 <= n <= MAX_RULE_SIZE:
        raise DomainError(f"node count must be in [1, {MAX_RULE_SIZE}], got {n}")
    if alpha <= -1 or beta <= -1:
        raise DomainError("Jacobi weight exponents must exceed -1")
    if alpha == 0 and beta == 0:
        return gauss_legendre(n)
    x, w = roots_jacobi(int(n), alpha, beta)
    return QuadratureRule(nodes=x, weights=w, domain="interval", bounds=(-1.0, 1.0))


def jacobi_rule_01(n: int, exp_at_0: float, exp_at_1: float) -> QuadratureRule:
    """Rule for the weight t^exp_at_0 (1-t)^exp_at_1 on (0, 1).

    This is the (-1, 1) Gauss-Jacobi rule mapped affinely; the weight
    normalisation is absorbed so that ``sum(w * f(t))`` approximates
    ``int_0^1 t^a (1-t)^b f(t) dt`` directly.
    """
    rule = gauss_jacobi(n, exp_at_1, exp_at_0)
    t = 0.5 * (rule.nodes + 1.0)
    w = rule.weights / 2.0 ** (exp_at_0 + exp_at_1 + 1.0)
    return QuadratureRule(nodes=t, weights=w, domain="interval", bounds=(0.0, 1.0))


def disk_radial_rule(n: int, weight_exponent: float) -> QuadratureRule:
    """Radial rule in r = |z|^2 for the weight (1-r)^weight_exponent on (0, 1)."""
    base = jacobi_rule_01(n, 0.0, weight_exponent)
    return QuadratureRule(nodes=base.nodes, weights=base.weights,
                          domain="disk_radial", bounds=(0.0, 1.0))


def _panel_values(f, lo: float, hi: float, coarse, fine):
    mid, half = 0.5 * (hi + lo), 0.5 * (hi - lo)
    xc, wc = coarse
    xf, wf = fine
    vc = half * np.sum(wc * np.asarray(f(mid + half * xc)))
    vf = half * np.sum(wf * np.asarray(f(mid + half * xf)))
    return vf, abs(vf - vc)


def integrate_halfline(f, decay_scale: float = 1.0, tol: float = 1e-10, *,
                       nodes: int = 16, max_bisect: int = 12,
                       length: float | None = None):
    """Integrate ``f`` over (0, inf) for integrands with exponential-type decay.

    Panels of width ``decay_scale`` are integrated with an embedded
    Gauss-Legendre pair (``nodes`` and ``2*nodes`` points); the pair difference
    is the per-panel error estimate.  In the default adaptive mode panels with
    a large estimate are bisected and the panel chain grows until two
    consecutive panels are negligible.  Passing ``length`` switches to a fixed
    panel layout on [0, length] with no bisection, which makes the node set
    independent of ``f`` (so the integral is exactly linear in ``f``).

    Returns ``(value, err_estimate)``.

    Raises
    ------
    NonConvergenceError
        If the tail has not become negligible by ``64 * decay_scale``.
    """
    if decay_scale <= 0 or tol <= 0:
        raise DomainError("decay_scale and tol must be positive")
    width = max(decay_scale, 1e-3)
    coarse = leggauss(nodes)
    fine = leggauss(2 * nodes)

    def do_panel(lo, hi, depth):
        val, err = _panel_values(f, lo, hi, coarse, fine)
        if length is None and err > tol / 20.0 and depth < max_bisect:
            mid = 0.5 * (lo + hi)
            v1, e1 = do_panel(lo, mid, depth + 1)
            v2, e2 = do_panel(mid, hi, depth + 1)
            return v1 + v2, e1 + e2
        return val, err

    total = 0.0 + 0.0j
    err_total = 0.0
    max_length = 64.0 * decay_scale if length is None else length
    n_panels = int(np.ceil(max_length / width))
    quiet = 0
    lo = 0.0
    for k in range(n_panels):
        hi = min(lo + width, max_length)
        val, err = do_panel(lo, hi, 0)
        total += val
        err_total += err
        lo = hi
        if length is None:
            if abs(val) + err < tol / 10.0:
                quiet += 1
                if quiet >= 2:
                    err_total += abs(val)
                    return total, err_total
            else:
                quiet = 0
    if length is None:
        raise NonConvergenceError(
            f"half-line tail not converged by L = {max_length:g}")
    return total, err_total


def integrate_disk(g, weight_exponent: float, tol: float = 1e-10, *,
                   n_radial: int = 64, n_angular: int = 64,
                   max_doublings: int = 4) -> complex:
    """Integrate ``g(z) * (1 - |z|^2)^weight_exponent`` over the unit disk.

    The disk is factorised in polar form with radial variable r = |z|^2, so
    the weight is Jacobi-type and handled exactly by ``disk_radial_rule``;
    the angular direction uses the trapezoid rule on a uniform periodic grid,
    which is exact for trigonometric polynomials of degree below the grid
    size.  Both grids are doubled until the estimate moves by less than
    ``tol``.

    ``g`` must accept a 2-D complex ndarray and evaluate elementwise.
    """
    if weight_exponent <= -1:
        raise DomainError("disk weight exponent must exceed -1")

    def estimate(nr, nphi):
        rule = disk_radial_rule(nr, weight_exponent)
        phi = np.arange(nphi) * (2.0 * np.pi / nphi)
        zg = np.sqrt(rule.nodes)[:, None] * np.exp(1j * phi)[None, :]
        vals = np.asarray(g(zg))
        angular = vals.mean(axis=1) * 2.0 * np.pi
        return complex(0.5 * np.sum(rule.weights * angular))

    prev = estimate(n_radial, n_angular)
    for _ in range(max_doublings):
        n_radial *= 2
        n_angular *= 2
        cur = estimate(n_radial, n_angular)
        if abs(cur - prev) <= tol * (1.0 + abs(cur)):
            return cur
        prev = cur
    raise NonConvergenceError("disk quadrature did not settle under grid doubling")
