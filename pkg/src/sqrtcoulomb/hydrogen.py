"""Nonrelativistic hydrogen: energies, radial functions, <r^k> moments.

Closed forms are paired with a Gauss-Laguerre evaluation of <r^k> on the
exact radial density, which serves as their oracle.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import eval_genlaguerre, roots_genlaguerre

from .quantum import DomainError, PhysicalParams, QuantumNumbers


@dataclass(frozen=True)
class RadialState:
    qn: QuantumNumbers
    params: PhysicalParams


def _check_n(n):
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise ValueError(f"n={n!r} must be an integer >= 1")
    return int(n)


def _check_nl(n, l):
    n = _check_n(n)
    if isinstance(l, bool) or int(l) != l or not 0 <= l <= n - 1:
        raise ValueError(f"l={l!r} must satisfy 0 <= l <= n-1 for n={n}")
    return n, int(l)


def bohr_radius(params):
    return 1.0 / (params.m * params.alpha)


def energy_nonrel(n, params):
    n = _check_n(n)
    return -params.m * params.alpha**2 / (2 * n * n)


def _norm(n, l, a0):
    return math.sqrt((2.0 / (n * a0)) ** 3 * math.factorial(n - l - 1) / (2 * n * math.factorial(n + l)))


def radial_R(state, r):
    """R_nl(r), normalized, positive as r -> 0+."""
    n, l = state.qn.n, state.qn.l
    a0 = bohr_radius(state.params)
    r = np.asarray(r, dtype=float)
    if np.any(r < 0):
        raise ValueError("r must be non-negative")
    rho = 2.0 * r / (n * a0)
    out = _norm(n, l, a0) * np.exp(-rho / 2) * rho**l * eval_genlaguerre(n - l - 1, 2 * l + 1, rho)
    return float(out) if out.ndim == 0 else out


def expectation_inv_r(n, params):
    n = _check_n(n)
    return 1.0 / (bohr_radius(params) * n * n)


def expectation_inv_r2(n, l, params):
    n, l = _check_nl(n, l)
    a0 = bohr_radius(params)
    return 1.0 / (a0 * a0 * n**3 * (l + 0.5))


def expectation_inv_r3(n, l, params):
    n, l = _check_nl(n, l)
    if l == 0:
        raise DomainError("<1/r^3> diverges for l = 0")
    a0 = bohr_radius(params)
    return 1.0 / (a0**3 * n**3 * l * (l + 0.5) * (l + 1))


def expectation_r_power_quadrature(state, k):
    """<r^k> by generalized Gauss-Laguerre quadrature.

    With rho = 2r/(n a0) the density is rho^(2l+2+k) e^-rho times a squared
    Laguerre polynomial, so the rule with weight rho^(2l+2+k) is exact.
    """
    n, l = state.qn.n, state.qn.l
    if int(k) != k:
        raise ValueError("k must be an integer")
    k = int(k)
    if k <= -(2 * l + 3):
        raise DomainError(f"<r^{k}> is not integrable for l={l}")
    a0 = bohr_radius(state.params)
    scale = n * a0 / 2.0
    nodes = 2 * n + abs(k) + 10
    x, w = roots_genlaguerre(nodes, 2 * l + 2 + k)
    poly = eval_genlaguerre(n - l - 1, 2 * l + 1, x)
    integral = np.sum(w * poly * poly)
    return _norm(n, l, a0) ** 2 * scale ** (3 + k) * integral


def alpha_scaling_exponent(n, l, k, alpha_grid, m=1.0):
    """Least-squares slope of log<r^k> against log(alpha)."""
    alphas = sorted(set(float(a) for a in alpha_grid))
    if len(alphas) < 3:
        raise ValueError("need at least 3 distinct alpha values")
    if alphas[0] <= 0 or alphas[-1] >= 1:
        raise ValueError("alpha values must lie in (0, 1)")
    n, l = _check_nl(n, l)
    qn = QuantumNumbers(n, l, 2 * l + 1)
    values = [expectation_r_power_quadrature(RadialState(qn, PhysicalParams(m, a)), k) for a in alphas]
    slope, _ = np.polyfit(np.log(alphas), np.log(values), 1)
    return float(slope)
