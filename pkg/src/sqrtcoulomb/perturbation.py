"""First-order alpha^4 analysis of the spin-1/2 square-root Hamiltonian.

Energies are binding energies (rest mass removed).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from . import hydrogen
from .quantum import CouplingSign, DomainError, QuantumNumbers, two_j_of


def _kappa(j, alpha):
    """Validated j + 1/2 for the regime alpha < j + 1/2."""
    k = (two_j_of(j) + 1) / 2
    if alpha < 0:
        raise ValueError("alpha must be non-negative")
    if alpha >= k:
        raise DomainError(f"alpha={alpha} >= j + 1/2 = {k}")
    return k


def epsilon_exact(j, alpha):
    """(j+1/2) - sqrt((j+1/2)^2 - alpha^2), in cancellation-free form."""
    k = _kappa(j, alpha)
    return alpha * alpha / (k + math.sqrt(k * k - alpha * alpha))


def epsilon_approx(j, alpha):
    if alpha < 0:
        raise ValueError("alpha must be non-negative")
    return alpha * alpha / (two_j_of(j) + 1)


@dataclass(frozen=True)
class EpsilonResult:
    j: float
    alpha: float
    exact: float
    approx: float


def epsilon(j, alpha):
    return EpsilonResult(two_j_of(j) / 2, alpha, epsilon_exact(j, alpha), epsilon_approx(j, alpha))


def _check_lj(l, j):
    two_j = two_j_of(j)
    if isinstance(l, bool) or int(l) != l or l < 0 or two_j not in (2 * l - 1, 2 * l + 1):
        raise ValueError(f"j={j!r} is not l +- 1/2 for l={l!r}")
    return int(l), two_j


def lambda_value(l, j, alpha):
    """lambda = l - epsilon_j."""
    l, _ = _check_lj(l, j)
    return l - epsilon_exact(j, alpha)


def centrifugal_approx(l, j, alpha):
    """l(l+1) - alpha^2 (l+1/2)/(j+1/2), the alpha^2-truncated lambda(lambda+1)."""
    l, two_j = _check_lj(l, j)
    return l * (l + 1) - alpha * alpha * (l + 0.5) / ((two_j + 1) / 2)


def delta_E10_composed(n, l, params):
    """-(1/2m) <(E_n - V)^2> assembled from <V> and <V^2>."""
    e_n = hydrogen.energy_nonrel(n, params)
    v1 = -params.alpha * hydrogen.expectation_inv_r(n, params)
    v2 = params.alpha**2 * hydrogen.expectation_inv_r2(n, l, params)
    return -(e_n * e_n - 2 * e_n * v1 + v2) / (2 * params.m)


def delta_E10(n, l, params, rtol=1e-13):
    """Kinetic (p^4) correction; checks the composed route against the closed form."""
    e_n = hydrogen.energy_nonrel(n, params)
    closed = e_n * params.alpha**2 / n**2 * (n / (l + 0.5) - 0.75)
    composed = delta_E10_composed(n, l, params)
    if abs(composed - closed) > rtol * abs(closed):
        raise ArithmeticError(f"delta_E10 routes disagree: {composed!r} vs {closed!r}")
    return closed


def delta_E11(n, l, j, params):
    """Angular correction from the modified centrifugal term."""
    n, l = hydrogen._check_nl(n, l)
    _check_lj(l, j)
    e_n = hydrogen.energy_nonrel(n, params)
    return e_n * params.alpha**2 / n * (1 / (j + 0.5) - 1 / (l + 0.5))


def energy_alpha4(n, j, params):
    """E_n [1 - (alpha^2/n^2)(3/4 - n/(j+1/2))]."""
    n = hydrogen._check_n(n)
    two_j = two_j_of(j)
    if two_j > 2 * n - 1:
        raise ValueError(f"j={j} exceeds n - 1/2 for n={n}")
    e_n = hydrogen.energy_nonrel(n, params)
    return e_n * (1 - params.alpha**2 / n**2 * (0.75 - n / ((two_j + 1) / 2)))


def shift_alpha4(n, j, params):
    """The alpha^4 shift E_n (alpha^2/n^2)(n/(j+1/2) - 3/4)."""
    e_n = hydrogen.energy_nonrel(n, params)
    return e_n * params.alpha**2 / n**2 * (n / ((two_j_of(j) + 1) / 2) - 0.75)


@dataclass(frozen=True)
class EnergyBreakdown:
    qn: QuantumNumbers
    sign: CouplingSign
    e_n: float
    delta_e10: float
    delta_e11: float
    total: float


def breakdown(qn, sign, params):
    sign = CouplingSign.parse(sign)
    e_n = hydrogen.energy_nonrel(qn.n, params)
    d10 = delta_E10(qn.n, qn.l, params)
    d11 = delta_E11(qn.n, qn.l, qn.j, params)
    return EnergyBreakdown(qn, sign, e_n, d10, d11, e_n + d10 + d11)
