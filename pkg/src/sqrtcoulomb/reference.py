"""Independent reference spectra: exact Dirac levels, the Pauli-reduced
Dirac correction budget, and the Klein-Gordon-like 2-spinor equation.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import hydrogen, perturbation
from .basis import RadialBasisSpec, inverse_r_matrix, p2_matrix
from .quantum import ConvergenceError, CouplingSign, DomainError, PhysicalParams, two_j_of


def _check_nj(n, j, params):
    n = hydrogen._check_n(n)
    two_j = two_j_of(j)
    if two_j > 2 * n - 1:
        raise ValueError(f"j={j} exceeds n - 1/2 for n={n}")
    if params.alpha >= (two_j + 1) / 2:
        raise ValueError(f"alpha={params.alpha} >= j + 1/2")
    return n, two_j


def _dirac_x(n, j, params):
    n, _ = _check_nj(n, j, params)
    return params.alpha**2 / (n - perturbation.epsilon_exact(j, params.alpha)) ** 2


def dirac_energy(n, j, params):
    """Total energy m / sqrt(1 + alpha^2/(n - eps_j)^2), rest mass included."""
    return params.m / math.sqrt(1 + _dirac_x(n, j, params))


def dirac_binding(n, j, params):
    """dirac_energy - m without the cancellation of the direct difference."""
    x = _dirac_x(n, j, params)
    root = math.sqrt(1 + x)
    return -params.m * x / (root * (1 + root))


def dirac_binding_alpha4_check(n, j, params):
    """Binding energy and its deviation from the alpha^4 formula."""
    binding = dirac_binding(n, j, params)
    return binding, binding - perturbation.energy_alpha4(n, j, params)


def deviation_exponent(n, j, alpha_lo, alpha_hi, m=1.0):
    """Two-point log-log slope of |Dirac - alpha^4 formula| in alpha."""
    lo = abs(dirac_binding_alpha4_check(n, j, PhysicalParams(m, alpha_lo))[1])
    hi = abs(dirac_binding_alpha4_check(n, j, PhysicalParams(m, alpha_hi))[1])
    return math.log(hi / lo) / math.log(alpha_hi / alpha_lo)


@dataclass(frozen=True)
class CorrectionBudget:
    kinetic: float
    darwin: float
    spin_orbit: float
    total_shift: float


def contact_density(n, params):
    """|psi_n00(0)|^2 = 1/(pi n^3 a0^3)."""
    return 1.0 / (math.pi * n**3 * hydrogen.bohr_radius(params) ** 3)


def pauli_dirac_budget(n, l, j, params):
    """First-order shifts of the Pauli-reduced Dirac Hamiltonian."""
    n, l = hydrogen._check_nl(n, l)
    perturbation._check_lj(l, j)
    m, alpha = params.m, params.alpha
    kinetic = perturbation.delta_E10(n, l, params)
    darwin = 0.0
    spin_orbit = 0.0
    if l == 0:
        darwin = alpha / (8 * m * m) * 4 * math.pi * contact_density(n, params)
    else:
        sigma_l = j * (j + 1) - l * (l + 1) - 0.75
        spin_orbit = alpha / (4 * m * m) * hydrogen.expectation_inv_r3(n, l, params) * sigma_l
    return CorrectionBudget(kinetic, darwin, spin_orbit, kinetic + darwin + spin_orbit)


@dataclass(frozen=True)
class KGChannel:
    """Radial channel of the Klein-Gordon-like equation; ``lam`` = l - eps_j."""

    j: float
    l: int
    lam: float
    sign: CouplingSign
    n_r: int

    def __post_init__(self):
        perturbation._check_lj(self.l, self.j)
        if isinstance(self.n_r, bool) or int(self.n_r) != self.n_r or self.n_r < 0:
            raise ValueError(f"n_r={self.n_r!r} must be a non-negative integer")
        object.__setattr__(self, "sign", CouplingSign.parse(self.sign))

    @classmethod
    def of(cls, n_r, l, j, alpha, sign=CouplingSign.PLUS):
        return cls(two_j_of(j) / 2, l, perturbation.lambda_value(l, j, alpha), sign, n_r)

    @property
    def n(self):
        return self.n_r + self.l + 1

    def validate(self, params):
        expected = perturbation.lambda_value(self.l, self.j, params.alpha)
        if abs(self.lam - expected) > 1e-12 * max(1.0, abs(expected)):
            raise ValueError(f"channel lambda={self.lam} inconsistent with alpha={params.alpha}")


def kg_analytic_energy(channel, params):
    """m / sqrt(1 + alpha^2/N^2), N = n_r + lambda + 1."""
    channel.validate(params)
    N = channel.n_r + channel.lam + 1
    return params.m / math.sqrt(1 + params.alpha**2 / N**2)


def kg_basis(channel, params, size=80, beta=None):
    """Basis matched to the channel: centrifugal lambda(lambda+1), scale m alpha/N."""
    lam = channel.lam
    if beta is None:
        beta = params.m * params.alpha / (channel.n_r + lam + 1)
    return RadialBasisSpec(size, beta, lam * (lam + 1))


@dataclass(frozen=True)
class FixedPointResult:
    energy: float
    iterations: int
    history: tuple


def kg_fixed_point(channel, params, basis=None, e0=None, tol=1e-12, max_iter=200):
    """Solve (E - V)^2 psi = (m^2 + p^2 +- i sigma.eE) psi by iterating on E.

    For fixed E the radial operator p_r^2 + lambda(lambda+1)/r^2 - 2 E alpha/r
    is linear; its (n_r+1)-th eigenvalue mu gives the update E = sqrt(m^2 + mu).
    """
    channel.validate(params)
    m, alpha = params.m, params.alpha
    basis = kg_basis(channel, params) if basis is None else basis
    if basis.size < 40:
        raise ValueError("basis size must be >= 40")
    lam_c = channel.lam * (channel.lam + 1)
    if abs(basis.centrifugal - lam_c) > 1e-12 * max(1.0, abs(lam_c)):
        raise ValueError("basis centrifugal coefficient must equal lambda(lambda+1)")
    P = p2_matrix(basis).entries
    R = inverse_r_matrix(basis).entries
    energy = m if e0 is None else float(e0)
    history = [energy]
    for it in range(1, max_iter + 1):
        mu = np.linalg.eigvalsh(P - 2 * energy * alpha * R)[channel.n_r]
        if m * m + mu < 0:
            raise DomainError(f"m^2 + mu = {m * m + mu} < 0 at iteration {it}")
        new = math.sqrt(m * m + mu)
        if not new < m:
            raise DomainError(f"level n_r={channel.n_r} is not bound in this basis (E={new})")
        history.append(new)
        if abs(new - energy) <= tol * m:
            return FixedPointResult(new, it, tuple(history))
        energy = new
    raise ConvergenceError(f"no convergence in {max_iter} iterations (last change {abs(new - history[-2])})")


def kg_iterative_solve(channel, params, basis=None, e0=None):
    """Total energy of the channel level from the fixed-point iteration."""
    return kg_fixed_point(channel, params, basis, e0).energy
