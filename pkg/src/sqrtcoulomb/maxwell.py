"""Maxwell's equations in Pauli-matrix form, checked on analytic fields.

For a field configuration with exact space-time derivatives we evaluate

    (p0 -+ sigma.p) Phi_+- - source_+-,   Phi_+- = sigma.(B -+ iE),

with p0 = i d/dt and p = -i grad. Products of Pauli matrices go through
``pauli_product`` so the residual exercises the product rule directly.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .angular import IDENTITY, SIGMA, pauli_product
from .quantum import CouplingSign, DomainError


class FieldKind(enum.Enum):
    COULOMB_STATIC = "coulomb_static"
    VACUUM_PLANE_WAVE = "vacuum_plane_wave"


@dataclass(frozen=True)
class FieldSample:
    """Fields, sources and first derivatives at one space-time point.

    ``grad_E[i, k]`` holds d_i E_k.
    """

    E: np.ndarray
    B: np.ndarray
    dE_dt: np.ndarray
    dB_dt: np.ndarray
    grad_E: np.ndarray
    grad_B: np.ndarray
    rho: float = 0.0
    J: np.ndarray = np.zeros(3)


@dataclass(frozen=True)
class FieldConfig:
    """Analytic electromagnetic field family.

    Coulomb: the static field e*E = -alpha x / r^3 of V = -alpha/r, no B.
    Plane wave: E = A eps cos(k.x - w t), B = A (k_hat x eps) cos(k.x - w t).
    ``omega`` defaults to |k|; any other value violates the vacuum dispersion
    relation and is only accepted with ``detuned=True`` (negative controls).
    """

    kind: FieldKind
    alpha: float = 0.0
    k: tuple = (0.0, 0.0, 1.0)
    polarization: tuple = (1.0, 0.0, 0.0)
    amplitude: float = 1.0
    omega: float | None = None
    detuned: bool = False

    def __post_init__(self):
        if self.kind is FieldKind.COULOMB_STATIC:
            if not self.alpha > 0:
                raise ValueError("Coulomb field needs alpha > 0")
            return
        k = np.asarray(self.k, dtype=float)
        eps = np.asarray(self.polarization, dtype=float)
        kn = float(np.linalg.norm(k))
        if kn == 0:
            raise ValueError("wavevector must be nonzero")
        if abs(np.linalg.norm(eps) - 1) > 1e-12:
            raise ValueError("polarization must be a unit vector")
        if abs(k @ eps) > 1e-12 * kn:
            raise ValueError("polarization must be transverse (k . eps = 0)")
        if self.omega is None:
            object.__setattr__(self, "omega", kn)
        elif not self.detuned and abs(self.omega - kn) > 1e-12 * kn:
            raise ValueError("vacuum plane wave requires omega = |k|")

    @classmethod
    def coulomb(cls, alpha):
        return cls(FieldKind.COULOMB_STATIC, alpha=alpha)

    @classmethod
    def plane_wave(cls, k, polarization, amplitude=1.0):
        return cls(FieldKind.VACUUM_PLANE_WAVE, k=tuple(k), polarization=tuple(polarization), amplitude=amplitude)

    @classmethod
    def detuned_plane_wave(cls, k, polarization, amplitude=1.0, factor=1.1):
        kn = float(np.linalg.norm(k))
        return cls(FieldKind.VACUUM_PLANE_WAVE, k=tuple(k), polarization=tuple(polarization),
                   amplitude=amplitude, omega=factor * kn, detuned=True)

    def sample(self, point):
        t, *xyz = map(float, point)
        x = np.array(xyz)
        if self.kind is FieldKind.COULOMB_STATIC:
            r = math.sqrt(x @ x)
            if r == 0:
                raise DomainError("Coulomb field is singular at r = 0")
            E = -self.alpha * x / r**3
            grad_E = -self.alpha * (np.eye(3) / r**3 - 3 * np.outer(x, x) / r**5)
            zero = np.zeros(3)
            return FieldSample(E, zero, zero, zero, grad_E, np.zeros((3, 3)))
        k = np.asarray(self.k, dtype=float)
        eps = np.asarray(self.polarization, dtype=float)
        b_dir = np.cross(k / np.linalg.norm(k), eps)
        phase = k @ x - self.omega * t
        c, s = math.cos(phase), math.sin(phase)
        A = self.amplitude
        return FieldSample(
            E=A * eps * c,
            B=A * b_dir * c,
            dE_dt=A * eps * self.omega * s,
            dB_dt=A * b_dir * self.omega * s,
            grad_E=-A * s * np.outer(k, eps),
            grad_B=-A * s * np.outer(k, b_dir),
        )


def sigma_dot(vec):
    return sum(v * s for v, s in zip(vec, SIGMA))


def maxwell_pauli_residual(field, sign, point):
    """Residual matrix of the Pauli-form Maxwell equations at ``point`` = (t, x, y, z).

    Zero (to rounding) wherever the field solves the source-free equations.
    """
    s = CouplingSign.parse(sign).value
    f = field.sample(point)
    # F = B -+ iE and its derivatives
    dF_dt = f.dB_dt - s * 1j * f.dE_dt
    grad_F = f.grad_B - s * 1j * f.grad_E
    p0_phi = 1j * sigma_dot(dF_dt)
    # sigma.p sigma.F = sum_kj (-i d_k F_j) sigma_k sigma_j
    sp_phi = np.zeros((2, 2), dtype=complex)
    for k in range(3):
        for j in range(3):
            sp_phi = sp_phi + (-1j * grad_F[k, j]) * pauli_product(k + 1, j + 1)
    source = f.rho * IDENTITY - s * sigma_dot(f.J)
    return p0_phi - s * sp_phi - source


def residual_norm(field, sign, point):
    return float(np.max(np.abs(maxwell_pauli_residual(field, sign, point))))
