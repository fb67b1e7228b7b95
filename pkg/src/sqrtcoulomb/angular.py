"""Pauli and coupled angular-momentum algebra on the two-channel blocks.

At fixed (j, m) the spinor spherical harmonics with l = j - 1/2 and
l = j + 1/2 span a two-dimensional space that every angular operator in the
problem leaves invariant. All blocks below use the channel order
(l = j - 1/2, l = j + 1/2).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.special import sph_harm_y

from .quantum import CouplingSign, DomainError, twice, two_j_of

SIGMA = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)
IDENTITY = np.eye(2, dtype=complex)

# Off-diagonal element of sigma.e_r between the two channels under
# Condon-Shortley spherical harmonics; guarded by the quadrature oracle.
SIGMA_ER_OFFDIAG = -1.0


def levi_civita(i, j, k):
    """Totally antisymmetric symbol for 0-based indices."""
    return (i - j) * (j - k) * (k - i) // 2


def pauli_product(k, j):
    """Return sigma_k sigma_j for 1-based axis indices."""
    for name, idx in (("k", k), ("j", j)):
        if isinstance(idx, bool) or not isinstance(idx, (int, np.integer)) or not 1 <= idx <= 3:
            raise ValueError(f"axis index {name}={idx!r} must be 1, 2 or 3")
    return SIGMA[k - 1] @ SIGMA[j - 1]


def pauli_product_rule(k, j):
    """Right-hand side delta_kj + i eps_kjl sigma_l of the product rule."""
    out = IDENTITY * float(k == j)
    for l in range(3):
        out = out + 1j * levi_civita(k - 1, j - 1, l) * SIGMA[l]
    return out


def clebsch_gordan_half(l, m_l, m_s, j, m):
    """<l m_l; 1/2 m_s | j m> in the Condon-Shortley phase convention.

    Returns exactly 0.0 when a selection rule forbids the coupling.
    """
    if isinstance(l, bool) or int(l) != l or l < 0:
        raise ValueError(f"l={l!r} must be a non-negative integer")
    l = int(l)
    if int(m_l) != m_l or abs(m_l) > l:
        raise ValueError(f"m_l={m_l!r} invalid for l={l}")
    two_ms = twice(m_s, "m_s")
    if abs(two_ms) != 1:
        raise ValueError(f"m_s={m_s!r} must be +1/2 or -1/2")
    two_j = twice(j, "j")
    two_m = twice(m, "m")
    if two_j < 1 or two_j % 2 == 0 or two_m % 2 == 0:
        raise ValueError(f"j={j!r}, m={m!r} must be half-odd-integers")
    if two_m != 2 * int(m_l) + two_ms or abs(two_m) > two_j:
        return 0.0
    denom = 2 * l + 1
    if two_j == 2 * l + 1:
        num = (2 * l + 1 + two_m) if two_ms > 0 else (2 * l + 1 - two_m)
        return math.sqrt(num / (2 * denom))
    if two_j == 2 * l - 1:
        if two_ms > 0:
            return -math.sqrt((2 * l + 1 - two_m) / (2 * denom))
        return math.sqrt((2 * l + 1 + two_m) / (2 * denom))
    return 0.0


@dataclass(frozen=True)
class AngularBlock:
    """A 2x2 operator over the channel pair (l = j - 1/2, l = j + 1/2)."""

    j: float
    entries: np.ndarray
    label: str
    warnings: tuple = field(default=())

    def __post_init__(self):
        arr = np.array(self.entries, dtype=complex)
        if arr.shape != (2, 2) or not np.all(np.isfinite(arr)):
            raise ValueError("block entries must be a finite 2x2 matrix")
        arr.setflags(write=False)
        object.__setattr__(self, "entries", arr)

    def __matmul__(self, other):
        rhs = other.entries if isinstance(other, AngularBlock) else other
        return self.entries @ rhs

    def channel_eigenvalues(self):
        """Eigenvalues ordered by channel via eigenvector overlap.

        Each eigenvector is assigned to the channel carrying its larger
        component; sorting by value would mislabel the branches.
        """
        vals, vecs = np.linalg.eig(self.entries)
        weights = np.abs(vecs)
        first = int(np.argmax(weights[0]))
        if first == int(np.argmax(weights[1])):
            # Degenerate overlap (e.g. a multiple of the identity): keep solver order.
            return vals
        return np.array([vals[first], vals[1 - first]])


def _channel_ls(two_j):
    return (two_j - 1) // 2, (two_j + 1) // 2


def _validated(j):
    return two_j_of(j)


def sigma_dot_L_plus_one_block(j):
    """(sigma.L + 1) = diag(j + 1/2, -(j + 1/2))."""
    two_j = _validated(j)
    k = (two_j + 1) / 2
    return AngularBlock(two_j / 2, np.diag([k, -k]), "sigma.L+1")


def sigma_dot_L_block(j):
    two_j = _validated(j)
    k = (two_j + 1) / 2
    return AngularBlock(two_j / 2, np.diag([k - 1, -k - 1]), "sigma.L")


def l_squared_block(j):
    l1, l2 = _channel_ls(_validated(j))
    return AngularBlock(j, np.diag([l1 * (l1 + 1), l2 * (l2 + 1)]), "L^2")


def sigma_dot_er_block(j):
    """sigma.e_r swaps the two channels with coefficient -1 (independent of j)."""
    two_j = _validated(j)
    s = SIGMA_ER_OFFDIAG
    return AngularBlock(two_j / 2, [[0, s], [s, 0]], "sigma.e_r")


def spinor_harmonic(l, two_j, two_m, theta, phi):
    """Two-component spinor spherical harmonic on a grid of angles."""
    theta = np.asarray(theta, dtype=float)
    out = np.zeros((2,) + theta.shape, dtype=complex)
    for row, two_ms in enumerate((1, -1)):
        two_ml = two_m - two_ms
        if abs(two_ml) > 2 * l:
            continue
        m_l = two_ml // 2
        cg = clebsch_gordan_half(l, m_l, two_ms / 2, two_j / 2, two_m / 2)
        if cg:
            out[row] = cg * sph_harm_y(l, m_l, theta, phi)
    return out


def minimal_grid_order(j):
    """Smallest sphere grid order that integrates sigma.e_r elements exactly."""
    two_j = _validated(j)
    # Integrand degree is at most 2j + 2; Gauss-Legendre with n nodes is exact to 2n - 1.
    return (two_j + 3) // 2 + 1


def sigma_dot_er_quadrature(j, grid_order, two_m=None):
    """Compute the sigma.e_r block by explicit integration over the sphere.

    Used as an oracle for ``sigma_dot_er_block``. Gauss-Legendre in cos(theta)
    times a uniform azimuthal grid; when ``grid_order`` is too small for exact
    integration the result carries a warning.
    """
    two_j = _validated(j)
    two_m = two_j if two_m is None else two_m
    if abs(two_m) > two_j or (two_m - two_j) % 2:
        raise ValueError(f"m={two_m}/2 invalid for j={two_j}/2")
    if grid_order < 1:
        raise ValueError("grid_order must be positive")
    warnings = ()
    if grid_order < minimal_grid_order(two_j / 2):
        warnings = (f"grid_order={grid_order} below exact order {minimal_grid_order(two_j / 2)}",)
    x, wx = np.polynomial.legendre.leggauss(grid_order)
    n_phi = 2 * grid_order + 1
    phi = 2 * np.pi * np.arange(n_phi) / n_phi
    theta_g, phi_g = np.meshgrid(np.arccos(x), phi, indexing="ij")
    weights = np.outer(wx, np.full(n_phi, 2 * np.pi / n_phi))
    st, ct = np.sin(theta_g), np.cos(theta_g)
    # sigma.e_r as a field of 2x2 matrices over the grid
    s_er = np.array([[ct, st * np.exp(-1j * phi_g)], [st * np.exp(1j * phi_g), -ct]])
    harmonics = [spinor_harmonic(l, two_j, two_m, theta_g, phi_g) for l in _channel_ls(two_j)]
    block = np.empty((2, 2), dtype=complex)
    for a, bra in enumerate(harmonics):
        for b, ket in enumerate(harmonics):
            applied = np.einsum("ij...,j...->i...", s_er, ket)
            block[a, b] = np.sum(weights * np.sum(bra.conj() * applied, axis=0))
    return AngularBlock(two_j / 2, block, "sigma.e_r (quadrature)", warnings)


def _check_alpha(two_j, alpha, strict):
    if alpha < 0 or not math.isfinite(alpha):
        raise ValueError(f"alpha={alpha!r} must be non-negative")
    if alpha >= (two_j + 1) / 2:
        raise DomainError(f"alpha={alpha} >= j + 1/2 = {(two_j + 1) / 2}: complex spectrum")
    if strict and alpha == 0:
        raise DomainError("alpha must be positive")


def lambda_block(j, alpha, sign):
    """Lambda = -(sigma.L + 1) -+ i alpha sigma.e_r."""
    two_j = _validated(j)
    _check_alpha(two_j, alpha, strict=False)
    s = CouplingSign.parse(sign).value
    entries = -sigma_dot_L_plus_one_block(j).entries - s * 1j * alpha * sigma_dot_er_block(j).entries
    return AngularBlock(two_j / 2, entries, "Lambda")


def numerator_block(j, alpha, sign):
    """Lambda(Lambda + 1) = L^2 -+ i alpha sigma.e_r - alpha^2, built directly."""
    two_j = _validated(j)
    _check_alpha(two_j, alpha, strict=False)
    s = CouplingSign.parse(sign).value
    entries = (
        l_squared_block(j).entries
        - s * 1j * alpha * sigma_dot_er_block(j).entries
        - alpha**2 * IDENTITY
    )
    return AngularBlock(two_j / 2, entries, "Lambda(Lambda+1)")


def lambda_eigenvalue_exact(j, alpha, branch):
    """Closed-form Lambda eigenvalue for a channel: -sqrt(..) for branch 0, +sqrt(..) for branch 1."""
    k = (two_j_of(j) + 1) / 2
    root = math.sqrt(k * k - alpha * alpha)
    return -root if branch == 0 else root


def effective_centrifugal(j, alpha, sign, branch):
    """c = lambda(lambda+1) + alpha^2 from the channel-matched numerator eigenvalue."""
    if branch not in (0, 1):
        raise ValueError(f"branch={branch!r} must be 0 or 1")
    ev = numerator_block(j, alpha, sign).channel_eigenvalues()[branch]
    return float(ev.real) + alpha * alpha
