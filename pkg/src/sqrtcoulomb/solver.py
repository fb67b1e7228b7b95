"""Nonperturbative spectra of sqrt(m^2 + p^2 +- i e sigma.E) - alpha/r.

The operand commutes with the r-independent angular block, so on each
eigenchannel of Lambda(Lambda+1) it reduces to the real radial operator
p_r^2 + c/r^2 with c = lambda(lambda+1) + alpha^2. The square root is then
taken per channel by symmetric eigendecomposition of the p^2 matrix.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import hydrogen, perturbation, reference
from .angular import effective_centrifugal
from .basis import MatrixLabel, OperatorMatrix, RadialBasisSpec, coulomb_matrix, p2_matrix
from .quantum import CouplingSign, DomainError, PhysicalParams, QuantumNumbers, two_j_of
from .records import Method, SpectrumEntry

BETA_GRID_POINTS = 15
# Log grid factors multiplying m*alpha; the upper end resolves the short-distance
# behaviour that dominates convergence at N ~ 200.
BETA_GRID_SPAN = (-2.0, 5.0)


def default_beta_grid(params):
    return params.m * params.alpha * 2.0 ** np.linspace(*BETA_GRID_SPAN, BETA_GRID_POINTS)


def sqrt_operator(p2, m):
    """sqrt(m^2 + P) for a symmetric positive semidefinite P."""
    P = p2.entries
    d, Q = np.linalg.eigh(P)
    floor = -1e-10 * max(1.0, abs(d[-1]))
    if d[0] < floor:
        raise ArithmeticError(f"p^2 matrix has eigenvalue {d[0]} < 0")
    d = np.clip(d, 0.0, None)
    return OperatorMatrix((Q * np.sqrt(m * m + d)) @ Q.T, p2.basis, MatrixLabel.SQRT_KINETIC)


def hamiltonian_matrix(c, params, N, beta):
    basis = RadialBasisSpec(N, beta, c)
    kin = sqrt_operator(p2_matrix(basis), params.m)
    pot = coulomb_matrix(kin.basis, params.alpha)
    return OperatorMatrix(kin.entries + pot.entries, kin.basis, MatrixLabel.HAMILTONIAN)


def channel_eigenvalues(c, params, N, beta):
    """Ascending total energies of the channel Hamiltonian."""
    H = hamiltonian_matrix(c, params, N, beta)
    return np.linalg.eigvalsh(H.entries), H.basis


@dataclass(frozen=True)
class ChannelSpec:
    """A radial channel: spin-1/2 (j, branch, sign) or spinless (l)."""

    j: float | None = None
    branch: int = 0
    sign: CouplingSign = CouplingSign.PLUS
    spinless_l: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "sign", CouplingSign.parse(self.sign))
        if self.spinless_l is None:
            two_j = two_j_of(self.j)
            object.__setattr__(self, "j", two_j / 2)
            if self.branch not in (0, 1):
                raise ValueError(f"branch={self.branch!r} must be 0 or 1")
        elif int(self.spinless_l) != self.spinless_l or self.spinless_l < 0:
            raise ValueError("spinless l must be a non-negative integer")

    @classmethod
    def spinless(cls, l):
        return cls(spinless_l=l)

    @classmethod
    def for_state(cls, l, j, sign=CouplingSign.PLUS):
        perturbation._check_lj(l, j)
        return cls(j, 0 if 2 * l + 1 == two_j_of(j) else 1, sign)

    @property
    def l(self):
        if self.spinless_l is not None:
            return int(self.spinless_l)
        return int(self.j - 0.5) + self.branch

    @property
    def two_j(self):
        return None if self.spinless_l is not None else two_j_of(self.j)

    def centrifugal(self, alpha):
        if self.spinless_l is not None:
            return float(self.l * (self.l + 1))
        return effective_centrifugal(self.j, alpha, self.sign, self.branch)


def _entries(channel, params, energies, basis, estimates=None):
    out = []
    for k, e in enumerate(energies):
        if not e < params.m:
            break
        est = 0.0 if estimates is None else float(estimates[k])
        out.append(SpectrumEntry(Method.SQRT_SOLVER, k + channel.l + 1, channel.l, channel.two_j,
                                 params.alpha, float(e - params.m), est, channel.sign, basis))
    return out


def _best_beta(c, params, N, level=0, beta_grid=None):
    grid = default_beta_grid(params) if beta_grid is None else beta_grid
    best = None
    for beta in grid:
        vals, _ = channel_eigenvalues(c, params, N, float(beta))
        if level < len(vals) and (best is None or vals[level] < best[0]):
            best = (vals[level], float(beta))
    if best is None:
        raise DomainError(f"level {level} not present for N={N}")
    return best[1]


def solve_channel(j, branch, sign, params, basis_size, beta=None, level=0):
    """Bound levels of one spin-1/2 channel as SQRT_SOLVER entries.

    ``beta=None`` picks the scale from the variational grid (minimizing
    level ``level``).
    """
    if params.alpha >= (two_j_of(j) + 1) / 2:
        raise DomainError("alpha >= j + 1/2")
    channel = ChannelSpec(j, branch, sign)
    return _solve(channel, params, basis_size, beta, level)


def solve_spinless(l, params, basis_size, beta=None, level=0):
    """Bound levels of the spin-0 equation sqrt(m^2 + p^2) - alpha/r."""
    return _solve(ChannelSpec.spinless(l), params, basis_size, beta, level)


def _solve(channel, params, N, beta, level):
    c = channel.centrifugal(params.alpha)
    if beta is None:
        beta = _best_beta(c, params, N, level)
    vals, basis = channel_eigenvalues(c, params, N, beta)
    return _entries(channel, params, vals, basis)


@dataclass
class ConvergenceStudy:
    channel: ChannelSpec
    alpha: float
    sizes: tuple
    betas: tuple
    table: dict  # (N, beta) -> ascending total energies
    best_beta: float
    level: int
    estimates: list  # SpectrumEntry per bound level at (N_max, best_beta)
    convergence_estimate: float
    flags: list = field(default_factory=list)


def convergence_study(channel, params, sizes, beta_grid=None, level=0):
    """Solve the channel on every (N, beta); pick beta variationally at N_max.

    ``convergence_estimate`` is |E(N_max) - E(N_prev)| for ``level`` at the
    chosen beta. A level rising with N at fixed beta is flagged.
    """
    sizes = tuple(sorted(set(int(n) for n in sizes)))
    if len(sizes) < 2:
        raise ValueError("need at least two basis sizes")
    betas = tuple(float(b) for b in (default_beta_grid(params) if beta_grid is None else beta_grid))
    c = channel.centrifugal(params.alpha)
    table = {}
    for N in sizes:
        for beta in betas:
            table[(N, beta)] = channel_eigenvalues(c, params, N, beta)[0]
    n_max, n_prev = sizes[-1], sizes[-2]
    candidates = [b for b in betas if level < len(table[(n_max, b)])]
    if not candidates:
        raise DomainError(f"level {level} not present at N={n_max}")
    best = min(candidates, key=lambda b: table[(n_max, b)][level])
    flags = []
    for beta in betas:
        seq = [table[(N, beta)][level] for N in sizes if level < len(table[(N, beta)])]
        if any(b > a + 1e-12 * abs(a) for a, b in zip(seq, seq[1:])):
            flags.append(f"non-monotone in N at beta={beta:.6g}")
    final = table[(n_max, best)]
    prev = table[(n_prev, best)]
    deltas = [abs(final[k] - prev[k]) if k < len(prev) else math.inf for k in range(len(final))]
    basis = RadialBasisSpec(n_max, best, c)
    estimates = _entries(channel, params, final, basis, deltas)
    return ConvergenceStudy(channel, params.alpha, sizes, betas, table, best, level, estimates,
                            float(deltas[level]), flags)


@dataclass(frozen=True)
class SolverConfig:
    sizes: tuple = (150, 200)
    beta_grid: tuple | None = None


def compare_methods(n, l, j, params, config=SolverConfig(), sign=CouplingSign.PLUS):
    """Binding energies of one state by every method, plus pairwise differences.

    Returns (entries, differences) with ``differences[(a, b)] = E_a - E_b``.
    """
    qn = QuantumNumbers.of(n, l, j)
    sign = CouplingSign.parse(sign)
    meta = dict(n=qn.n, l=qn.l, two_j=qn.two_j, alpha=params.alpha, sign=sign)
    entries = [
        SpectrumEntry(Method.NONREL, binding=hydrogen.energy_nonrel(n, params), **meta),
        SpectrumEntry(Method.PERTURBATIVE, binding=perturbation.energy_alpha4(n, qn.j, params), **meta),
        SpectrumEntry(Method.DIRAC, binding=reference.dirac_binding(n, qn.j, params), **meta),
    ]
    channel = reference.KGChannel.of(qn.n_r, qn.l, qn.j, params.alpha, sign)
    kg = reference.kg_analytic_energy(channel, params) - params.m
    entries.append(SpectrumEntry(Method.KG, binding=kg, **meta))
    study = convergence_study(ChannelSpec.for_state(qn.l, qn.j, sign), params, config.sizes,
                              config.beta_grid, level=qn.n_r)
    if qn.n_r >= len(study.estimates):
        raise DomainError(f"state n={n} not bound in the largest basis")
    solved = study.estimates[qn.n_r]
    entries.append(SpectrumEntry(Method.SQRT_SOLVER, binding=solved.binding,
                                 convergence_estimate=solved.convergence_estimate,
                                 basis_meta=solved.basis_meta, **meta))
    entries.sort(key=SpectrumEntry.sort_key)
    differences = {(a.method, b.method): a.binding - b.binding for a in entries for b in entries}
    return entries, differences
