"""Invariant suites for every module, run by ``sqrtcoulomb verify``.

Each suite yields ``Check`` records; nothing here raises on a failed check.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from . import angular, hydrogen, maxwell, perturbation, reference, solver
from .basis import RadialBasisSpec, coulomb_matrix, overlap_matrix, p2_matrix
from .quantum import CouplingSign, PhysicalParams, QuantumNumbers, hydrogen_states

SIGNS = tuple(CouplingSign)
J_VALUES = [k / 2 for k in range(1, 16, 2)]


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    passed: bool
    detail: str = ""


def _check(suite, name, value, limit):
    return Check(suite, name, bool(value <= limit), f"{value:.3g} <= {limit:.3g}")


def angular_suite():
    s = "angular"
    worst = 0.0
    for k, j in itertools.product(range(1, 4), repeat=2):
        worst = max(worst, np.max(np.abs(angular.pauli_product(k, j) - angular.pauli_product_rule(k, j))))
    yield _check(s, "pauli product rule", worst, 0.0)

    anti = ident21 = sq = num = 0.0
    for j in J_VALUES:
        A = angular.sigma_dot_L_plus_one_block(j).entries
        S = angular.sigma_dot_er_block(j).entries
        L = angular.sigma_dot_L_block(j).entries
        anti = max(anti, np.max(np.abs(A @ S + S @ A)))
        ident21 = max(ident21, np.max(np.abs(L @ A - angular.l_squared_block(j).entries)))
        for alpha, sign in itertools.product((0.0, 0.1, 0.5), SIGNS):
            lam = angular.lambda_block(j, alpha, sign).entries
            sq = max(sq, np.max(np.abs(lam @ lam - (A @ A - alpha**2 * np.eye(2)))))
            num = max(num, np.max(np.abs(lam @ (lam + np.eye(2)) - angular.numerator_block(j, alpha, sign).entries)))
    yield _check(s, "sigma.e_r anticommutes with sigma.L+1", anti, 1e-13)
    yield _check(s, "sigma.L (sigma.L+1) = L^2", ident21, 1e-13)
    yield _check(s, "Lambda^2 = (sigma.L+1)^2 - alpha^2", sq, 1e-13)
    yield _check(s, "Lambda(Lambda+1) = numerator", num, 1e-13)

    spec_err = imag = 0.0
    for j, alpha, sign in itertools.product(J_VALUES, (0.1, 0.5), SIGNS):
        vals = angular.lambda_block(j, alpha, sign).channel_eigenvalues()
        for branch in (0, 1):
            spec_err = max(spec_err, abs(vals[branch] - angular.lambda_eigenvalue_exact(j, alpha, branch)))
        imag = max(imag, np.max(np.abs(np.imag(vals))))
    yield _check(s, "Lambda eigenvalues -+sqrt((j+1/2)^2 - alpha^2)", spec_err, 1e-12)
    yield _check(s, "Lambda eigenvalues real", imag, 1e-13)

    norm = 0.0
    for l in range(0, 6):
        for two_j in (2 * l - 1, 2 * l + 1):
            if two_j < 1:
                continue
            for two_m in range(-two_j, two_j + 1, 2):
                total = sum(angular.clebsch_gordan_half(l, (two_m - ms) // 2, ms / 2, two_j / 2, two_m / 2) ** 2
                            for ms in (1, -1) if abs(two_m - ms) <= 2 * l)
                norm = max(norm, abs(total - 1))
    yield _check(s, "Clebsch-Gordan normalization", norm, 1e-15)

    quad = 0.0
    for j in J_VALUES[:4]:
        block = angular.sigma_dot_er_quadrature(j, angular.minimal_grid_order(j))
        quad = max(quad, np.max(np.abs(block.entries - angular.sigma_dot_er_block(j).entries)))
    yield _check(s, "sigma.e_r block matches sphere quadrature", quad, 1e-12)


def maxwell_suite():
    s = "maxwell"
    rng = np.random.default_rng(20240601)
    points = np.column_stack([rng.uniform(-2, 2, 100), rng.uniform(0.3, 3, (100, 3)) * rng.choice([-1, 1], (100, 3))])
    fields = [maxwell.FieldConfig.coulomb(0.3),
              maxwell.FieldConfig.plane_wave((0.3, -0.4, 1.2), (0.8, 0.6, 0.0), 0.7)]
    worst = max(maxwell.residual_norm(f, sign, p) for f in fields for sign in SIGNS for p in points)
    yield _check(s, "source-free residual", worst, 1e-10)
    bad = maxwell.FieldConfig.detuned_plane_wave((0.3, -0.4, 1.2), (0.8, 0.6, 0.0), 0.7)
    low = min(max(maxwell.residual_norm(bad, sign, p) for p in points) for sign in SIGNS)
    yield Check(s, "detuned plane wave is rejected", low > 1e-3, f"{low:.3g} > 1e-3")


def hydrogen_suite():
    s = "hydrogen"
    params = PhysicalParams(1.0, 0.3)
    worst_norm = worst_rel = worst_virial = 0.0
    for n in range(1, 11):
        e_n = hydrogen.energy_nonrel(n, params)
        worst_virial = max(worst_virial, abs(-params.alpha * hydrogen.expectation_inv_r(n, params) - 2 * e_n) / abs(e_n))
        for l in range(n):
            state = hydrogen.RadialState(QuantumNumbers(n, l, 2 * l + 1), params)
            q = lambda k: hydrogen.expectation_r_power_quadrature(state, k)
            worst_norm = max(worst_norm, abs(q(0) - 1))
            pairs = [(q(-1), hydrogen.expectation_inv_r(n, params)), (q(-2), hydrogen.expectation_inv_r2(n, l, params))]
            if l >= 1:
                pairs.append((q(-3), hydrogen.expectation_inv_r3(n, l, params)))
            worst_rel = max(worst_rel, max(abs(a - b) / abs(b) for a, b in pairs))
    yield _check(s, "radial normalization", worst_norm, 1e-12)
    yield _check(s, "virial theorem", worst_virial, 1e-12)
    yield _check(s, "closed-form moments match quadrature", worst_rel, 1e-10)
    grid = (0.01, 0.02, 0.04)
    slope = max(abs(hydrogen.alpha_scaling_exponent(n, l, k, grid) + k)
                for n, l in ((1, 0), (2, 1), (3, 1)) for k in (-2, -1, 1, 2))
    yield _check(s, "<r^k> scales as alpha^-k", slope, 1e-8)


def perturbation_suite():
    s = "perturbation"
    bound = 0.0
    for two_j in range(1, 10, 2):
        j = two_j / 2
        for alpha in np.linspace(0.01, 0.3 * (j + 0.5), 7):
            err = abs(perturbation.epsilon_exact(j, alpha) - perturbation.epsilon_approx(j, alpha))
            bound = max(bound, err / (1.1 * alpha**4 / (8 * (j + 0.5) ** 3)))
    yield _check(s, "epsilon truncation bound (ratio)", bound, 1.0)

    cancel = 0.0
    sign_ok = True
    params = PhysicalParams(1.0, 0.1)
    for qn in hydrogen_states(6):
        b = {sign: perturbation.breakdown(qn, sign, params) for sign in SIGNS}
        sign_ok &= b[CouplingSign.PLUS].total == b[CouplingSign.MINUS].total
        partner = 2 * qn.j - qn.l  # the other l at the same j
        if qn.l < partner <= qn.n - 1:
            other = perturbation.breakdown(QuantumNumbers(qn.n, int(partner), qn.two_j), "+", params)
            cancel = max(cancel, abs(other.total - b[CouplingSign.PLUS].total) / abs(other.total))
    yield _check(s, "totals independent of l at fixed j", cancel, 1e-14)
    yield Check(s, "totals identical for both signs", sign_ok)

    lam = 0.0
    for j, alpha in itertools.product(J_VALUES[:4], (0.1, 0.3)):
        for branch, l in enumerate((int(j - 0.5), int(j + 0.5))):
            v = perturbation.lambda_value(l, j, alpha)
            block = angular.numerator_block(j, alpha, "+").channel_eigenvalues()[branch]
            lam = max(lam, abs(v * (v + 1) - block))
    yield _check(s, "lambda(lambda+1) matches numerator spectrum", lam, 1e-12)


def reference_suite():
    s = "reference"
    slope_err = 0.0
    budget = kg = 0.0
    for qn in hydrogen_states(4):
        if qn.branch == 0:
            slope_err = max(slope_err, abs(reference.deviation_exponent(qn.n, qn.j, 0.05, 0.1) - 6.0))
        b = reference.pauli_dirac_budget(qn.n, qn.l, qn.j, PhysicalParams(1.0, 0.1))
        shift = perturbation.shift_alpha4(qn.n, qn.j, PhysicalParams(1.0, 0.1))
        budget = max(budget, abs(b.total_shift - shift) / abs(shift))
        for alpha in (0.1, 0.5):
            p = PhysicalParams(1.0, alpha)
            e = reference.kg_analytic_energy(reference.KGChannel.of(qn.n_r, qn.l, qn.j, alpha), p)
            kg = max(kg, abs(e - reference.dirac_energy(qn.n, qn.j, p)) / e)
    yield _check(s, "Dirac minus alpha^4 formula scales as alpha^6 (|slope-6|)", slope_err, 0.5)
    yield _check(s, "Pauli budget equals alpha^4 shift", budget, 1e-12)
    yield _check(s, "analytic Klein-Gordon-like equals Dirac", kg, 1e-14)
    p = PhysicalParams(1.0, 0.2)
    ch = reference.KGChannel.of(0, 0, 0.5, 0.2)
    fp = reference.kg_fixed_point(ch, p, reference.kg_basis(ch, p, 80))
    rel = abs(fp.energy - reference.kg_analytic_energy(ch, p)) / fp.energy
    yield _check(s, "fixed-point solve matches analytic", rel, 1e-9)


def solver_suite():
    s = "solver"
    worst = 0.0
    for c in (0.0, 2.0):
        basis = RadialBasisSpec(60, 0.5, c)
        H = p2_matrix(basis).entries / 2 + coulomb_matrix(basis, 1.0).entries
        vals = np.linalg.eigvalsh(H)[:3]
        l = 0 if c == 0 else 1
        exact = np.array([-0.5 / (n + l) ** 2 for n in range(1, 4)])
        worst = max(worst, np.max(np.abs(vals - exact)))
    yield _check(s, "hydrogen levels from the radial basis", worst, 1e-8)
    basis = RadialBasisSpec(80, 0.7, 0.3)
    yield _check(s, "orthonormal basis", float(np.max(np.abs(overlap_matrix(basis) - np.eye(80)))), 1e-12)
    P = p2_matrix(basis)
    S = solver.sqrt_operator(P, 1.0).entries
    rel = np.max(np.abs(S @ S - (np.eye(80) + P.entries))) / np.max(np.abs(P.entries))
    yield _check(s, "square root squares back", rel, 1e-11)
    p = PhysicalParams(1.0, 0.2)
    levels = {sign: [e.binding for e in solver.solve_channel(0.5, 0, sign, p, 60, beta=1.0)] for sign in SIGNS}
    diff = max(abs(a - b) for a, b in zip(*levels.values()))
    yield _check(s, "spectrum identical for both signs", diff, 1e-12)
    seq = [solver.solve_channel(0.5, 0, "+", p, n, beta=1.0)[0].binding for n in (10, 20, 40, 80)]
    yield Check(s, "lowest level non-increasing in N", all(b <= a + 1e-15 for a, b in zip(seq, seq[1:])))


SUITES = {
    "angular": angular_suite,
    "maxwell": maxwell_suite,
    "hydrogen": hydrogen_suite,
    "perturbation": perturbation_suite,
    "reference": reference_suite,
    "solver": solver_suite,
}


def run_all():
    return [check for suite in SUITES.values() for check in suite()]
