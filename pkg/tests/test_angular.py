import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from sqrtcoulomb import angular
from sqrtcoulomb.quantum import CouplingSign, DomainError

J_VALUES = [k / 2 for k in range(1, 16, 2)]


# -- independent oracles ------------------------------------------------------

def _orbital_ops(l):
    """L_z, L_- on the |l m_l> basis ordered m_l = l..-l."""
    ms = np.arange(l, -l - 1, -1)
    lz = np.diag(ms).astype(float)
    lm = np.zeros((len(ms), len(ms)))
    for i, m in enumerate(ms[:-1]):
        lm[i + 1, i] = math.sqrt(l * (l + 1) - m * (m - 1))
    return lz, lm


def _product_ops(l):
    """L and S components on |m_l> x |m_s>, m_s ordered (+1/2, -1/2)."""
    lz, lm = _orbital_ops(l)
    lp = lm.T
    lx, ly = (lp + lm) / 2, (lp - lm) / 2j
    sx, sy, sz = (s / 2 for s in angular.SIGMA)
    i_l, i_s = np.eye(2 * l + 1), np.eye(2)
    L = [np.kron(a, i_s) for a in (lx, ly, lz)]
    S = [np.kron(i_l, s) for s in (sx, sy, sz)]
    return L, S


def _ladder_states(l):
    """Coupled |j m> vectors for j = l +- 1/2, built with J_- from stretched states.

    The j = l - 1/2 top state is fixed orthogonal to |l+1/2, l-1/2> with the
    Condon-Shortley phase (positive overlap with m_l = l).
    """
    L, S = _product_ops(l)
    jm = (L[0] - 1j * L[1]) + (S[0] - 1j * S[1])
    dim = 2 * (2 * l + 1)
    states = {}
    top = np.zeros(dim, dtype=complex)
    top[0] = 1.0  # m_l = l, m_s = +1/2
    two_j = 2 * l + 1
    v = top
    for two_m in range(two_j, -two_j - 1, -2):
        states[(two_j, two_m)] = v
        w = jm @ v
        if np.linalg.norm(w) > 1e-14:
            v = w / np.linalg.norm(w)
    if l > 0:
        two_j = 2 * l - 1
        upper = states[(2 * l + 1, two_j)]
        # span{|l, s=+>|m_l=l-1>, |m_l=l>|s=->} at m = l - 1/2
        a = np.zeros(dim, dtype=complex)
        a[1] = 1.0  # m_l = l, m_s = -1/2
        b = np.zeros(dim, dtype=complex)
        b[2] = 1.0  # m_l = l - 1, m_s = +1/2
        v = a * upper[2] - b * upper[1]
        v = v / np.linalg.norm(v)
        if v[1].real < 0:
            v = -v
        for two_m in range(two_j, -two_j - 1, -2):
            states[(two_j, two_m)] = v
            w = jm @ v
            if np.linalg.norm(w) > 1e-14:
                v = w / np.linalg.norm(w)
    return states


def _product_index(l, m_l, two_ms):
    return 2 * (l - m_l) + (0 if two_ms == 1 else 1)


class TestPauliProduct:
    def test_diagonal_is_identity(self):
        for k in (1, 2, 3):
            np.testing.assert_array_equal(angular.pauli_product(k, k), np.eye(2))

    def test_sigma1_sigma2(self):
        np.testing.assert_array_equal(angular.pauli_product(1, 2), np.array([[1j, 0], [0, -1j]]))

    def test_sigma3_sigma1(self):
        np.testing.assert_array_equal(angular.pauli_product(3, 1), np.array([[0, 1], [-1, 0]]))

    def test_product_rule_all_pairs(self):
        for k, j in itertools.product((1, 2, 3), repeat=2):
            expected = (k == j) * np.eye(2) + 1j * sum(
                angular.levi_civita(k - 1, j - 1, l) * angular.SIGMA[l] for l in range(3))
            np.testing.assert_array_equal(angular.pauli_product(k, j), expected)
            np.testing.assert_array_equal(angular.pauli_product_rule(k, j), expected)

    @pytest.mark.parametrize("k,j", [(0, 1), (1, 4), (True, 1), (1.0, 2)])
    def test_bad_index(self, k, j):
        with pytest.raises(ValueError):
            angular.pauli_product(k, j)


class TestClebschGordan:
    def test_single_term(self):
        assert angular.clebsch_gordan_half(0, 0, 0.5, 0.5, 0.5) == 1.0

    def test_known_values(self):
        assert angular.clebsch_gordan_half(1, 0, 0.5, 1.5, 0.5) == pytest.approx(math.sqrt(2 / 3), abs=1e-15)
        assert angular.clebsch_gordan_half(1, 1, -0.5, 1.5, 0.5) == pytest.approx(math.sqrt(1 / 3), abs=1e-15)

    def test_selection_rule_gives_zero(self):
        assert angular.clebsch_gordan_half(1, 1, 0.5, 1.5, 0.5) == 0.0
        assert angular.clebsch_gordan_half(1, 0, 0.5, 2.5, 0.5) == 0.0

    @pytest.mark.parametrize("args", [(1, 2, 0.5, 1.5, 2.5), (1, 0, 0.3, 1.5, 0.5), (1, 0, 0.5, 2.0, 0.5),
                                      (-1, 0, 0.5, 0.5, 0.5)])
    def test_invalid_arguments(self, args):
        with pytest.raises(ValueError):
            angular.clebsch_gordan_half(*args)

    @pytest.mark.parametrize("l", range(0, 5))
    def test_matches_ladder_construction(self, l):
        states = _ladder_states(l)
        for (two_j, two_m), vec in states.items():
            for two_ms in (1, -1):
                two_ml = two_m - two_ms
                if abs(two_ml) > 2 * l:
                    continue
                expected = vec[_product_index(l, two_ml // 2, two_ms)].real
                got = angular.clebsch_gordan_half(l, two_ml // 2, two_ms / 2, two_j / 2, two_m / 2)
                assert got == pytest.approx(expected, abs=1e-13)

    @pytest.mark.parametrize("l", range(0, 7))
    def test_unit_norm(self, l):
        for two_j in (2 * l - 1, 2 * l + 1):
            if two_j < 1:
                continue
            for two_m in range(-two_j, two_j + 1, 2):
                total = sum(angular.clebsch_gordan_half(l, (two_m - s) // 2, s / 2, two_j / 2, two_m / 2) ** 2
                            for s in (1, -1) if abs(two_m - s) <= 2 * l)
                assert abs(total - 1) <= 1e-15


class TestSigmaDotLBlocks:
    @pytest.mark.parametrize("j", J_VALUES)
    def test_product_basis_oracle(self, j):
        # <j m l| sigma.L + 1 |j m l> from 2 L.S + 1 built in the product basis
        for branch, l in enumerate((int(j - 0.5), int(j + 0.5))):
            L, S = _product_ops(l)
            op = 2 * sum(a @ b for a, b in zip(L, S)) + np.eye(L[0].shape[0])
            vec = _ladder_states(l)[(int(2 * j), int(2 * j))]
            expected = (vec.conj() @ op @ vec).real
            assert angular.sigma_dot_L_plus_one_block(j).entries[branch, branch] == pytest.approx(expected, abs=1e-12)

    def test_small_j_values(self):
        np.testing.assert_array_equal(angular.sigma_dot_L_plus_one_block(0.5).entries, np.diag([1.0, -1.0]))
        np.testing.assert_array_equal(angular.sigma_dot_L_plus_one_block(1.5).entries, np.diag([2.0, -2.0]))

    @pytest.mark.parametrize("j", J_VALUES)
    def test_traceless(self, j):
        assert np.trace(angular.sigma_dot_L_plus_one_block(j).entries) == 0

    @pytest.mark.parametrize("j", J_VALUES)
    def test_anticommutes_with_sigma_er(self, j):
        A = angular.sigma_dot_L_plus_one_block(j).entries
        S = angular.sigma_dot_er_block(j).entries
        assert np.max(np.abs(A @ S + S @ A)) <= 1e-13

    @pytest.mark.parametrize("j", J_VALUES)
    def test_sigma_L_times_sigma_L_plus_one(self, j):
        L = angular.sigma_dot_L_block(j).entries
        A = angular.sigma_dot_L_plus_one_block(j).entries
        l1, l2 = j - 0.5, j + 0.5
        np.testing.assert_allclose(L @ A, np.diag([l1 * (l1 + 1), l2 * (l2 + 1)]), atol=1e-13)

    def test_invalid_j(self):
        for j in (0, 1, -0.5):
            with pytest.raises(ValueError):
                angular.sigma_dot_L_plus_one_block(j)


class TestSigmaDotEr:
    @pytest.mark.parametrize("j", [0.5, 2.5])
    def test_block_value(self, j):
        np.testing.assert_array_equal(angular.sigma_dot_er_block(j).entries, np.array([[0, -1], [-1, 0]]))

    def test_involution(self):
        S = angular.sigma_dot_er_block(1.5).entries
        np.testing.assert_array_equal(S @ S, np.eye(2))

    @pytest.mark.parametrize("j", [0.5, 1.5, 2.5, 3.5])
    def test_quadrature_oracle(self, j):
        q = angular.sigma_dot_er_quadrature(j, angular.minimal_grid_order(j))
        assert q.warnings == ()
        assert np.max(np.abs(q.entries - angular.sigma_dot_er_block(j).entries)) <= 1e-12

    @pytest.mark.parametrize("two_m", [-3, -1, 1, 3])
    def test_quadrature_independent_of_m(self, two_m):
        q = angular.sigma_dot_er_quadrature(1.5, 6, two_m)
        assert np.max(np.abs(q.entries - angular.sigma_dot_er_block(1.5).entries)) <= 1e-12

    def test_diagonal_vanishes(self):
        q = angular.sigma_dot_er_quadrature(2.5, 8)
        assert np.max(np.abs(np.diag(q.entries))) <= 1e-12

    def test_low_order_warns(self):
        q = angular.sigma_dot_er_quadrature(3.5, 1)
        assert q.warnings

    def test_blocks_are_read_only(self):
        block = angular.sigma_dot_er_block(0.5)
        with pytest.raises(ValueError):
            block.entries[0, 0] = 1.0


class TestLambdaBlock:
    def test_half_at_alpha_half(self):
        vals = np.sort(np.linalg.eigvals(angular.lambda_block(0.5, 0.5, "+").entries).real)
        np.testing.assert_allclose(vals, [-math.sqrt(0.75), math.sqrt(0.75)], atol=1e-14)

    def test_three_halves_minus(self):
        vals = angular.lambda_block(1.5, 0.2, CouplingSign.MINUS).channel_eigenvalues()
        np.testing.assert_allclose(vals.real, [-1.9899748742132399, 1.9899748742132399], atol=1e-14)

    @pytest.mark.parametrize("sign", list(CouplingSign))
    def test_small_alpha_limit(self, sign):
        vals = angular.lambda_block(0.5, 1e-12, sign).channel_eigenvalues()
        np.testing.assert_allclose(vals.real, [-1, 1], atol=1e-12)

    @pytest.mark.parametrize("j", J_VALUES)
    def test_branch_continuity(self, j):
        # the eigenvalue connected to l = j - 1/2 tends to -(j + 1/2)
        vals = angular.lambda_block(j, 1e-6, "+").channel_eigenvalues()
        assert vals[0].real == pytest.approx(-(j + 0.5), abs=1e-9)
        assert vals[1].real == pytest.approx(j + 0.5, abs=1e-9)

    @pytest.mark.parametrize("j,alpha,sign", list(itertools.product(J_VALUES, (0.0, 0.1, 0.5), CouplingSign)))
    def test_square_identity(self, j, alpha, sign):
        lam = angular.lambda_block(j, alpha, sign).entries
        A = angular.sigma_dot_L_plus_one_block(j).entries
        assert np.max(np.abs(lam @ lam - (A @ A - alpha**2 * np.eye(2)))) <= 1e-14

    @pytest.mark.parametrize("j,alpha,sign", list(itertools.product(J_VALUES, (0.0, 0.1, 0.5), CouplingSign)))
    def test_numerator_identity(self, j, alpha, sign):
        lam = angular.lambda_block(j, alpha, sign).entries
        num = angular.numerator_block(j, alpha, sign).entries
        assert np.max(np.abs(lam @ (lam + np.eye(2)) - num)) <= 1e-14

    @settings(max_examples=60, deadline=None)
    @given(two_j=st.integers(0, 7).map(lambda k: 2 * k + 1), frac=st.floats(0.0, 0.999))
    def test_real_spectrum(self, two_j, frac):
        j = two_j / 2
        alpha = frac * (j + 0.5)
        for sign in CouplingSign:
            for block in (angular.lambda_block(j, alpha, sign), angular.numerator_block(j, alpha, sign)):
                assert np.max(np.abs(block.channel_eigenvalues().imag)) <= 1e-13 * max(1.0, j * j)

    @pytest.mark.parametrize("j,alpha", [(0.5, 1.0), (1.5, 2.5)])
    def test_outside_regime(self, j, alpha):
        with pytest.raises(DomainError):
            angular.lambda_block(j, alpha, "+")
        with pytest.raises(DomainError):
            angular.numerator_block(j, alpha, "-")


class TestNumeratorBlock:
    def test_half_at_alpha_half(self):
        vals = angular.numerator_block(0.5, 0.5, "+").channel_eigenvalues().real
        r = math.sqrt(0.75)
        np.testing.assert_allclose(vals, [-r * (1 - r), r * (1 + r)], atol=1e-14)

    def test_decoupled(self):
        np.testing.assert_allclose(angular.numerator_block(0.5, 0.0, "+").channel_eigenvalues().real, [0, 2])

    def test_effective_centrifugal(self):
        got = [angular.effective_centrifugal(0.5, 0.5, "+", b) for b in (0, 1)]
        np.testing.assert_allclose(got, [0.1339745962155614, 1.8660254037844386], atol=1e-14)

    @pytest.mark.parametrize("j", J_VALUES[:4])
    def test_sign_independent_spectrum(self, j):
        a = angular.numerator_block(j, 0.3, "+").channel_eigenvalues()
        b = angular.numerator_block(j, 0.3, "-").channel_eigenvalues()
        np.testing.assert_allclose(a, b, atol=1e-14)

    def test_bad_branch(self):
        with pytest.raises(ValueError):
            angular.effective_centrifugal(0.5, 0.1, "+", 2)
