import math

import mpmath
import numpy as np
import pytest
from scipy.special import roots_genlaguerre

from sqrtcoulomb import basis
from sqrtcoulomb.basis import (MatrixLabel, RadialBasisSpec, build_basis, coulomb_matrix, gauss_laguerre,
                               inverse_r_matrix, overlap_matrix, p2_matrix)
from sqrtcoulomb.quantum import DomainError


class TestExponent:
    def test_integer_channels(self):
        assert basis.exponent_for(0.0) == 0.0
        assert basis.exponent_for(2.0) == 1.0

    def test_effective_channel(self):
        c = 0.1339746
        assert basis.exponent_for(c) == pytest.approx((-1 + math.sqrt(1 + 4 * c)) / 2, rel=1e-15)
        assert basis.exponent_for(c) == pytest.approx(0.1196568, abs=1e-7)

    @pytest.mark.parametrize("c", [-0.25, -1.0, float("nan")])
    def test_fall_to_center(self, c):
        with pytest.raises(DomainError):
            basis.exponent_for(c)

    def test_spec_validation(self):
        with pytest.raises(ValueError):
            RadialBasisSpec(0, 1.0, 0.0)
        with pytest.raises(ValueError):
            RadialBasisSpec(5, -1.0, 0.0)
        with pytest.raises(DomainError):
            RadialBasisSpec(5, 1.0, -0.3)


class TestGaussLaguerre:
    @pytest.mark.parametrize("n,a", [(10, 0.0), (25, 0.2392), (40, 3.0)])
    def test_matches_scipy(self, n, a):
        x, w = gauss_laguerre(n, a)
        xs, ws = roots_genlaguerre(n, a)
        np.testing.assert_allclose(x, xs, rtol=1e-13)
        np.testing.assert_allclose(w * np.exp(-x), ws, rtol=1e-10, atol=1e-300)

    @pytest.mark.parametrize("n", [200, 620])
    def test_moments_beyond_scipy_range(self, n):
        # integral of x^k x^a e^-x is Gamma(k + a + 1)
        a = 0.2392
        x, w = gauss_laguerre(n, a)
        for k in (0, 3, 10):
            got = math.fsum(w * np.exp(-x) * x**k)
            assert got == pytest.approx(math.gamma(k + a + 1), rel=1e-12)

    def test_read_only(self):
        x, _ = gauss_laguerre(20, 1.0)
        with pytest.raises(ValueError):
            x[0] = 0.0

    def test_rejects(self):
        with pytest.raises(ValueError):
            gauss_laguerre(1, 0.0)
        with pytest.raises(DomainError):
            gauss_laguerre(10, -1.0)


def _mp_matrix_elements(c, beta, i, k):
    """Raw <u_i|u_k>, <u_i'|u_k'> + c<u_i|r^-2|u_k>, <u_i|1/r|u_k> by mpmath quadrature."""
    mpmath.mp.dps = 30
    nu = (-1 + mpmath.sqrt(1 + 4 * mpmath.mpf(c))) / 2
    b = 2 * nu + 2

    def u(n, r):
        x = 2 * beta * r
        norm = mpmath.sqrt(mpmath.factorial(n) / mpmath.gamma(n + b + 1))
        return norm * x ** (nu + 1) * mpmath.exp(-x / 2) * mpmath.laguerre(n, b, x)

    du = lambda n, r: mpmath.diff(lambda s: u(n, s), r)
    pts = [0, 1 / beta, 10 / beta, mpmath.inf]
    g = mpmath.quad(lambda r: u(i, r) * u(k, r), pts)
    t = mpmath.quad(lambda r: du(i, r) * du(k, r) + c * u(i, r) * u(k, r) / r**2, pts)
    v = mpmath.quad(lambda r: u(i, r) * u(k, r) / r, pts)
    return float(g), float(t), float(v)


class TestMatrices:
    def test_single_function_kinetic(self):
        P = p2_matrix(RadialBasisSpec(1, 1.0, 0.0))
        assert P.entries[0, 0] == pytest.approx(1.0, rel=1e-14)
        assert P.label is MatrixLabel.P2

    def test_single_function_coulomb(self):
        V = coulomb_matrix(RadialBasisSpec(1, 1.0, 0.0), 1.0)
        assert V.entries[0, 0] == pytest.approx(-1.0, rel=1e-14)

    @pytest.mark.parametrize("c,beta", [(0.1339746, 0.7), (2.0, 0.3)])
    def test_quadrature_against_mpmath(self, c, beta):
        # untransformed elements in units of (2 beta) powers; Gram is in units of (2 beta)^-1
        tables = basis._tables(4, c)
        for i, k in ((0, 0), (1, 3), (2, 2)):
            g, t, v = _mp_matrix_elements(c, beta, i, k)
            assert tables.gram[i, k] / (2 * beta) == pytest.approx(g, rel=1e-10, abs=1e-14)
            assert tables.kinetic[i, k] * (2 * beta) == pytest.approx(t, rel=1e-8, abs=1e-12)
            assert tables.inv_r[i, k] == pytest.approx(v, rel=1e-10, abs=1e-14)

    @pytest.mark.parametrize("c,N", [(0.0, 50), (0.1339746, 120), (2.0, 200), (12.0, 80)])
    def test_orthonormal(self, c, N):
        spec = RadialBasisSpec(N, 0.9, c)
        assert np.max(np.abs(overlap_matrix(spec) - np.eye(N))) <= 1e-12

    @pytest.mark.parametrize("c,beta,N", [(0.0, 0.1, 30), (0.5, 3.0, 100), (6.0, 20.0, 200)])
    def test_kinetic_positive_and_symmetric(self, c, beta, N):
        P = p2_matrix(RadialBasisSpec(N, beta, c)).entries
        assert np.array_equal(P, P.T)
        assert np.linalg.eigvalsh(P)[0] >= 0

    def test_coulomb_negative_definite_and_linear(self):
        spec = RadialBasisSpec(40, 0.6, 0.3)
        V1 = coulomb_matrix(spec, 0.1).entries
        V2 = coulomb_matrix(spec, 0.2).entries
        assert np.all(np.diag(V1) < 0)
        assert np.linalg.eigvalsh(V1)[-1] < 0
        np.testing.assert_allclose(V2, 2 * V1, rtol=1e-15)

    @pytest.mark.parametrize("c,l", [(0.0, 0), (2.0, 1)])
    def test_hydrogen_levels(self, c, l):
        spec = RadialBasisSpec(60, 0.5, c)
        H = p2_matrix(spec).entries / 2 + coulomb_matrix(spec, 1.0).entries
        vals = np.linalg.eigvalsh(H)[:3]
        exact = [-0.5 / (k + l) ** 2 for k in (1, 2, 3)]
        np.testing.assert_allclose(vals, exact, atol=1e-8)

    def test_basis_functions_orthonormal_on_grid(self):
        spec = RadialBasisSpec(8, 1.2, 0.4)
        r = np.linspace(0, 40, 80001)
        U = basis.basis_functions(spec, r)
        np.testing.assert_allclose(np.trapezoid(U[:, None, :] * U[None, :, :], r, axis=-1), np.eye(8), atol=1e-6)

    def test_build_basis(self):
        spec, X = build_basis(0.0, 1.0, 10)
        assert spec.size == 10 and X.shape == (10, 10)
        assert np.allclose(X, X.T)

    def test_ill_conditioned_gram_shrinks_basis(self, monkeypatch):
        real = basis._tables
        monkeypatch.setattr(basis, "_tables", lambda size, c: None if size > 20 else real(size, c))
        P = p2_matrix(RadialBasisSpec(30, 1.0, 0.7))
        assert P.basis.size <= 20
        assert any("reduced" in f for f in P.basis.flags)

    def test_singular_gram_raises(self, monkeypatch):
        monkeypatch.setattr(basis, "_tables", lambda size, c: None)
        with pytest.raises(ArithmeticError):
            p2_matrix(RadialBasisSpec(30, 1.0, 0.7))

    def test_inverse_r_matrix_scale(self):
        a = inverse_r_matrix(RadialBasisSpec(10, 1.0, 0.0)).entries
        b = inverse_r_matrix(RadialBasisSpec(10, 2.0, 0.0)).entries
        np.testing.assert_allclose(b, 2 * a, rtol=1e-14)

    def test_matrix_is_immutable(self):
        P = p2_matrix(RadialBasisSpec(5, 1.0, 0.0))
        with pytest.raises(ValueError):
            P.entries[0, 0] = 1.0
