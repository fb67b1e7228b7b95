# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Laguerre recurrences; see ``_kernels_py`` for the reference twin."""
import numpy as np
cimport numpy as cnp
from libc.math cimport exp, sqrt, lgamma

cnp.import_array()


cdef _coefficients(Py_ssize_t n, double b):
    """Recurrence coefficients for steps i = 1..n-1 (index i)."""
    cdef cnp.ndarray[cnp.float64_t, ndim=2] coef = np.zeros((3, max(n, 1)))
    cdef Py_ssize_t i
    for i in range(1, n):
        coef[0, i] = 2 * i + 1 + b
        coef[1, i] = sqrt(i * (i + b))
        coef[2, i] = 1.0 / sqrt((i + 1) * (i + 1 + b))
    return coef


def laguerre_table(x, Py_ssize_t nmax, double b):
    """Rows i = 0..nmax of sqrt(i!/Gamma(i+b+1)) exp(-x/2) L_i^(b)(x)."""
    cdef const double[::1] xv = np.ascontiguousarray(x, dtype=np.float64)
    cdef Py_ssize_t nx = xv.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=2] out = np.empty((nmax + 1, nx))
    cdef double[:, ::1] o = out
    cdef double[:, ::1] cf = _coefficients(nmax, b)
    cdef double norm0 = -0.5 * lgamma(b + 1.0)
    cdef double s1 = sqrt(b + 1.0)
    cdef double a, c, d, h0
    cdef Py_ssize_t i, k
    for k in range(nx):
        h0 = exp(-0.5 * xv[k] + norm0)
        o[0, k] = h0
        if nmax >= 1:
            o[1, k] = (1.0 + b - xv[k]) * h0 / s1
    for i in range(1, nmax):
        a = cf[0, i]
        c = cf[1, i]
        d = cf[2, i]
        for k in range(nx):
            o[i + 1, k] = ((a - xv[k]) * o[i, k] - c * o[i - 1, k]) * d
    return out


def laguerre_tail(x, Py_ssize_t n, double b):
    """Rows n-1, n, n+1 of ``laguerre_table`` without storing the rest."""
    if n < 1:
        raise ValueError("n must be >= 1")
    cdef const double[::1] xv = np.ascontiguousarray(x, dtype=np.float64)
    cdef Py_ssize_t nx = xv.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=2] out = np.empty((3, nx))
    cdef double[:, ::1] cf = _coefficients(n + 1, b)
    cdef double norm0 = -0.5 * lgamma(b + 1.0)
    cdef double s1 = sqrt(b + 1.0)
    cdef double[::1] r0 = out[0], r1 = out[1], r2 = out[2]
    cdef double[::1] tmp
    cdef double a, c, d
    cdef Py_ssize_t i, k
    for k in range(nx):
        r1[k] = exp(-0.5 * xv[k] + norm0)
        r2[k] = (1.0 + b - xv[k]) * r1[k] / s1
    # rotate three row buffers: (r0, r1, r2) hold rows (i-1, i, i+1) after step i
    for i in range(1, n + 1):
        a = cf[0, i]
        c = cf[1, i]
        d = cf[2, i]
        tmp = r0
        r0 = r1
        r1 = r2
        r2 = tmp
        for k in range(nx):
            r2[k] = ((a - xv[k]) * r1[k] - c * r0[k]) * d
    return np.stack([np.asarray(r0), np.asarray(r1), np.asarray(r2)])
