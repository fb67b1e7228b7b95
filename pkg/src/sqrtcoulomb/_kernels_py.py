"""Pure-NumPy Laguerre kernels; reference twin of the compiled ``_kernels``."""
import numpy as np
from scipy.special import gammaln


def _start(x, b):
    h0 = np.exp(-0.5 * x - 0.5 * gammaln(b + 1.0))
    h1 = (1.0 + b - x) * h0 / np.sqrt(b + 1.0)
    return h0, h1


def laguerre_table(x, nmax, b):
    """Rows i = 0..nmax of sqrt(i!/Gamma(i+b+1)) exp(-x/2) L_i^(b)(x)."""
    x = np.ascontiguousarray(x, dtype=np.float64)
    out = np.empty((nmax + 1, x.size))
    h0, h1 = _start(x, b)
    out[0] = h0
    if nmax >= 1:
        out[1] = h1
    for i in range(1, nmax):
        out[i + 1] = ((2 * i + 1 + b - x) * out[i] - np.sqrt(i * (i + b)) * out[i - 1]) / np.sqrt(
            (i + 1) * (i + 1 + b)
        )
    return out


def laguerre_tail(x, n, b):
    """Rows n-1, n, n+1 of ``laguerre_table`` without storing the rest."""
    if n < 1:
        raise ValueError("n must be >= 1")
    x = np.ascontiguousarray(x, dtype=np.float64)
    prev, cur = _start(x, b)
    for i in range(1, n + 1):
        nxt = ((2 * i + 1 + b - x) * cur - np.sqrt(i * (i + b)) * prev) / np.sqrt((i + 1) * (i + 1 + b))
        before, prev, cur = prev, cur, nxt
    return np.stack([before, prev, cur])
