"""Select the compiled Laguerre kernels, falling back to NumPy.

Set ``SQRTCOULOMB_PURE_PYTHON=1`` to force the fallback.
"""
import os

from . import _kernels_py

if os.environ.get("SQRTCOULOMB_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl
    except ImportError:
        _impl = _kernels_py

BACKEND = "compiled" if _impl is not _kernels_py else "python"
laguerre_table = _impl.laguerre_table
laguerre_tail = _impl.laguerre_tail
