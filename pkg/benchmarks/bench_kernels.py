"""Time the compiled Laguerre kernels against the NumPy fallback.

Run with ``python3 benchmarks/bench_kernels.py``; prints one line per kernel.
"""
import argparse
import timeit

import numpy as np

from sqrtcoulomb import _kernels_py, basis, kernels
from sqrtcoulomb.basis import RadialBasisSpec


def _time(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def run(size=200, repeat=5):
    try:
        from sqrtcoulomb import _kernels as compiled
    except ImportError:
        print("compiled kernels not built; nothing to compare")
        return {}
    x = np.linspace(0.01, 4.0 * size, 3 * size + 20)
    b = 2.27
    cases = {
        "laguerre_table": lambda m: m.laguerre_table(x, size, b),
        "laguerre_tail": lambda m: m.laguerre_tail(x, size, b),
    }
    results = {}
    for name, call in cases.items():
        fast_out, slow_out = call(compiled), call(_kernels_py)
        assert np.max(np.abs(fast_out - slow_out)) <= 1e-11 * np.max(np.abs(slow_out))
        fast = _time(lambda: call(compiled), repeat)
        slow = _time(lambda: call(_kernels_py), repeat)
        results[name] = (fast, slow)
        print(f"{name:16s} compiled {fast * 1e3:8.3f} ms  python {slow * 1e3:8.3f} ms  speedup {slow / fast:6.1f}x")

    def assemble():
        basis._tables.cache_clear()
        basis.p2_matrix(RadialBasisSpec(size, 1.3, 0.37))

    print(f"{'p2 assembly':16s} {_time(assemble, repeat) * 1e3:8.3f} ms with backend {kernels.BACKEND}")
    return results


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--size", type=int, default=200)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    run(args.size, args.repeat)
