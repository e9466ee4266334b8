"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 5] [--suite-n 50]

Three timings per backend: a gamma loop, adaptive integration of a few
representative integrands, and an end-to-end ``verify`` run in a child
process (the backend is chosen at import, so it needs a fresh interpreter).
"""

from __future__ import annotations

import argparse
import os
import subprocess
import sys
import timeit

import numpy as np

from hhfrac import _kernels_py

try:
    from hhfrac import _kernels
except ImportError:
    _kernels = None

INTEGRANDS = {
    "smooth exp": (np.exp, [0.0, 1.0]),
    "kink |x-0.3|": (lambda x: np.abs(x - 0.3), [0.0, 1.0]),
    "sqrt singular": (np.sqrt, [0.0, 1.0]),
    "oscillatory": (lambda x: np.cos(40.0 * x), [0.0, 3.0]),
}
GAMMA_ARGS = np.linspace(0.1, 150.0, 2000).tolist()


def bench_gamma(mod, repeat):
    f = mod.lanczos_gamma
    return min(timeit.repeat(lambda: [f(x) for x in GAMMA_ARGS], number=1, repeat=repeat))


def bench_quad(mod, fn, breaks, repeat):
    b = np.array(breaks)
    return min(
        timeit.repeat(lambda: mod.adaptive_gk21(fn, b, 1e-12, 1e-12, 2000), number=10, repeat=repeat)
    ) / 10


def bench_suite(pure, n):
    env = dict(os.environ, HHFRAC_PURE_PYTHON="1" if pure else "0")
    code = (
        "import time; from hhfrac.harness import run_suite; from hhfrac import BACKEND;"
        f"t=time.perf_counter(); run_suite('all', {n}); print(BACKEND, time.perf_counter()-t)"
    )
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    name, secs = out.stdout.split()
    return name, float(secs)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--suite-n", type=int, default=50)
    ns = ap.parse_args(argv)
    mods = [("python", _kernels_py)] + ([("cython", _kernels)] if _kernels else [])
    if _kernels is None:
        print("compiled extension not built; timing the fallback only")

    print(f"{'case':<24}" + "".join(f"{name:>12}" for name, _ in mods) + ("     speedup" if _kernels else ""))

    def row(label, times):
        line = f"{label:<24}" + "".join(f"{t * 1e3:>10.3f}ms" for t in times)
        if len(times) == 2:
            line += f"{times[0] / times[1]:>11.2f}x"
        print(line)

    row("gamma x2000", [bench_gamma(m, ns.repeat) for _, m in mods])
    for label, (fn, breaks) in INTEGRANDS.items():
        row(f"gk21 {label}", [bench_quad(m, fn, breaks, ns.repeat) for _, m in mods])
    suite = [bench_suite(True, ns.suite_n)] + ([bench_suite(False, ns.suite_n)] if _kernels else [])
    row(f"verify all n={ns.suite_n}", [s for _, s in suite])
    # both backends must agree on the numbers they produce
    if _kernels:
        for label, (fn, breaks) in INTEGRANDS.items():
            b = np.array(breaks)
            v0 = _kernels_py.adaptive_gk21(fn, b, 1e-12, 1e-12, 2000)[0]
            v1 = _kernels.adaptive_gk21(fn, b, 1e-12, 1e-12, 2000)[0]
            assert abs(v0 - v1) <= 1e-13 * max(1.0, abs(v0)), label


if __name__ == "__main__":
    main()
