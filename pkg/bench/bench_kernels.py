"""Compare the compiled and pure-Python integer kernels.

    python3 bench/bench_kernels.py [--repeat N] [--seed S]

Kernel timings call both modules directly on the same inputs; the end-to-end
timing runs the full S4 suite in a subprocess per backend (selected with
AXIAL_PURE_PYTHON).
"""

import argparse
import os
import random
import subprocess
import sys
import timeit

from axial import _pykernels

try:
    from axial import _ckernels
except ImportError:
    _ckernels = None

END_TO_END = (
    "import time; from axial.verify import corpus, basis_axes, run_suites; "
    "t = corpus()[4][1]; s = time.perf_counter(); run_suites(t, *basis_axes(t)); "
    "print(time.perf_counter() - s)"
)


def random_matrix(rng, rows, cols, bound):
    return [[rng.randint(-bound, bound) for _ in range(cols)] for _ in range(rows)]


def kernel_cases(rng):
    cases = []
    for n, bound in ((8, 9), (16, 9), (32, 3), (16, 2**40)):
        m = random_matrix(rng, n, n, bound)
        cases.append((f"gauss_jordan {n}x{n} |x|<={bound}", "gauss_jordan", (m, n)))
    for n in (16, 48):
        a, b = random_matrix(rng, n, n, 99), random_matrix(rng, n, n, 99)
        cases.append((f"matmul {n}x{n}", "matmul", (a, b, n, n)))
    n = 24
    nz = []
    for _ in range(n * n):
        ks = tuple(sorted(rng.sample(range(n), 3)))
        nz.append((ks, tuple(rng.randint(-9, 9) for _ in ks)))
    u, v = [rng.randint(-99, 99) for _ in range(n)], [rng.randint(-99, 99) for _ in range(n)]
    cases.append((f"contract n={n}", "contract", (nz, n, u, v)))
    return cases


def best_of(fn, args, repeat):
    number = 20
    return min(timeit.repeat(lambda: fn(*args), number=number, repeat=repeat)) / number


def end_to_end(pure: bool) -> float:
    env = dict(os.environ, AXIAL_PURE_PYTHON="1" if pure else "0")
    out = subprocess.run([sys.executable, "-c", END_TO_END], env=env, capture_output=True, text=True, check=True)
    return float(out.stdout)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--seed", type=int, default=1)
    args = parser.parse_args(argv)

    if _ckernels is None:
        print("compiled kernels are not built; only the pure-Python backend is available")
    rng = random.Random(args.seed)
    print(f"{'case':36} {'python':>12} {'cython':>12} {'speedup':>8}")
    for name, fn, fargs in kernel_cases(rng):
        py = best_of(getattr(_pykernels, fn), fargs, args.repeat)
        if _ckernels is None:
            print(f"{name:36} {py * 1e6:10.1f}us {'-':>12} {'-':>8}")
            continue
        assert getattr(_ckernels, fn)(*fargs) == getattr(_pykernels, fn)(*fargs)
        cy = best_of(getattr(_ckernels, fn), fargs, args.repeat)
        print(f"{name:36} {py * 1e6:10.1f}us {cy * 1e6:10.1f}us {py / cy:7.1f}x")

    py = min(end_to_end(True) for _ in range(3))
    line = f"{'full S4 suite (end to end)':36} {py * 1e3:10.1f}ms"
    if _ckernels is not None:
        cy = min(end_to_end(False) for _ in range(3))
        line += f" {cy * 1e3:10.1f}ms {py / cy:7.1f}x"
    print(line)


if __name__ == "__main__":
    main()
