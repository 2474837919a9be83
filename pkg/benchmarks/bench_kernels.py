"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--n 20] [--repeat 5]

Kernel timings use the pieces of g_n as input.  The end-to-end rows build
g_n from scratch in a fresh interpreter per backend, because the backend is
fixed at import time (BOXSEQ_PURE_PYTHON=1 forces the fallback).
"""
import argparse
import os
import subprocess
import sys
import timeit
from fractions import Fraction

from boxseq import _kernels_py
from boxseq.sequences import build_g

try:
    from boxseq import _kernels as _compiled
except ImportError:
    _compiled = None

END_TO_END = (
    "import time; t = time.perf_counter(); "
    "from boxseq.sequences import build_g; from boxseq.closed_form import eval_g_closed; "
    "from fractions import Fraction; build_g({n}); "
    "[eval_g_closed({n}, Fraction(k, 211)) for k in range(-400, 400, 7)]; "
    "print(time.perf_counter() - t)"
)


def kernel_workloads(n):
    pieces = [p.coeffs for p in build_g(n).pieces if p.coeffs]
    points = [Fraction(k, 97) for k in range(-50, 50, 3)]
    half = Fraction(1, 2)
    return {
        "taylor_shift": lambda impl: [impl.taylor_shift(c, h) for c in pieces for h in (half, -half)],
        "horner": lambda impl: [impl.horner(c, x) for c in pieces for x in points],
        "kink_sum": lambda impl: [impl.kink_sum(n, b, 422) for b in range(-3000, 3000, 37)],
    }


def best_of(func, repeat):
    return min(timeit.repeat(func, number=1, repeat=repeat))


def end_to_end(n, pure):
    env = dict(os.environ)
    if pure:
        env["BOXSEQ_PURE_PYTHON"] = "1"
    else:
        env.pop("BOXSEQ_PURE_PYTHON", None)
    out = subprocess.run(
        [sys.executable, "-c", END_TO_END.format(n=n)], env=env, capture_output=True, text=True, check=True
    )
    return float(out.stdout)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=20)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    if _compiled is None:
        print("compiled extension not built; run `pip install -e . --no-build-isolation` first")
    print(f"{'workload':<28}{'python [s]':>12}{'cython [s]':>12}{'speedup':>10}")
    for name, work in kernel_workloads(args.n).items():
        t_py = best_of(lambda: work(_kernels_py), args.repeat)
        if _compiled is None:
            print(f"{name:<28}{t_py:>12.4f}{'-':>12}{'-':>10}")
            continue
        t_cy = best_of(lambda: work(_compiled), args.repeat)
        print(f"{name:<28}{t_py:>12.4f}{t_cy:>12.4f}{t_py / t_cy:>9.2f}x")

    label = f"build_g({args.n}) + closed form"
    t_py = min(end_to_end(args.n, True) for _ in range(max(1, args.repeat // 2)))
    if _compiled is None:
        print(f"{label:<28}{t_py:>12.4f}{'-':>12}{'-':>10}")
    else:
        t_cy = min(end_to_end(args.n, False) for _ in range(max(1, args.repeat // 2)))
        print(f"{label:<28}{t_py:>12.4f}{t_cy:>12.4f}{t_py / t_cy:>9.2f}x")


if __name__ == "__main__":
    main()
