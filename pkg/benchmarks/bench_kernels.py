#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

Times the exact elimination kernels on the workloads that dominate the
package's runtime: ranks of group-action matrices on graded monomial bases,
plus worst-case dense random matrices (structured action matrices eliminate
much faster than random ones).

Usage:
    python benchmarks/bench_kernels.py [--quick]

Backends can also be forced globally via the VCINV_KERNEL environment
variable; this script switches between them explicitly.
"""

import argparse
import time

import numpy as np

from vcinv import kernels
from vcinv.gf import field_make
from vcinv.groups import generators, group_id
from vcinv.ringcalc import action_matrix


def stacked_action_matrix(group, spec, d):
    gid = group_id(group, spec)
    blocks = []
    for g in generators(gid):
        A = action_matrix(g, d)
        for i in range(A.shape[0]):
            A[i, i] = spec.sub_codes(int(A[i, i]), 1)
        blocks.append(A)
    return np.concatenate(blocks, axis=0)


def time_rank(matrix, spec, backend, repeats):
    prev = kernels.set_backend(backend)
    try:
        kernels.rank(matrix, spec)  # warm-up (numba compilation, cache fills)
        best = min(
            _timed(lambda: kernels.rank(matrix, spec)) for _ in range(repeats)
        )
    finally:
        kernels.set_backend(prev)
    return best


def _timed(fn):
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


def build_workloads(quick):
    rng = np.random.default_rng(0)
    F2, F3, F9 = field_make(2), field_make(3), field_make(3, 2)
    degrees2 = (12, 18) if quick else (12, 18, 24)
    degrees3 = (10, 14) if quick else (10, 14, 18)
    work = []
    for d in degrees2:
        work.append((f"action rank F_2 (sl2, degree {d})", stacked_action_matrix("sl2", F2, d), F2))
    for d in degrees3:
        work.append((f"action rank F_3 (sl2, degree {d})", stacked_action_matrix("sl2", F3, d), F3))
    n = 400 if quick else 1000
    work.append((f"dense random F_2 ({2 * n}x{n})", rng.integers(0, 2, size=(2 * n, n)).astype(np.int8), F2))
    work.append((f"dense random F_3 ({2 * n}x{n})", rng.integers(0, 3, size=(2 * n, n)).astype(np.int8), F3))
    m = 150 if quick else 400
    work.append((f"dense random F_9 ({2 * m}x{m})", rng.integers(0, 9, size=(2 * m, m)).astype(np.int8), F9))
    return work


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--quick", action="store_true", help="smaller sizes, fewer repeats")
    args = parser.parse_args()
    repeats = 2 if args.quick else 3
    backends = kernels.available_backends()
    print(f"available backends: {', '.join(backends)} (active default: {kernels.get_backend()})")
    header = f"{'workload':<38}" + "".join(f"{b:>12}" for b in backends)
    if set(backends) == {"numba", "numpy"}:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for label, matrix, spec in build_workloads(args.quick):
        times = {b: time_rank(matrix, spec, b, repeats) for b in backends}
        row = f"{label:<38}" + "".join(f"{times[b] * 1e3:>10.1f}ms" for b in backends)
        if "numba" in times and "numpy" in times:
            row += f"{times['numpy'] / times['numba']:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
