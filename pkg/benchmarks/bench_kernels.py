"""Compare the pure-Python and compiled kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each kernel runs on the same fixed workload under both backends. The
compiled column is skipped when the extension is not built.
"""
from __future__ import annotations

import argparse
import random
import time

from dolbeault import _kernels
from dolbeault.schur import lr_decompose


def _workloads():
    rng = random.Random(7)
    xs = [rng.randrange(0, 1 << 40) for _ in range(20000)]
    vs = [tuple(rng.randrange(-8, 9) for _ in range(8)) for _ in range(20000)]
    lams = [tuple(sorted((rng.randrange(0, 12) for _ in range(6)), reverse=True)) for _ in range(5000)]
    u, v = (4, 3, 2, 1), (3, 2, 2, 1)
    lr = [(tuple(outer), u, v) for outer in lr_decompose(u, v)]
    return {
        "delta": (lambda k: [k.delta(x) for x in xs]),
        "bott_core": (lambda k: [k.bott_core(v) for v in vs]),
        "weyl_dim": (lambda k: [k.weyl_dim(lam) for lam in lams]),
        "lr_coefficient": (lambda k: [k.lr_coefficient(*t) for t in lr]),
    }


def _best(fn, backend, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(backend)
        best = min(best, time.perf_counter() - t0)
    return best


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)

    compiled = _kernels.compiled_backend
    print(f"{'kernel':<16}{'python (s)':>12}{'cython (s)':>12}{'speedup':>10}")
    for name, fn in _workloads().items():
        # both backends must agree before timing means anything
        if compiled is not None:
            assert fn(_kernels.python_backend) == fn(compiled), name
        tp = _best(fn, _kernels.python_backend, args.repeat)
        if compiled is None:
            print(f"{name:<16}{tp:>12.4f}{'n/a':>12}{'':>10}")
            continue
        tc = _best(fn, compiled, args.repeat)
        print(f"{name:<16}{tp:>12.4f}{tc:>12.4f}{tp / tc:>9.1f}x")


if __name__ == "__main__":
    main()
