#!/usr/bin/env python3
"""Benchmark the pure-Python kernels against the compiled extension.

Times the three hot paths (canonicalizing RREF, batched stacked ranks,
and a full verification run) on representative desk-scale inputs.

    python benchmarks/bench_kernels.py
"""

import random
import time

from sidoncodes import build_tower, construct_code, enumerate_code, min_distance
from sidoncodes import linalg
from sidoncodes.subspace import orbit_matrices


def _time(fn, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_rref(backend, tower, count=4000):
    gf = tower.gf_tables()
    rng = random.Random(0)
    mats = [
        [[rng.randrange(tower.q) for _ in range(tower.n)] for _ in range(tower.k + 1)]
        for _ in range(count)
    ]

    def run():
        for m in mats:
            backend.rref(m, tower.n, gf)

    return _time(run), count


def bench_stack_ranks(backend, tower, nbottom=1023, calls=120):
    gf = tower.gf_tables()
    rng = random.Random(1)
    mats = [
        [[rng.randrange(tower.q) for _ in range(tower.n)] for _ in range(tower.k)]
        for _ in range(nbottom)
    ]
    top = [[rng.randrange(tower.q) for _ in range(tower.n)] for _ in range(tower.k)]
    prepared = backend.prepare(mats, tower.n, gf)

    def run():
        for _ in range(calls):
            backend.stack_ranks(top, prepared, tower.n, gf)

    return _time(run), calls * nbottom


def bench_verify(tower, family):
    code = construct_code(tower, family)

    def run():
        enum = enumerate_code(code)
        min_distance(code, enum)

    return _time(run, repeat=1)


def main():
    t2210 = build_tower(2, 1, 2, 5, 0)
    t326 = build_tower(3, 1, 2, 3, 0)
    backends = [("pure", linalg.get_backend("pure"))]
    try:
        backends.append(("c", linalg.get_backend("c")))
    except ImportError:
        print("compiled extension not built; benchmarking pure backend only")

    print(f"{'benchmark':<34} " + "".join(f"{name:>12} " for name, _ in backends) + "  speedup")
    rows = []
    for label, fn in [
        ("rref 3x10 GF(2), 4000 mats", lambda b: bench_rref(b, t2210)),
        ("rref 3x6 GF(3), 4000 mats", lambda b: bench_rref(b, t326)),
        ("stack_ranks GF(2), 120x1023", lambda b: bench_stack_ranks(b, t2210)),
        ("stack_ranks GF(3), 120x364", lambda b: bench_stack_ranks(b, t326, nbottom=364)),
    ]:
        times = [fn(b)[0] for _, b in backends]
        rows.append((label, times))
    for label, times in rows:
        cells = "".join(f"{t * 1000:>10.1f}ms " for t in times)
        speedup = f"{times[0] / times[-1]:>8.1f}x" if len(times) > 1 else ""
        print(f"{label:<34} {cells} {speedup}")

    # end to end: full enumeration + distance scan through the active backend
    import os
    import subprocess
    import sys

    print()
    for name, _ in backends:
        env = dict(os.environ, SIDON_CODES_BACKEND=name)
        code = (
            "from benchmarks.bench_kernels import bench_verify;"
            "from sidoncodes import build_tower;"
            "print(f'{bench_verify(build_tower(2,1,2,5,0), \"thm37\"):.2f}')"
        )
        out = subprocess.run(
            [sys.executable, "-c", code], env=env, capture_output=True, text=True, cwd="."
        )
        took = out.stdout.strip() or "?"
        print(f"thm37 verify (enumerate + distance), backend={name}: {took}s")


if __name__ == "__main__":
    main()
