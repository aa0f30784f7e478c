#!/usr/bin/env python3
"""Benchmark the compiled orbit kernel against the pure-Python fallback.

Runs the full-painting-space partition on the rank-10 catalog flagship and
on synthetic path diagrams of growing rank, timing both backends.  The
inner loop is the library's hot spot, which is why it ships compiled; this
script documents what the compilation buys.

Usage: python benchmarks/bench_orbits.py [--max-bits N] [--pure-max-bits N]
"""

import argparse
import time
from array import array

from vogankm import _orbit_py, catalog, kernels, vogan

try:
    from vogankm import _orbitcore
except ImportError:
    _orbitcore = None


def path_flips(k):
    out = []
    for i in range(k):
        m = 0
        if i > 0:
            m |= 1 << (i - 1)
        if i + 1 < k:
            m |= 1 << (i + 1)
        out.append(m)
    return out


def run(impl, k, flips):
    n_perms, nb, tables = kernels.byte_tables(k, [])
    t0 = time.perf_counter()
    ids = impl.partition_all(k, array("I", flips), n_perms, nb, tables)
    return time.perf_counter() - t0, max(ids) + 1


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-bits", type=int, default=22)
    ap.add_argument("--pure-max-bits", type=int, default=18)
    args = ap.parse_args()

    backends = [("pure", _orbit_py)]
    if _orbitcore is not None:
        backends.insert(0, ("cython", _orbitcore))
    else:
        print("compiled kernel not available; timing the fallback only")

    e10 = catalog.lookup("E10")
    space = vogan._MoveSpace(e10.gcm, vogan.identity_involution(e10.gcm))
    print(f"{'case':<14} {'backend':<8} {'seconds':>9}  classes")
    for name, impl in backends:
        dt, ncls = run(impl, space.k, space.flips)
        print(f"{'E10 (2^10)':<14} {name:<8} {dt:>9.4f}  {ncls}")

    for k in range(16, args.max_bits + 1, 2):
        flips = path_flips(k)
        times = {}
        for name, impl in backends:
            if name == "pure" and k > args.pure_max_bits:
                continue
            dt, ncls = run(impl, k, flips)
            times[name] = dt
            print(f"{f'path (2^{k})':<14} {name:<8} {dt:>9.4f}  {ncls}")
        if len(times) == 2:
            print(f"{'':<14} speedup  {times['pure'] / times['cython']:>8.1f}x")


if __name__ == "__main__":
    main()
