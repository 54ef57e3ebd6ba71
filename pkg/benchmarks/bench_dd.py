"""Compare the compiled and pure double-description kernels.

Runs the restricted sphere search (the enumeration-heavy code path)
over a few layered fixtures and reports wall time per kernel.  Usage:

    python benchmarks/bench_dd.py [--sizes 6,10,14]
"""

import argparse
import time

from nscrush import dd
from nscrush.library import closed_fixture
from nscrush.spheres import restricted_sphere_search


def time_search(tri, kernel, repeats=1):
    dd.set_kernel(kernel)
    best = None
    for _ in range(repeats):
        start = time.perf_counter()
        result = restricted_sphere_search(tri, 2)
        elapsed = time.perf_counter() - start
        best = elapsed if best is None else min(best, elapsed)
    return best, result


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--sizes", default="6,10,14",
                        help="comma-separated tetrahedron counts")
    parser.add_argument("--repeats", type=int, default=1)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    kernels = dd.available_kernels()
    if "compiled" not in kernels:
        print("compiled kernel not built; benchmarking pure only")
    print("{:>6} {:>14} {:>12} {:>12} {:>9}".format(
        "tets", "enumerations", "pure (s)", "compiled (s)", "speedup"))
    for n in sizes:
        tri = closed_fixture(n)
        pure_t, pure_r = time_search(tri, "pure", args.repeats)
        if "compiled" in kernels:
            comp_t, comp_r = time_search(tri, "compiled", args.repeats)
            assert comp_r == pure_r, "kernels must agree exactly"
            print("{:>6} {:>14} {:>12.3f} {:>12.3f} {:>8.1f}x".format(
                n, pure_r.enumerations, pure_t, comp_t, pure_t / comp_t))
        else:
            print("{:>6} {:>14} {:>12.3f} {:>12} {:>9}".format(
                n, pure_r.enumerations, pure_t, "-", "-"))
    dd.set_kernel("auto")


if __name__ == "__main__":
    main()
