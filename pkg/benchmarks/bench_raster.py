"""Time the compiled and NumPy polygon-fill kernels on the same puzzles.

    python benchmarks/bench_raster.py [--count N] [--sizes 32,96,224]
"""

import argparse
import time

import numpy as np

from savirt import _fill_numpy
from savirt.generator import GeneratorConfig, generate
from savirt.raster import rasterize

try:
    from savirt._ext import fill as _fill_cython
except ImportError:
    _fill_cython = None


def bench(puzzles, size, kernel, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        out = [rasterize(p, size, kernel=kernel).images for p in puzzles]
        best = min(best, time.perf_counter() - t)
    return best, out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--sizes", default="32,96,224")
    ap.add_argument("--layout", default="Grid3x3")
    args = ap.parse_args()

    puzzles = generate(GeneratorConfig(args.layout, "IRAVEN"), args.count, 0)
    print(f"{args.count} {args.layout} puzzles (16 panels each)")
    print(f"{'size':>5} {'numpy s':>9} {'cython s':>9} {'speedup':>8}  identical")
    for size in (int(s) for s in args.sizes.split(",")):
        t_np, a = bench(puzzles, size, _fill_numpy)
        if _fill_cython is None:
            print(f"{size:>5} {t_np:>9.3f} {'n/a':>9} {'n/a':>8}  (extension not built)")
            continue
        t_cy, b = bench(puzzles, size, _fill_cython)
        same = all(np.array_equal(x, y) for x, y in zip(a, b))
        print(f"{size:>5} {t_np:>9.3f} {t_cy:>9.3f} {t_np / t_cy:>7.1f}x  {same}")


if __name__ == "__main__":
    main()
