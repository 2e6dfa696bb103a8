"""Time the numba quadrature kernels against the numpy fallbacks.

    python benchmarks/bench_kernels.py [--levels 5 6 7] [--repeats 3]

Same table as ``eulerseries bench kernels``.
"""

import argparse

from eulerseries.bench import compare_kernels, format_table

if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--levels", type=int, nargs="+", default=[5, 6, 7])
    p.add_argument("--repeats", type=int, default=3)
    args = p.parse_args()
    print(format_table(compare_kernels(args.levels, args.repeats)), end="")
