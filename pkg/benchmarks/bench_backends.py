"""Compare the numba and pure-numpy evaluation kernels.

    python benchmarks/bench_backends.py [--points N] [--repeat R]

Each case is run once per backend before timing, so numba compilation is
excluded. Reported times are the best of ``--repeat`` runs.
"""

import argparse
import time

import numpy as np

from blends import _kernels, eval_grid, gen_cospi, gen_exp_recip, gen_step

CASES = [
    ("cospi (8,8)", lambda: gen_cospi(8, 8), 0),
    ("cospi (8,8)", lambda: gen_cospi(8, 8), 3),
    ("exp-recip (100,900)", lambda: gen_exp_recip(100, 900), 0),
    ("step (128,128)", lambda: gen_step(128, 128), 3),
    ("step (512,512)", lambda: gen_step(512, 512), 3),
]


def best_time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--points", type=int, default=2021)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    backends = _kernels.available_backends()
    s = np.arange(args.points) / (args.points - 1)
    print(f"{args.points} points, best of {args.repeat}")
    print(f"{'case':<22}{'nder':>5}" + "".join(f"{b:>12}" for b in backends) + ("  numpy/numba" if len(backends) > 1 else ""))
    for label, make, nder in CASES:
        blend = make()
        row = []
        results = []
        for name in backends:
            with _kernels.use_backend(name):
                results.append(eval_grid(blend, s, nder))
                row.append(best_time(lambda: eval_grid(blend, s, nder), args.repeat))
        same = all(np.array_equal(results[0], r, equal_nan=True) for r in results[1:])
        line = f"{label:<22}{nder:>5}" + "".join(f"{t * 1e3:>10.2f}ms" for t in row)
        if len(row) > 1:
            t = dict(zip(backends, row))
            line += f"{t['numpy'] / t['numba']:>12.2f}x"
        if not same:
            line += "  (results differ!)"
        print(line)


if __name__ == "__main__":
    main()
