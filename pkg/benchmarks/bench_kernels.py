"""Time the compiled kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5]
"""
import argparse
import timeit

import numpy as np

from dktuples import _kernels
from dktuples.arith import _small_primes
from dktuples.characters import make_character


def cases():
    base = np.asarray(_small_primes(2 ** 16), dtype=np.int64)
    chi = make_character(100003, 3)
    A = np.arange(1, 3001, dtype=np.int64)
    B = np.arange(0, 3000, dtype=np.int64)
    return {
        "power_edges B=3000 k=2": lambda m: m.power_edges(3000, 256, 2),
        "power_edges B=3000 k=3": lambda m: m.power_edges(3000, 1, 3),
        "sieve_segment 2^32 + 2^22": lambda m: m.sieve_segment(2 ** 32, 2 ** 32 + 2 ** 22, base),
        "char counts 3000x3000 p=100003": lambda m: m.char_exponent_counts(chi.table, A, B, 1, chi.p, 3),
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    names = sorted(_kernels.BACKENDS)
    print(f"{'kernel':34}" + "".join(f"{n:>12}" for n in names) + f"{'speedup':>10}")
    for label, fn in cases().items():
        best = {}
        for name in names:
            mod = _kernels.BACKENDS[name]
            best[name] = min(timeit.repeat(lambda: fn(mod), number=1, repeat=args.repeat))
        row = f"{label:34}" + "".join(f"{best[n] * 1e3:>10.1f}ms" for n in names)
        if "cython" in best:
            row += f"{best['python'] / best['cython']:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
