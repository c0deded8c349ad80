#!/usr/bin/env python3
"""Benchmark the compiled Cython kernels against the pure-numpy fallback.

Runs the hot kernels (ordinal encoding, inversion encoding, LZ76 parsing)
on seeded noise at several sizes and prints median wall-times for both
backends plus the speedup.  Results are hardware-dependent; run locally.

Usage: python benchmarks/compare_backends.py [--sizes 100000,1000000] [--runs 9]
"""

import argparse
import importlib
import statistics
import time

import numpy as np


def _load_backends():
    backends = {}
    ref = importlib.import_module("entrokit._kernels._ref")
    backends["python"] = ref
    try:
        fast = importlib.import_module("entrokit._kernels._fast")
        backends["cython"] = fast
    except ImportError:
        print("compiled backend not built; showing pure python only")
    return backends


def _median_ms(fn, runs):
    fn()  # warm-up
    times = []
    for _ in range(runs):
        t0 = time.perf_counter_ns()
        fn()
        times.append(time.perf_counter_ns() - t0)
    return statistics.median(times) / 1e6


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="100000,1000000")
    parser.add_argument("--runs", type=int, default=9)
    parser.add_argument("--seed", type=int, default=42)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    backends = _load_backends()
    rng = np.random.default_rng(args.seed)

    header = f"{'kernel':<28}{'n':>10}" + "".join(
        f"{name + ' (ms)':>16}" for name in backends
    )
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))

    for n in sizes:
        x = rng.standard_normal(n)
        # LZ76 parsing rescans the prefix per phrase; the interpreted
        # fallback is only tractable on short sequences
        symbols = rng.integers(0, 2, min(n, 20_000)).astype(np.int64)
        cases = {
            "ordinal_encode(m=4)": lambda b, x=x: b.ordinal_encode(x, 4, 1),
            "ordinal_encode(m=7)": lambda b, x=x: b.ordinal_encode(x, 7, 1),
            "inversion_encode(m=10)": lambda b, x=x: b.inversion_encode(x, 10, 1),
            f"lz76_phrase_count(n={len(symbols)})": lambda b, s=symbols: b.lz76_phrase_count(s),
        }
        for label, case in cases.items():
            row = f"{label:<28}{n:>10}"
            med = {}
            for name, mod in backends.items():
                med[name] = _median_ms(lambda m=mod: case(m), args.runs)
                row += f"{med[name]:>16.3f}"
            if len(med) == 2:
                row += f"{med['python'] / med['cython']:>9.1f}x"
            print(row)
        # results must agree bit-for-bit across backends
        if len(backends) == 2:
            ref, fast = backends["python"], backends["cython"]
            assert np.array_equal(ref.ordinal_encode(x, 4, 1), fast.ordinal_encode(x, 4, 1))
            assert np.array_equal(ref.inversion_encode(x, 10, 1), fast.inversion_encode(x, 10, 1))
            assert ref.lz76_phrase_count(symbols) == fast.lz76_phrase_count(symbols)


if __name__ == "__main__":
    main()
