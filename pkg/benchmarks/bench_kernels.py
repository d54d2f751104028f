#!/usr/bin/env python3
"""Benchmark the jitted kernels against the pure-numpy fallback.

Times each hot kernel on representative inputs and prints a table of
per-call medians plus the speedup. The jitted backend is warmed up first
so compile time stays out of the numbers.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import statistics
import time

import numpy as np

from deltacert.catalog import standard
from deltacert.core import direct_product
from deltacert.kernels import numba_backend, numpy_backend
from deltacert.structure import generating_set


def _median_time(fn, args, repeat: int) -> float:
    samples = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn(*args)
        samples.append(time.perf_counter() - start)
    return statistics.median(samples)


def build_cases():
    s5 = standard("symmetric", 5)
    big = direct_product(s5, standard("cyclic", 2))  # order 240
    gens = np.asarray(generating_set(s5), dtype=np.int32)
    identity_map = np.arange(s5.order, dtype=np.int32)
    return [
        ("assoc_defect n=240", "assoc_defect", (big.table,)),
        ("class_ids n=240", "class_ids", (big.table, big.inverse)),
        ("element_orders n=240", "element_orders", (big.table,)),
        ("hom_defect n=120", "hom_defect", (s5.table, s5.table, identity_map)),
        ("generated_mask n=120", "generated_mask", (s5.table, gens)),
        ("try_extend n=120", "try_extend", (s5.table, s5.table, gens, gens)),
    ]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=25,
                        help="timed repetitions per kernel (median reported)")
    args = parser.parse_args()

    cases = build_cases()
    # warm the jit cache on the real argument types
    for _, name, call_args in cases:
        getattr(numba_backend, name)(*call_args)

    header = f"{'kernel':<24}{'numpy':>12}{'numba':>12}{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for label, name, call_args in cases:
        t_np = _median_time(getattr(numpy_backend, name), call_args, args.repeat)
        t_nb = _median_time(getattr(numba_backend, name), call_args, args.repeat)
        ratio = t_np / t_nb if t_nb > 0 else float("inf")
        print(f"{label:<24}{t_np * 1e3:>10.3f}ms{t_nb * 1e3:>10.3f}ms"
              f"{ratio:>9.1f}x")


if __name__ == "__main__":
    main()
