#!/usr/bin/env python3
"""Benchmark the compiled scan kernel against the numpy fallback.

Times the exhaustive minimum-energy search on random MAX CUT Hamiltonians
of increasing size, single-threaded and multi-threaded. Run from a checkout
with the extension built:

    python3 benchmarks/bench_kernels.py [--max-n 24]
"""

import argparse
import time

from graph2ham._kernels import _pure
from graph2ham.graphs import generate_graph
from graph2ham.oracles import _flatten_diagonal_terms, min_energy
from graph2ham.reductions import reduce_maxcut

try:
    from graph2ham._kernels import _fast
except ImportError:
    _fast = None


def time_backend(scan, tables, n):
    started = time.monotonic()
    result = scan(0, 1 << n, *tables)
    return result, time.monotonic() - started


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-n", type=int, default=24)
    parser.add_argument("--edges-per-vertex", type=int, default=3)
    args = parser.parse_args()

    print(f"{'n':>4} {'terms':>6} {'pure (s)':>10} {'fast (s)':>10} "
          f"{'speedup':>8} {'threaded (s)':>13}")
    for n in range(16, args.max_n + 1, 2):
        g = generate_graph("random_gnm", n, {"m": args.edges_per_vertex * n},
                           seed=n)
        h = reduce_maxcut(g, 1).hamiltonian
        tables = _flatten_diagonal_terms(h)[:4]

        pure_result, pure_t = time_backend(_pure.scan_min_int, tables, n)
        if _fast is not None:
            fast_result, fast_t = time_backend(_fast.scan_min_int, tables, n)
            assert fast_result == pure_result
            fast_col = f"{fast_t:10.3f}"
            speedup = f"{pure_t / fast_t:7.1f}x"
        else:
            fast_col, speedup = f"{'n/a':>10}", f"{'n/a':>8}"

        started = time.monotonic()
        threaded_result, _ = min_energy(h)
        threaded_t = time.monotonic() - started
        assert (threaded_result.quarters // 4,) == (pure_result[0],)

        print(f"{n:>4} {len(h.terms):>6} {pure_t:10.3f} {fast_col} "
              f"{speedup} {threaded_t:13.3f}")


if __name__ == "__main__":
    main()
