"""Timing comparison of the compiled and pure-numpy kernel backends.

Run as a script:  python3 benchmarks/bench_kernels.py [--calls 20000]

Covers both hot paths: the per-call witness evaluation that dominates
the optimizer loop, and the full-enumeration oracle.  The compiled
backend is skipped (with a note) when the extension is not built.
"""
import argparse
import time

import numpy as np

from percwit._core import reference
from percwit.perceptron import FUNCTION_IDS
from percwit.witness import build_witness

try:
    from percwit._core import _fastcore
except ImportError:
    _fastcore = None


def random_arguments(rng):
    def unit(n):
        v = rng.normal(size=(n, 3))
        return v / np.linalg.norm(v, axis=1, keepdims=True)
    return unit(4), unit(4), unit(2), unit(2)


def bench_witness_value(backend, wr, calls, rng):
    args = [random_arguments(rng) for _ in range(256)]
    total = 0.0
    t0 = time.perf_counter()
    for i in range(calls):
        n1, n2, m1, m2 = args[i % 256]
        total += backend.witness_value(wr, n1, n2, m1, m2)
    elapsed = time.perf_counter() - t0
    return elapsed, total


def bench_oracle(backend, weights, repeats):
    t0 = time.perf_counter()
    for _ in range(repeats):
        totals = backend.oracle_max_totals(weights)
    return time.perf_counter() - t0, int(totals.max())


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--calls", type=int, default=20000,
                        help="witness_value calls per backend")
    parser.add_argument("--oracle-repeats", type=int, default=3)
    args = parser.parse_args()

    w = build_witness(FUNCTION_IDS["and"])
    weights, den = w.weight_grid()
    wr = np.ascontiguousarray(weights.reshape(2, 4, 4, 2, 2).astype(float) / den)

    backends = [("numpy", reference)]
    if _fastcore is not None:
        backends.append(("compiled", _fastcore))
    else:
        print("compiled extension not built; timing the numpy backend only")

    print(f"witness_value, {args.calls} calls on the 80-term grid")
    base = None
    for name, mod in backends:
        rng = np.random.default_rng(0)
        elapsed, checksum = bench_witness_value(mod, wr, args.calls, rng)
        rate = args.calls / elapsed
        note = ""
        if base is None:
            base = elapsed
        else:
            note = f"  ({base / elapsed:.1f}x vs numpy)"
        print(f"  {name:<9} {elapsed:8.3f}s  {rate:10.0f} calls/s{note}")
        print(f"  {'':<9} checksum {checksum:.6f}")

    print(f"oracle_max_totals, {args.oracle_repeats} full enumerations")
    base = None
    for name, mod in backends:
        elapsed, best = bench_oracle(mod, weights, args.oracle_repeats)
        note = ""
        if base is None:
            base = elapsed
        else:
            note = f"  ({base / elapsed:.1f}x vs numpy)"
        print(f"  {name:<9} {elapsed:8.3f}s  best {best}/{den}{note}")


if __name__ == "__main__":
    main()
