#!/usr/bin/env python3
"""Benchmark the bit-error counting kernel: numba JIT vs pure numpy.

The kernel combines the received block with the beamformer, equalizes,
slices both QPSK rails and counts sign disagreements; it is the hot loop
of every BER sweep.  Both implementations consume identical arrays, so
their counts must match exactly; only the wall time may differ.

Run:  python3 benchmarks/bench_kernels.py
"""

import time

import numpy as np

from dmrbf._kernels import HAVE_NUMBA, count_bit_errors_numpy

if HAVE_NUMBA:
    from dmrbf._kernels import count_bit_errors_numba
else:
    count_bit_errors_numba = None
    print("numba not importable - timing the numpy path only")

SHAPES = [
    (4, 20_000),
    (4, 200_000),
    (8, 200_000),
    (16, 200_000),
    (4, 2_000_000),
]
REPEATS = 5


def make_inputs(rng, n_b, n_sym):
    w = rng.standard_normal(n_b) + 1j * rng.standard_normal(n_b)
    w /= np.linalg.norm(w)
    sent = rng.choice([1 + 1j, 1 - 1j, -1 + 1j, -1 - 1j], size=n_sym) / np.sqrt(2)
    rx = np.outer(w, sent) + 0.5 * (
        rng.standard_normal((n_b, n_sym)) + 1j * rng.standard_normal((n_b, n_sym))
    )
    return w.conj(), np.ascontiguousarray(rx), 1.0 + 0.0j, sent


def best_of(fn, args, repeats=REPEATS):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    rng = np.random.default_rng(0)

    if count_bit_errors_numba is not None:
        # trigger (or load the cached) JIT compile outside the timed region
        count_bit_errors_numba(*make_inputs(rng, 2, 64))

    print(f"{'shape':>16} {'numpy':>10} {'numba':>10} {'speedup':>8}   errors")
    for n_b, n_sym in SHAPES:
        args = make_inputs(rng, n_b, n_sym)
        t_np, errs_np = best_of(count_bit_errors_numpy, args)
        row = f"{f'{n_b} x {n_sym}':>16} {t_np * 1e3:>8.2f}ms"
        if count_bit_errors_numba is not None:
            t_nb, errs_nb = best_of(count_bit_errors_numba, args)
            assert errs_nb == errs_np, (errs_nb, errs_np)
            row += f" {t_nb * 1e3:>8.2f}ms {t_np / t_nb:>7.2f}x"
        else:
            row += f" {'-':>10} {'-':>8}"
        print(row + f"   {errs_np}")


if __name__ == "__main__":
    main()
