"""Hot loop of the bit-error simulation: numba JIT with a numpy fallback.

The per-symbol work (combine the array outputs, equalize by the known
complex gain, slice both quadrature rails, count bit errors) dominates
the simulation once the received block is formed, so it gets a compiled
kernel.  Which implementation runs is chosen by the ``DMRBF_USE_NUMBA``
environment variable:

* unset or ``auto`` -- numba when importable, else numpy;
* ``1`` -- require numba (raise if it is missing);
* ``0`` -- force the pure-numpy path.

Both paths consume identical pre-drawn arrays and perform the same
comparisons, so they return identical error counts for the same inputs;
``benchmarks/bench_kernels.py`` compares their throughput.
"""

from __future__ import annotations

import os

import numpy as np

ENV_FLAG = "DMRBF_USE_NUMBA"

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba installed
    HAVE_NUMBA = False


def active_backend() -> str:
    """Resolve the kernel backend from the environment: 'numba' or 'numpy'."""
    raw = os.environ.get(ENV_FLAG, "auto").strip().lower()
    if raw in ("0", "numpy", "never"):
        return "numpy"
    if raw in ("1", "numba", "always"):
        if not HAVE_NUMBA:
            raise RuntimeError(f"{ENV_FLAG}={raw!r} requires numba, which is not importable")
        return "numba"
    if raw in ("", "auto"):
        return "numba" if HAVE_NUMBA else "numpy"
    raise RuntimeError(f"unrecognized {ENV_FLAG} value {raw!r}; use 0, 1 or auto")


def count_bit_errors_numpy(
    w_conj: np.ndarray, rx: np.ndarray, gain: complex, sent: np.ndarray
) -> int:
    """Vectorized reference implementation of the detection loop."""
    z = (w_conj @ rx) / gain
    wrong_i = (z.real < 0.0) != (sent.real < 0.0)
    wrong_q = (z.imag < 0.0) != (sent.imag < 0.0)
    return int(np.count_nonzero(wrong_i)) + int(np.count_nonzero(wrong_q))


if HAVE_NUMBA:

    @njit(cache=True, nogil=True)
    def _count_bit_errors_jit(w_conj, rx, gain, sent):  # pragma: no cover - jitted
        n_elem, n_sym = rx.shape
        errors = 0
        for i in range(n_sym):
            y = 0.0 + 0.0j
            for k in range(n_elem):
                y += w_conj[k] * rx[k, i]
            z = y / gain
            if (z.real < 0.0) != (sent[i].real < 0.0):
                errors += 1
            if (z.imag < 0.0) != (sent[i].imag < 0.0):
                errors += 1
        return errors

    def count_bit_errors_numba(
        w_conj: np.ndarray, rx: np.ndarray, gain: complex, sent: np.ndarray
    ) -> int:
        return int(
            _count_bit_errors_jit(
                np.ascontiguousarray(w_conj),
                np.ascontiguousarray(rx),
                complex(gain),
                np.ascontiguousarray(sent),
            )
        )


def count_bit_errors(
    w_conj: np.ndarray, rx: np.ndarray, gain: complex, sent: np.ndarray
) -> int:
    """Bit errors after combining ``rx`` with ``w_conj`` and equalizing.

    ``sent`` holds the transmitted Gray-mapped QPSK symbols; a bit error
    is a sign disagreement on either quadrature rail, so each symbol
    contributes zero, one or two errors.
    """
    if active_backend() == "numba":
        return count_bit_errors_numba(w_conj, rx, gain, sent)
    return count_bit_errors_numpy(w_conj, rx, gain, sent)
