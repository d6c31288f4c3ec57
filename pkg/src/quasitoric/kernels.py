"""Hot kernel for the brute-force omniorientation sweep.

The oracle enumerates every assignment mask in [0, 2^k) and keeps those whose
bit-parity against each vertex row matches the rhs bit. Two interchangeable
backends: a numba @njit loop and a vectorized numpy fallback. Selection order:
the QTM_NO_NUMBA environment variable (any value except "" or "0" forces
numpy), otherwise numba when importable. Both return identical results;
benchmarks/bench_enumeration.py compares them.
"""

from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - depends on environment
    _HAVE_NUMBA = False

ENV_FLAG = "QTM_NO_NUMBA"


def numba_available() -> bool:
    return _HAVE_NUMBA


def use_numba() -> bool:
    """Backend decision, re-read from the environment on every call."""
    if os.environ.get(ENV_FLAG, "") not in ("", "0"):
        return False
    return _HAVE_NUMBA


def backend_name() -> str:
    return "numba" if use_numba() else "numpy"


def _enumerate_numpy(rows: np.ndarray, rhs: np.ndarray, n_masks: int):
    masks = np.arange(n_masks, dtype=np.uint64)
    ok = np.ones(n_masks, dtype=bool)
    for row, b in zip(rows.tolist(), rhs.tolist()):
        parity = np.bitwise_count(masks & np.uint64(row)) & np.uint8(1)
        ok &= parity == b
    count = int(np.count_nonzero(ok))
    if count == 0:
        return 0, -1
    return count, int(np.flatnonzero(ok)[0])


if _HAVE_NUMBA:

    @njit(cache=True)
    def _enumerate_numba(rows, rhs, n_masks):  # pragma: no cover - jitted
        count = 0
        first = -1
        n_rows = rows.shape[0]
        for x in range(n_masks):
            ok = True
            for i in range(n_rows):
                v = x & rows[i]
                v ^= v >> 32
                v ^= v >> 16
                v ^= v >> 8
                v ^= v >> 4
                v ^= v >> 2
                v ^= v >> 1
                if (v & 1) != rhs[i]:
                    ok = False
                    break
            if ok:
                count += 1
                if first < 0:
                    first = x
        return count, first


def enumerate_satisfying(rows, rhs, num_unknowns: int) -> tuple[int, int]:
    """(count, smallest satisfying mask or -1) over all 2^num_unknowns masks."""
    rows_arr = np.asarray(list(rows), dtype=np.int64)
    rhs_arr = np.asarray(list(rhs), dtype=np.int64)
    n_masks = 1 << num_unknowns
    if rows_arr.size == 0:
        return n_masks, 0
    if use_numba():
        count, first = _enumerate_numba(rows_arr, rhs_arr, n_masks)
        return int(count), int(first)
    return _enumerate_numpy(rows_arr, rhs_arr, n_masks)
