"""Hot cascade kernel with a numba-jitted fast path and a pure-numpy fallback.

The backend is fixed at import time: numba when it is installed, numpy
otherwise. Set the environment variable ``NETSPACE_PURE_NUMPY=1`` to force
the numpy path even when numba is available (useful for debugging and for
the benchmark in ``benchmarks/bench_lt.py``).

Both kernels compute the same synchronous threshold cascade. Given a
symmetric weight matrix, per-node thresholds, and a boolean seed mask, they
return an int64 array mapping each node to the round in which it activated
(0 for seeds, -1 for nodes that never activate). An inactive node activates
in a round when the weight sum of its currently-active neighbors is positive
and reaches its threshold; all eligible nodes commit simultaneously.
"""

import os

import numpy as np

ENV_FLAG = "NETSPACE_PURE_NUMPY"


def cascade_rounds_numpy(weights: np.ndarray, thresholds: np.ndarray, seed_mask: np.ndarray) -> np.ndarray:
    """Pure-numpy cascade: one matrix-vector product per round."""
    round_of = np.full(thresholds.shape[0], -1, dtype=np.int64)
    active = seed_mask.copy()
    round_of[active] = 0
    r = 0
    while True:
        r += 1
        inflow = weights @ active.astype(np.float64)
        newly = ~active & (inflow > 0.0) & (inflow >= thresholds)
        if not newly.any():
            return round_of
        round_of[newly] = r
        active |= newly


def _build_numba_kernel():
    from numba import njit

    @njit(cache=True)
    def cascade_rounds_numba(weights, thresholds, seed_mask):
        n = thresholds.shape[0]
        round_of = np.full(n, -1, dtype=np.int64)
        active = seed_mask.copy()
        for v in range(n):
            if active[v]:
                round_of[v] = 0
        newly = np.empty(n, dtype=np.bool_)
        r = 0
        while True:
            r += 1
            any_new = False
            for v in range(n):
                newly[v] = False
                if not active[v]:
                    s = 0.0
                    for u in range(n):
                        if active[u]:
                            s += weights[v, u]
                    if s > 0.0 and s >= thresholds[v]:
                        newly[v] = True
                        any_new = True
            if not any_new:
                return round_of
            for v in range(n):
                if newly[v]:
                    active[v] = True
                    round_of[v] = r

    return cascade_rounds_numba


cascade_rounds_numba = None
if os.environ.get(ENV_FLAG, "") not in ("", "0"):
    BACKEND = "numpy"
else:
    try:
        cascade_rounds_numba = _build_numba_kernel()
        BACKEND = "numba"
    except ImportError:
        BACKEND = "numpy"

cascade_rounds = cascade_rounds_numba if BACKEND == "numba" else cascade_rounds_numpy
