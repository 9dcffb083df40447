"""Hot numeric reductions, each with a numba and a pure-numpy implementation.

The active backend is chosen once at import time: set ``RCT_NUMBA=0`` to
force the numpy path; by default the numba path is used when numba imports
cleanly. Both backends are kept importable (``NUMPY_BACKEND`` /
``NUMBA_BACKEND``) so tests can assert agreement and the benchmark can
time them side by side.

All kernels assume pre-conditioned float64 arrays: probability inputs are
already restricted to the relevant support (strictly positive), length
inputs are finite and nonnegative. Callers in ``measures`` and ``coding``
do that filtering.
"""

from __future__ import annotations

import math
import os

import numpy as np

_ENV_FLAG = os.environ.get("RCT_NUMBA", "1").strip().lower()
_WANT_NUMBA = _ENV_FLAG not in ("0", "false", "no", "off")


# -- pure-numpy implementations ------------------------------------------------

def _np_kraft_sum(lengths):
    return float(np.exp2(-lengths).sum())


def _np_neg_plogp_bits(probs):
    return float(-(probs * np.log2(probs)).sum())


def _np_kl_bits(p, q):
    return float((p * np.log2(p / q)).sum())


def _np_power_sum_ln(probs, order):
    # log(sum p^order) via max-shifted log-sum-exp
    t = order * np.log(probs)
    m = t.max()
    return float(m + np.log(np.exp(t - m).sum()))


def _np_cross_power_sum_ln(p, q, order):
    # log(sum p^order * q^(1-order)), arrays restricted to common support
    t = order * np.log(p) + (1.0 - order) * np.log(q)
    m = t.max()
    return float(m + np.log(np.exp(t - m).sum()))


def _np_block_integer_length_bits(probs, n):
    # expected ceil(-log2 .) codeword length of the n-fold product source
    block = probs
    for _ in range(n - 1):
        block = np.multiply.outer(block, probs).ravel()
    return float(block @ np.ceil(-np.log2(block)))


NUMPY_BACKEND = {
    "kraft_sum": _np_kraft_sum,
    "neg_plogp_bits": _np_neg_plogp_bits,
    "kl_bits": _np_kl_bits,
    "power_sum_ln": _np_power_sum_ln,
    "cross_power_sum_ln": _np_cross_power_sum_ln,
    "block_integer_length_bits": _np_block_integer_length_bits,
}


# -- numba implementations (scalar loops) ----------------------------------------

def _build_numba_backend():
    from numba import njit

    @njit(cache=True)
    def kraft_sum(lengths):
        z = 0.0
        for i in range(lengths.size):
            z += 2.0 ** (-lengths[i])
        return z

    @njit(cache=True)
    def neg_plogp_bits(probs):
        h = 0.0
        for i in range(probs.size):
            h -= probs[i] * math.log2(probs[i])
        return h

    @njit(cache=True)
    def kl_bits(p, q):
        d = 0.0
        for i in range(p.size):
            d += p[i] * math.log2(p[i] / q[i])
        return d

    @njit(cache=True)
    def power_sum_ln(probs, order):
        t = np.empty(probs.size)
        m = -1.0e300
        for i in range(probs.size):
            ti = order * math.log(probs[i])
            t[i] = ti
            if ti > m:
                m = ti
        s = 0.0
        for i in range(t.size):
            s += math.exp(t[i] - m)
        return m + math.log(s)

    @njit(cache=True)
    def cross_power_sum_ln(p, q, order):
        t = np.empty(p.size)
        m = -1.0e300
        for i in range(p.size):
            ti = order * math.log(p[i]) + (1.0 - order) * math.log(q[i])
            t[i] = ti
            if ti > m:
                m = ti
        s = 0.0
        for i in range(t.size):
            s += math.exp(t[i] - m)
        return m + math.log(s)

    @njit(cache=True)
    def block_integer_length_bits(probs, n):
        k = probs.size
        total = 1
        for _ in range(n):
            total *= k
        idx = np.zeros(n, dtype=np.int64)
        acc = 0.0
        for _ in range(total):
            pr = 1.0
            for j in range(n):
                pr *= probs[idx[j]]
            acc += pr * math.ceil(-math.log2(pr))
            j = n - 1
            while j >= 0:
                idx[j] += 1
                if idx[j] < k:
                    break
                idx[j] = 0
                j -= 1
        return acc

    return {
        "kraft_sum": kraft_sum,
        "neg_plogp_bits": neg_plogp_bits,
        "kl_bits": kl_bits,
        "power_sum_ln": power_sum_ln,
        "cross_power_sum_ln": cross_power_sum_ln,
        "block_integer_length_bits": block_integer_length_bits,
    }


try:
    NUMBA_BACKEND = _build_numba_backend()
except ImportError:
    NUMBA_BACKEND = None

if _WANT_NUMBA and NUMBA_BACKEND is not None:
    BACKEND = "numba"
    _active = NUMBA_BACKEND
else:
    BACKEND = "numpy"
    _active = NUMPY_BACKEND

kraft_sum = _active["kraft_sum"]
neg_plogp_bits = _active["neg_plogp_bits"]
kl_bits = _active["kl_bits"]
power_sum_ln = _active["power_sum_ln"]
cross_power_sum_ln = _active["cross_power_sum_ln"]
block_integer_length_bits = _active["block_integer_length_bits"]
