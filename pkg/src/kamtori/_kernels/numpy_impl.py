"""Pure-numpy reference implementations of the hot kernels.

Dot products accumulate coordinate-by-coordinate in index order so that
both backends produce bitwise-identical values for the same inputs.
"""

import math

import numpy as np


def pack_strides(exps_a, exps_b):
    """Balanced-base strides packing exponent rows into single int64 keys.

    Returns None when the packed keys would not fit in 63 bits; callers
    then combine duplicates with ``np.unique`` on rows instead.
    """
    d = exps_a.shape[1]
    ma = int(np.abs(exps_a).max(initial=0))
    mb = int(np.abs(exps_b).max(initial=0))
    bound = ma + mb + 1
    base = 2 * bound + 1
    if d * math.log2(base) >= 62.0:
        return None
    return (base ** np.arange(d, dtype=np.int64)).astype(np.int64)


def convolve(exps_a, coeffs_a, exps_b, coeffs_b):
    """Convolution of two sparse exponent/coefficient arrays.

    Returns (exps, coeffs) with duplicate exponent rows summed; no zero
    pruning is done here.
    """
    na, d = exps_a.shape
    nb = exps_b.shape[0]
    sums = (exps_a[:, None, :] + exps_b[None, :, :]).reshape(na * nb, d)
    prods = (coeffs_a[:, None] * coeffs_b[None, :]).reshape(na * nb)
    strides = pack_strides(exps_a, exps_b)
    if strides is None:
        out_e, inverse = np.unique(sums, axis=0, return_inverse=True)
        out_c = np.zeros(len(out_e), dtype=np.complex128)
        np.add.at(out_c, inverse.reshape(-1), prods)
        return out_e, out_c
    keys = sums @ strides
    order = np.argsort(keys, kind="stable")
    keys = keys[order]
    prods = prods[order]
    sums = sums[order]
    starts = np.concatenate(([0], np.flatnonzero(np.diff(keys)) + 1))
    return sums[starts], np.add.reduceat(prods, starts)


def _accumulate_dots(points, omega):
    acc = np.zeros(points.shape[0], dtype=np.float64)
    for j in range(points.shape[1]):
        acc += points[:, j] * omega[j]
    return acc


def min_abs_dot(points, omega):
    """Minimum of |<omega, i>| over the given lattice rows.

    Returns (value, row index); the first minimizing row wins ties.
    """
    acc = np.abs(_accumulate_dots(points, omega))
    idx = int(acc.argmin())
    return float(acc[idx]), idx


def batch_min_abs_dot(points, omegas):
    """min |<omega, i>| over rows of `points`, for each omega row."""
    n_samples = omegas.shape[0]
    out = np.empty(n_samples, dtype=np.float64)
    # chunk so the (samples x points) buffer stays modest
    chunk = max(1, int(4_000_000 // max(1, points.shape[0])))
    for lo in range(0, n_samples, chunk):
        block = omegas[lo : lo + chunk]
        acc = np.zeros((block.shape[0], points.shape[0]), dtype=np.float64)
        for j in range(points.shape[1]):
            acc += block[:, j : j + 1] * points[None, :, j]
        out[lo : lo + chunk] = np.abs(acc).min(axis=1)
    return out
