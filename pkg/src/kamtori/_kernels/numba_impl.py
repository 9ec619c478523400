"""Numba-jitted implementations of the hot kernels.

Inner dot products accumulate coordinate-by-coordinate in index order,
matching numpy_impl bit for bit. Falls back to numpy_impl.convolve when
packed keys would overflow 63 bits (never hit at the supported degrees).
"""

import numpy as np
from numba import njit

from . import numpy_impl


@njit(cache=True)
def _convolve_packed(exps_a, coeffs_a, exps_b, coeffs_b, strides):
    na = exps_a.shape[0]
    nb = exps_b.shape[0]
    d = exps_a.shape[1]
    n = na * nb
    keys = np.empty(n, dtype=np.int64)
    prods = np.empty(n, dtype=np.complex128)
    sums = np.empty((n, d), dtype=np.int64)
    idx = 0
    for i in range(na):
        for j in range(nb):
            key = np.int64(0)
            for t in range(d):
                e = exps_a[i, t] + exps_b[j, t]
                sums[idx, t] = e
                key += e * strides[t]
            keys[idx] = key
            prods[idx] = coeffs_a[i] * coeffs_b[j]
            idx += 1
    order = np.argsort(keys)
    out_e = np.empty((n, d), dtype=np.int64)
    out_c = np.empty(n, dtype=np.complex128)
    m = -1
    prev = np.int64(0)
    for pos in range(n):
        o = order[pos]
        k = keys[o]
        if m < 0 or k != prev:
            m += 1
            prev = k
            out_c[m] = prods[o]
            for t in range(d):
                out_e[m, t] = sums[o, t]
        else:
            out_c[m] += prods[o]
    return out_e[: m + 1].copy(), out_c[: m + 1].copy()


def convolve(exps_a, coeffs_a, exps_b, coeffs_b):
    strides = numpy_impl.pack_strides(exps_a, exps_b)
    if strides is None:
        return numpy_impl.convolve(exps_a, coeffs_a, exps_b, coeffs_b)
    return _convolve_packed(exps_a, coeffs_a, exps_b, coeffs_b, strides)


@njit(cache=True)
def _min_abs_dot(points, omega):
    best = np.inf
    best_idx = -1
    for r in range(points.shape[0]):
        acc = 0.0
        for j in range(points.shape[1]):
            acc += points[r, j] * omega[j]
        a = abs(acc)
        if a < best:
            best = a
            best_idx = r
    return best, best_idx


def min_abs_dot(points, omega):
    value, idx = _min_abs_dot(points, omega)
    return float(value), int(idx)


@njit(cache=True)
def batch_min_abs_dot(points, omegas):
    n_samples = omegas.shape[0]
    out = np.empty(n_samples, dtype=np.float64)
    for s in range(n_samples):
        best = np.inf
        for r in range(points.shape[0]):
            acc = 0.0
            for j in range(points.shape[1]):
                acc += points[r, j] * omegas[s, j]
            a = abs(acc)
            if a < best:
                best = a
        out[s] = best
    return out
