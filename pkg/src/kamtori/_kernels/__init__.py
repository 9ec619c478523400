"""Hot numeric kernels with selectable backend.

The numba-jitted implementations are used by default; setting the
environment variable ``KAMTORI_NUMBA`` to ``0``/``false``/``off`` (or a
failed numba import) selects the pure-numpy fallback.  Both backends are
importable directly (``numpy_impl``, ``numba_impl``) for parity tests and
for the benchmark script.
"""

import os

from . import numpy_impl


def _numba_wanted() -> bool:
    flag = os.environ.get("KAMTORI_NUMBA", "1").strip().lower()
    return flag not in {"0", "false", "off", "no"}


if _numba_wanted():
    try:
        from . import numba_impl as _impl

        BACKEND = "numba"
    except Exception:  # pragma: no cover - numba missing/broken
        _impl = numpy_impl
        BACKEND = "numpy"
else:
    _impl = numpy_impl
    BACKEND = "numpy"

convolve = _impl.convolve
min_abs_dot = _impl.min_abs_dot
batch_min_abs_dot = _impl.batch_min_abs_dot


def backend() -> str:
    """Name of the active kernel backend ("numba" or "numpy")."""
    return BACKEND
