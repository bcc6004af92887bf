"""Backend selection for the hot enumeration kernels.

Kernels are written once as plain Python over flat integer buffers. When numba
is importable and ``FREENECK_NO_NUMBA`` is unset (or "0"), they are compiled
with ``numba.njit``; otherwise the same source runs as ordinary Python on
lists, which is slow but dependency free and easy to step through.
"""
import os

import numpy as np

_FLAG = os.environ.get("FREENECK_NO_NUMBA", "").strip().lower()
_DISABLED = _FLAG not in ("", "0", "false", "no")

try:
    if _DISABLED:
        raise ImportError("numba disabled by FREENECK_NO_NUMBA")
    import numba

    NUMBA_ENABLED = True
except ImportError:
    numba = None
    NUMBA_ENABLED = False

BACKEND = "numba" if NUMBA_ENABLED else "python"

JIT_OPTIONS = {"nogil": True, "cache": True}


def jit(fn):
    if NUMBA_ENABLED:
        return numba.njit(**JIT_OPTIONS)(fn)
    return fn


def int_buffer(size):
    """Zeroed integer state buffer in the layout the active backend prefers."""
    if NUMBA_ENABLED:
        return np.zeros(size, dtype=np.int64)
    # plain lists index several times faster than ndarrays from pure Python
    return [0] * size
