"""Numba switch.

Set ``RANKCRANK_NUMBA=0`` to force the pure-numpy kernels. When numba is not
importable the fallback is used regardless of the flag.
"""

import os

try:
    import numba
except ImportError:  # pragma: no cover - exercised only without numba
    numba = None

NUMBA_AVAILABLE = numba is not None
USE_NUMBA = NUMBA_AVAILABLE and os.environ.get("RANKCRANK_NUMBA", "1").strip().lower() not in (
    "0", "false", "no", "off")


def njit(fn):
    """Compile ``fn`` with numba when available; the Python original stays on ``py_func``."""
    if not NUMBA_AVAILABLE:
        fn.py_func = fn
        return fn
    return numba.njit(cache=True, nogil=True)(fn)
