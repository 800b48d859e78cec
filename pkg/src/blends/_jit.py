"""Numba switch for the hot kernels.

Set ``BLENDS_PURE_NUMPY=1`` to force the vectorized numpy kernels even when
numba is importable. ``BLEND_THREADS`` caps the numba thread pool (0 = auto).
"""

import functools
import os
import warnings

_FLAG = os.environ.get("BLENDS_PURE_NUMPY", "").strip().lower()
PURE_NUMPY_REQUESTED = _FLAG not in ("", "0", "false", "no")

# numba probes TBB on first parallel launch and complains about old versions
warnings.filterwarnings("ignore", message="The TBB threading layer")

try:
    import numba as nb
    from numba import prange
    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    nb = None
    prange = range
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and not PURE_NUMPY_REQUESTED


def _identity(*args, **kwargs):
    if len(args) == 1 and callable(args[0]) and not kwargs:
        return args[0]
    return lambda f: f


if HAVE_NUMBA:
    njit = functools.partial(nb.njit, cache=True, nogil=True)
else:  # pragma: no cover
    njit = _identity


def thread_cap():
    """Return the thread count requested through ``BLEND_THREADS`` (0 = auto)."""
    raw = os.environ.get("BLEND_THREADS", "0").strip() or "0"
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"BLEND_THREADS must be an integer, got {raw!r}")
    if value < 0:
        raise ValueError("BLEND_THREADS must be >= 0")
    return value


def apply_thread_cap():
    if not HAVE_NUMBA:
        return
    cap = thread_cap()
    if cap > 0:
        nb.set_num_threads(min(cap, nb.config.NUMBA_NUM_THREADS))
