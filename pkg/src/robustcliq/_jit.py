"""Optional numba acceleration.

Set ``ROBUSTCLIQ_DISABLE_NUMBA=1`` before import to force the pure-numpy
kernels even when numba is installed.
"""
import os

_disabled = os.environ.get("ROBUSTCLIQ_DISABLE_NUMBA", "").strip().lower() in {
    "1",
    "true",
    "yes",
}

try:
    if _disabled:
        raise ImportError
    from numba import njit as _njit

    HAVE_NUMBA = True
except ImportError:
    _njit = None
    HAVE_NUMBA = False


def njit(*args, **kwargs):
    """``numba.njit`` when available, otherwise ``None``.

    Callers keep their own numpy fallback; a ``None`` kernel signals that it
    must be used.
    """
    if not HAVE_NUMBA:
        def wrapper(func):
            return None

        if args and callable(args[0]):
            return None
        return wrapper
    return _njit(*args, **kwargs)
