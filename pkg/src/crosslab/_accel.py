"""Optional numba acceleration.

Hot kernels are decorated with :func:`optional_njit`. When numba is
installed and the ``CROSSLAB_DISABLE_NUMBA`` environment variable is unset
(or "0"), the kernel is JIT compiled; otherwise the plain Python function
runs. Both paths execute the same source, so results are identical and the
fallback needs no separate maintenance.

The flag is read once at import time. Tests that need both paths in one
process use the ``py_func`` attribute exposed on compiled dispatchers (see
bench.py) rather than toggling the environment.
"""

from __future__ import annotations

import os

try:
    from numba import njit as _njit
    NUMBA_INSTALLED = True
except ImportError:  # pragma: no cover - the sandbox ships numba
    NUMBA_INSTALLED = False

NUMBA_DISABLED = os.environ.get("CROSSLAB_DISABLE_NUMBA", "0") not in ("0", "")

USING_NUMBA = NUMBA_INSTALLED and not NUMBA_DISABLED


def optional_njit(*args, **kwargs):
    """Return ``numba.njit(*args, **kwargs)`` or an identity decorator."""

    def decorator(func):
        if USING_NUMBA:
            return _njit(*args, **kwargs)(func)
        return func

    if len(args) == 1 and callable(args[0]) and not kwargs:
        # bare @optional_njit without parentheses
        func, args = args[0], ()
        return decorator(func)
    return decorator


def kernel_python_function(kernel):
    """Return the pure-Python callable behind a (possibly compiled) kernel."""
    return getattr(kernel, "py_func", kernel)
