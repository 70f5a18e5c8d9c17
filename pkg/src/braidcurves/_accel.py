"""
Switch between numba-compiled kernels and the plain Python/numpy fallback.

Set ``BRAIDCURVES_NO_NUMBA=1`` in the environment before import to run every
kernel as ordinary Python. The compiled and interpreted paths execute the same
source, so results are identical; only speed differs.
"""
from __future__ import annotations

import os

_FLAG = os.environ.get("BRAIDCURVES_NO_NUMBA", "").strip().lower()

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

USE_NUMBA = numba is not None and _FLAG in ("", "0", "false", "no")


def kernel(fn):
    """Compile ``fn`` with ``numba.njit`` when acceleration is enabled."""
    if USE_NUMBA:
        return numba.njit(cache=True)(fn)
    return fn


def python_version(fn):
    """The uncompiled function behind a kernel (the kernel itself if not compiled)."""
    return getattr(fn, "py_func", fn)
