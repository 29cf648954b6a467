"""Kernel backend selection.

Hot numeric kernels are JIT-compiled with numba by default. Set
``PROJLMO_BACKEND=numpy`` to force the pure numpy/Python fallback (useful
for debugging and for environments without numba). ``PROJLMO_BACKEND=numba``
turns a missing numba into an import error instead of a silent fallback.
"""

import os

_choice = os.environ.get("PROJLMO_BACKEND", "auto").strip().lower()
if _choice not in ("auto", "numba", "numpy"):
    raise RuntimeError(
        f"PROJLMO_BACKEND={_choice!r} not understood; use auto, numba or numpy"
    )

if _choice == "numpy":
    NUMBA_ENABLED = False
else:
    try:
        import numba  # noqa: F401

        NUMBA_ENABLED = True
    except ImportError:
        if _choice == "numba":
            raise
        NUMBA_ENABLED = False

BACKEND = "numba" if NUMBA_ENABLED else "numpy"


def jit_kernel(fn):
    """Wrap fn with @njit on the numba backend, return it unchanged otherwise."""
    if NUMBA_ENABLED:
        from numba import njit

        return njit(cache=True, nogil=True)(fn)
    return fn
