"""JIT dispatch for the hot numeric kernels.

The scalar kernels in ``gammaenc._kernels`` are written so the same source
runs either compiled by numba (default) or as plain Python.  Selection is
made once at import time:

* ``GAMMA_ENCLOSE_NUMBA=0`` (or ``false``/``off``/``no``) forces the pure
  fallback path;
* if numba is not importable the fallback is used automatically.

No fastmath flags are ever passed: the error-free transformations the
kernels rely on require strict IEEE-754 evaluation order.
"""

from __future__ import annotations

import os

_FALSEY = {"0", "false", "off", "no"}


def _env_wants_numba() -> bool:
    return os.environ.get("GAMMA_ENCLOSE_NUMBA", "1").strip().lower() not in _FALSEY


NUMBA_ENABLED = False
if _env_wants_numba():
    try:
        import numba  # noqa: F401
    except ImportError:
        pass
    else:
        NUMBA_ENABLED = True


if NUMBA_ENABLED:
    from numba import njit as _numba_njit

    def njit(func):
        """Compile a kernel in nopython mode, releasing the GIL."""
        return _numba_njit(cache=True, nogil=True)(func)

else:

    def njit(func):
        return func


def python_impl(func):
    """The uncompiled Python implementation behind a (possibly jitted) kernel."""
    return getattr(func, "py_func", func)
