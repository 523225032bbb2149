"""Optional numba acceleration.

Set ``MEDTRI_DISABLE_NUMBA=1`` to force the pure-numpy kernels even when numba
is importable. The flag is read once, at import time.
"""

import os

_disabled = os.environ.get("MEDTRI_DISABLE_NUMBA", "").strip().lower() in ("1", "true", "yes", "on")

try:
    from numba import njit

    numba_available = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba_available = False

    def njit(*args, **kwargs):
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]
        return lambda f: f

use_numba = numba_available and not _disabled
