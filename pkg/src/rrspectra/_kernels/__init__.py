"""Numerov kernel backend selection.

The compiled Cython kernel is preferred; the pure-Python implementation is a
drop-in fallback.  Set ``RRSPECTRA_PURE_PYTHON=1`` to force the fallback (used
by the benchmark and the backend-equivalence tests).
"""

import os

from . import numerov_py

if os.environ.get("RRSPECTRA_PURE_PYTHON"):
    _impl = numerov_py
    BACKEND = "python"
else:
    try:
        from . import numerov_cy as _impl

        BACKEND = "compiled"
    except ImportError:
        _impl = numerov_py
        BACKEND = "python"

sweep = _impl.sweep
