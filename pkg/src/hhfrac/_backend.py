"""Select the compiled kernels when importable, else the pure-Python fallback.

Set ``HHFRAC_PURE_PYTHON=1`` to force the fallback (used by the benchmark and
by the cross-backend tests).
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("HHFRAC_PURE_PYTHON", "") not in ("", "0"):
    kernels = _kernels_py
    COMPILED = False
else:
    try:
        from . import _kernels as kernels  # type: ignore[attr-defined]

        COMPILED = True
    except ImportError:  # extension not built
        kernels = _kernels_py
        COMPILED = False

BACKEND = "cython" if COMPILED else "python"
