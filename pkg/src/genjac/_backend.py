"""Kernel backend selection.

The compiled ``_ckernel`` extension is used when it imports; otherwise the
pure-Python ``_pykernel``.  Setting ``GENJAC_PURE_PYTHON=1`` forces the
fallback.
"""

import os

if os.environ.get("GENJAC_PURE_PYTHON", "") not in ("", "0"):
    from genjac import _pykernel as kernel
else:
    try:
        from genjac import _ckernel as kernel
    except ImportError:  # extension not built
        from genjac import _pykernel as kernel

BACKEND = kernel.NAME

__all__ = ["kernel", "BACKEND"]
