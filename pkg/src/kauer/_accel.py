"""Kernel backend selection.

The compiled extension is used when it was built; set ``KAUER_PURE_PYTHON=1``
to force the pure-Python kernels.
"""

import os

from . import _kernels_py

if os.environ.get("KAUER_PURE_PYTHON"):
    kernels = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as kernels  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        kernels = _kernels_py
        BACKEND = "python"

compose = kernels.compose
inverse = kernels.inverse
orbit_labels = kernels.orbit_labels
min_code = kernels.min_code

__all__ = ["BACKEND", "compose", "inverse", "orbit_labels", "min_code"]
