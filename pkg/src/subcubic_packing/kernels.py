"""Kernel selection: compiled extension when importable, else pure Python.

Set ``SUBCUBIC_PACKING_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernels
from ._pykernels import BUDGET, EXHAUSTED, FOUND

BACKEND = "python"
packing_search = _pykernels.packing_search

if not os.environ.get("SUBCUBIC_PACKING_PURE_PYTHON"):
    try:
        from . import _ckernels
    except ImportError:  # extension not built
        pass
    else:
        packing_search = _ckernels.packing_search
        BACKEND = "cython"

__all__ = ["BACKEND", "BUDGET", "EXHAUSTED", "FOUND", "packing_search"]
