"""Kernel backend selection.

The compiled extension is preferred; the pure-Python twin is used when the
extension is missing or when ``PATHCONTRACT_PURE`` is set in the environment.
Both expose the same ``BitKernel`` API (see ``_pykernel``).
"""

import os

from ._pykernel import CAPACITY, BitKernel as PureBitKernel

if os.environ.get("PATHCONTRACT_PURE"):
    BitKernel = PureBitKernel
    BACKEND = "python"
else:
    try:
        from ._ckernel import BitKernel  # type: ignore[no-redef]

        BACKEND = "c"
    except ImportError:
        BitKernel = PureBitKernel
        BACKEND = "python"

__all__ = ["BitKernel", "PureBitKernel", "BACKEND", "CAPACITY"]
