"""Kernel dispatch: compiled extension when importable, else pure Python.

Set ``MDPART_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

if os.environ.get("MDPART_PURE_PYTHON", "") not in ("", "0"):
    from ._pykernels import IMPLEMENTATION, find_feasible_split, find_nice_subset, peel
else:
    try:
        from ._ckernels import IMPLEMENTATION, find_feasible_split, find_nice_subset, peel
    except ImportError:  # extension not built
        from ._pykernels import IMPLEMENTATION, find_feasible_split, find_nice_subset, peel

__all__ = ["IMPLEMENTATION", "find_feasible_split", "find_nice_subset", "peel"]
