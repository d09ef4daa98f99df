"""Kernel backend selection: compiled extension with pure-Python fallback.

Set DMPSAT_PURE=1 to force the pure-Python kernels regardless of whether
the compiled core is installed.
"""

from __future__ import annotations

import os

if os.environ.get("DMPSAT_PURE"):
    from . import _pycore as kernel
else:
    try:
        from . import _core as kernel  # type: ignore[no-redef]
    except ImportError:
        from . import _pycore as kernel  # type: ignore[no-redef]

BACKEND: str = kernel.BACKEND

mp_solve = kernel.mp_solve
is_max_word = kernel.is_max_word
min_canon_perm = kernel.min_canon_perm
