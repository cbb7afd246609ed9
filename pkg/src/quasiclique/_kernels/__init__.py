"""Kernel backend selection.

The compiled extension (``_native``) is preferred when importable; the
pure-Python module (``_pure``) is a drop-in replacement with identical
outputs.  Set QC_BACKEND=python or QC_BACKEND=native to force one.
"""

import os

_choice = os.environ.get("QC_BACKEND", "auto").strip().lower()

if _choice in ("auto", "", "native", "c"):
    try:
        from . import _native as _impl

        BACKEND = "native"
    except ImportError:
        if _choice in ("native", "c"):
            raise
        from . import _pure as _impl

        BACKEND = "python"
elif _choice in ("python", "pure"):
    from . import _pure as _impl

    BACKEND = "python"
else:
    raise ValueError(f"unknown QC_BACKEND value: {_choice!r}")

peel = _impl.peel
cascade = _impl.cascade
greedy_plex = _impl.greedy_plex
plex_branch_bound = _impl.plex_branch_bound

__all__ = ["BACKEND", "peel", "cascade", "greedy_plex", "plex_branch_bound"]
