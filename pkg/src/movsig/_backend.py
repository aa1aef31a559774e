"""Kernel backend selection.

The compiled extension is used when it imports; ``MOVSIG_BACKEND=python``
forces the pure-Python fallback.
"""

import os

from . import _kernels_py

try:
    from . import _kernels as _compiled
except ImportError:
    _compiled = None

BACKENDS = {"python": _kernels_py}
if _compiled is not None:
    BACKENDS["cython"] = _compiled


def _default():
    forced = os.environ.get("MOVSIG_BACKEND", "").strip().lower()
    if forced:
        if forced not in BACKENDS:
            raise ImportError(f"MOVSIG_BACKEND={forced!r} is not available; have {sorted(BACKENDS)}")
        return forced
    return "cython" if _compiled is not None else "python"


DEFAULT_BACKEND = _default()


def get_kernels(name=None):
    name = name or DEFAULT_BACKEND
    try:
        return BACKENDS[name]
    except KeyError:
        raise ValueError(f"unknown backend {name!r}; have {sorted(BACKENDS)}") from None
