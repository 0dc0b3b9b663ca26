"""Kernel backend selection.

The compiled extension is preferred when importable; RSDICT_PURE=1 forces the
pure-Python kernels.  Structures bind a backend at construction time, so both
can coexist in one process (the benchmark harness uses this to compare them).
"""
from __future__ import annotations

import os

from rsdict import _kernels_py

try:
    from rsdict import _kernels_cy  # type: ignore[attr-defined]
except ImportError:
    _kernels_cy = None

if os.environ.get("RSDICT_PURE"):
    _default = _kernels_py
else:
    _default = _kernels_cy if _kernels_cy is not None else _kernels_py

BACKEND = _default.BACKEND_NAME


def available_backends():
    names = ["pure"]
    if _kernels_cy is not None:
        names.insert(0, "compiled")
    return names


def get_kernels(name=None):
    """Resolve a backend module by name; None means the process default."""
    if name is None or name == "auto":
        return _default
    if name == "pure":
        return _kernels_py
    if name == "compiled":
        if _kernels_cy is None:
            raise ValueError("compiled kernel backend is not available")
        return _kernels_cy
    raise ValueError(f"unknown backend {name!r}")
