"""Kernel backend selection.

The compiled ``_core`` extension is used when importable; otherwise (or when
``DIGIPLANE_PURE`` is set to a non-empty value other than ``0``) the
pure-Python ``_pure`` module is used. Both expose ``label_grid`` and
``induced_paths`` with identical behaviour.
"""
from __future__ import annotations

import os
from types import ModuleType

from . import _pure


def _select() -> ModuleType:
    if os.environ.get("DIGIPLANE_PURE", "0") not in ("", "0"):
        return _pure
    try:
        from . import _core
    except ImportError:
        return _pure
    return _core


backend: ModuleType = _select()
BACKEND_NAME = "compiled" if backend is not _pure else "python"

MODE_KHALIMSKY = 0


def label_grid(mask, mode: int, parity: int = 0):
    return backend.label_grid(mask, mode, parity)


def induced_paths(indptr, indices, min_size: int, max_size: int, closed: bool):
    return backend.induced_paths(indptr, indices, min_size, max_size, closed)


def available_backends() -> dict[str, ModuleType]:
    """Every backend importable in this environment, keyed by name."""
    found = {"python": _pure}
    try:
        from . import _core
    except ImportError:
        return found
    found["compiled"] = _core
    return found
