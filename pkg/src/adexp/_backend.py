"""Kernel backend selection: compiled extension when available, else pure.

Set ADEXP_PURE=1 in the environment (before import) or call set_backend()
to force the pure-Python kernels, e.g. for backend-parity benchmarks.
"""

from __future__ import annotations

import os

from . import _pure

try:
    from . import _speed  # type: ignore[attr-defined]
except ImportError:
    _speed = None

_BACKENDS = {"pure": _pure}
if _speed is not None:
    _BACKENDS["compiled"] = _speed

if os.environ.get("ADEXP_PURE"):
    _active = _pure
else:
    _active = _speed if _speed is not None else _pure


def kernels():
    return _active


def backend_name() -> str:
    return _active.BACKEND


def available_backends() -> tuple[str, ...]:
    return tuple(sorted(_BACKENDS))


def set_backend(name: str) -> None:
    global _active
    try:
        _active = _BACKENDS[name]
    except KeyError:
        raise ValueError(f"unknown backend {name!r}; available: {available_backends()}")
