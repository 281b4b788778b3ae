"""Kernel backend selection.

The AEAD hot loops (ChaCha20 keystream, Poly1305 accumulation) exist twice:
as the compiled ``pqhb._core`` extension and as pure Python in
``pqhb._purecore``. The compiled module wins when importable; setting
``PQHB_PURE=1`` in the environment forces the pure kernels (useful for the
backend comparison benchmark and for debugging).

Both modules export the same three functions with identical semantics, and
the test suite asserts byte-for-byte parity between them.
"""

from __future__ import annotations

import os

from pqhb import _purecore

if os.environ.get("PQHB_PURE"):
    _impl = _purecore
else:
    try:
        from pqhb import _core as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _purecore

chacha20_block = _impl.chacha20_block
chacha20_xor = _impl.chacha20_xor
poly1305_tag = _impl.poly1305_tag


def kernel_backend() -> str:
    """Name of the active kernel implementation: 'compiled' or 'pure'."""
    return "pure" if _impl is _purecore else "compiled"


def kernels(name: str):
    """Return the kernel module for ``name`` ('compiled' or 'pure').

    Used by the backend comparison benchmark, which needs both at once.
    Raises ImportError when the compiled extension was not built.
    """
    if name == "pure":
        return _purecore
    if name == "compiled":
        from pqhb import _core

        return _core
    raise ValueError(f"unknown kernel backend {name!r}")
