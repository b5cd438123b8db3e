"""Kernel dispatch: compiled extension when available, pure Python otherwise.

Set HYPERCOVER_PURE=1 to force the pure kernel (useful for benchmarking
and for reproducing behaviour without a compiler).
"""

from __future__ import annotations

import os

from . import _kernel_py

if os.environ.get("HYPERCOVER_PURE"):
    _compiled = None
else:
    try:
        from . import _kernel_c as _compiled  # type: ignore[attr-defined]
    except ImportError:
        _compiled = None

HAVE_COMPILED = _compiled is not None
MAX_SWEEP_UNIVERSE = _kernel_py.MAX_SWEEP_UNIVERSE


def backend_name() -> str:
    return _compiled.BACKEND if _compiled is not None else _kernel_py.BACKEND


def minimality_agreement_sweep(universe_size: int):
    impl = _compiled if _compiled is not None else _kernel_py
    return impl.minimality_agreement_sweep(universe_size)


def minimal_cover_masks(edge_masks: list[int], n_vertex_bits: int) -> list[int]:
    if (
        _compiled is not None
        and len(edge_masks) <= _compiled.MAX_MASK_EDGES
        and n_vertex_bits <= _compiled.MAX_MASK_VERTICES
    ):
        return _compiled.minimal_cover_masks(edge_masks)
    return _kernel_py.minimal_cover_masks(edge_masks)
