"""Deterministic grayscale bitmaps of triangle classes over a coordinate grid.

Pixel (row=a, col=b) shows the class of the triangle (a, b, fixed_c).  The
gray mapping is injective over the three classes and the output is binary
PGM, so renders are byte-identical across runs and platforms.
"""

from __future__ import annotations

import numpy as np

from .limits import CapExceeded, render_max_k
from .natural import require_natural
from .triangles import TriangleClass

__all__ = ["GRAY_LEVELS", "classification_grid", "render_pgm"]

GRAY_LEVELS = {
    TriangleClass.FLAT: 255,
    TriangleClass.TIGHT: 170,
    TriangleClass.LOOSE: 85,
}

# Past this, fixed_c dominates every grid coordinate (all entries < 2**12)
# and also stays clear of int64 overflow in the vectorized path.
_WIDE_C = 1 << 62


def classification_grid(k: int, fixed_c: int, *, max_k: int | None = None) -> np.ndarray:
    """Gray value per pixel for all triangles (a, b, fixed_c) with a, b < 2**k."""
    limit = render_max_k() if max_k is None else max_k
    if k < 0:
        raise ValueError(f"bit width must be >= 0, got {k}")
    if k > limit:
        raise CapExceeded(f"render k={k} exceeds cap {limit}")
    fixed_c = require_natural(fixed_c)
    n = 1 << k
    if fixed_c >= _WIDE_C:
        # c exceeds a XOR b everywhere and b XOR c exceeds any a: all loose
        return np.full((n, n), GRAY_LEVELS[TriangleClass.LOOSE], dtype=np.uint8)
    lane = np.arange(n, dtype=np.int64)
    a_axis = lane[:, np.newaxis]
    b_axis = lane[np.newaxis, :]
    large = (
        (a_axis > (b_axis ^ fixed_c)).astype(np.int8)
        + (b_axis > (a_axis ^ fixed_c))
        + (fixed_c > (a_axis ^ b_axis))
    )
    flat = (a_axis ^ b_axis) == fixed_c
    gray = np.where(
        flat,
        GRAY_LEVELS[TriangleClass.FLAT],
        np.where(large == 3, GRAY_LEVELS[TriangleClass.TIGHT], GRAY_LEVELS[TriangleClass.LOOSE]),
    )
    return gray.astype(np.uint8)


def render_pgm(k: int, fixed_c: int, *, max_k: int | None = None) -> bytes:
    """Binary PGM (magic P5, maxval 255) of the classification grid."""
    grid = classification_grid(k, fixed_c, max_k=max_k)
    n = grid.shape[0]
    header = f"P5\n{n} {n}\n255\n".encode("ascii")
    return header + grid.tobytes()
