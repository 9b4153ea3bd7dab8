"""Winning-move advice for Nim positions.

A position is a sequence of pile sizes.  The side to move wins exactly when
the Nim sum over all piles is nonzero; a winning move lowers some pile to
the Nim sum of the others.  For three piles such a pile is precisely a large
vertex of the triangle, so the number of distinct winning pile reductions is
always 0, 1, or 3.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

from .natural import require_natural

__all__ = ["Move", "advise_move", "winning_moves"]


class Move(NamedTuple):
    """Lower pile ``pile`` to ``new_size``."""

    pile: int
    new_size: int


def advise_move(piles: Sequence[int]) -> Move | None:
    """First winning reduction, leftmost pile wins ties; None if the position is lost."""
    sizes = [require_natural(p) for p in piles]
    if not sizes:
        raise ValueError("position needs at least one pile")
    total = 0
    for size in sizes:
        total ^= size
    if total == 0:
        return None
    for i, size in enumerate(sizes):
        target = total ^ size  # Nim sum of the other piles
        if target < size:
            return Move(i, target)
    raise AssertionError(f"nonzero total but no reducible pile in {sizes}")


def winning_moves(piles: Sequence[int]) -> list[Move]:
    """Every winning reduction of a three-pile position, leftmost first.

    The result has length 0, 1, or 3: empty exactly when the triangle is
    flat, otherwise one entry per large vertex.
    """
    sizes = [require_natural(p) for p in piles]
    if len(sizes) != 3:
        raise ValueError(f"exactly 3 piles required, got {len(sizes)}")
    total = sizes[0] ^ sizes[1] ^ sizes[2]
    moves = []
    for i, size in enumerate(sizes):
        others = total ^ size
        if size > others:
            moves.append(Move(i, others))
    return moves
