"""Vertex statuses and the flat/tight/loose taxonomy of number triples.

A "triangle" is an ordered triple (a, b, c) of naturals.  Each vertex is
compared against the Nim sum of the other two: strictly greater is large,
equal is aligned, smaller is small.  If one vertex is aligned all three are,
and the triangle is flat.  A non-flat triangle always has exactly one or
three large vertices (loose or tight); which case holds is decided entirely
by the three binary digits at the discriminant, the highest bit position
where a's digit differs from the XOR of b's and c's digits.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .natural import require_natural

__all__ = [
    "CASE_TABLE",
    "TriangleClass",
    "TriangleClassification",
    "VertexStatus",
    "case_table_lookup",
    "classify_triangle",
    "classify_vertex",
    "discriminant_index",
    "reorder_dominant",
]


class VertexStatus(enum.Enum):
    LARGE = "large"
    ALIGNED = "aligned"
    SMALL = "small"


class TriangleClass(enum.Enum):
    FLAT = "flat"
    TIGHT = "tight"
    LOOSE = "loose"


Statuses = tuple[VertexStatus, VertexStatus, VertexStatus]


@dataclass(frozen=True)
class TriangleClassification:
    """Per-vertex statuses plus the derived class of the whole triangle.

    ``discriminant`` is None exactly for flat triangles; otherwise it is the
    bit position whose digits force the statuses.
    """

    statuses: Statuses
    kind: TriangleClass
    discriminant: int | None


def _status(x: int, others: int) -> VertexStatus:
    if x > others:
        return VertexStatus.LARGE
    if x == others:
        return VertexStatus.ALIGNED
    return VertexStatus.SMALL


def classify_vertex(x: int, y: int, z: int) -> VertexStatus:
    """Status of x measured against the Nim sum of y and z."""
    x = require_natural(x)
    return _status(x, require_natural(y) ^ require_natural(z))


def discriminant_index(a: int, b: int, c: int) -> int | None:
    """Highest bit position where a's digit differs from b's XOR c's.

    None exactly when the triangle is flat.  Digit i of a differs from the
    XOR of the others' digits iff bit i of a XOR b XOR c is set, so this is
    simply the most significant set bit of that total.
    """
    total = require_natural(a) ^ require_natural(b) ^ require_natural(c)
    if total == 0:
        return None
    return total.bit_length() - 1


def classify_triangle(a: int, b: int, c: int) -> TriangleClassification:
    """Classify the triangle (a, b, c) by its large-vertex count.

    Flat iff all vertices are aligned (equivalently a XOR b XOR c == 0).
    Otherwise the large-vertex count is 3 (tight) or 1 (loose); no other
    count can occur.
    """
    a = require_natural(a)
    b = require_natural(b)
    c = require_natural(c)
    total = a ^ b ^ c
    statuses = (_status(a, total ^ a), _status(b, total ^ b), _status(c, total ^ c))
    if total == 0:
        return TriangleClassification(statuses, TriangleClass.FLAT, None)
    j = total.bit_length() - 1
    large = statuses.count(VertexStatus.LARGE)
    if large == 3:
        kind = TriangleClass.TIGHT
    elif large == 1:
        kind = TriangleClass.LOOSE
    else:  # unreachable: a non-flat triangle has 1 or 3 large vertices
        raise AssertionError(f"large-vertex count {large} for ({a}, {b}, {c})")
    return TriangleClassification(statuses, kind, j)


_L = VertexStatus.LARGE
_S = VertexStatus.SMALL

# Outcome per digit triple (a_j, b_j, c_j) at the discriminant.  None marks
# the contradiction rows: digit triples whose XOR balances cannot occur there.
CASE_TABLE: dict[tuple[int, int, int], Statuses | None] = {
    (1, 1, 1): (_L, _L, _L),
    (1, 1, 0): None,
    (1, 0, 1): None,
    (1, 0, 0): (_L, _S, _S),
    (0, 1, 1): None,
    (0, 1, 0): (_S, _L, _S),
    (0, 0, 1): (_S, _S, _L),
    (0, 0, 0): None,
}


def case_table_lookup(bit_a: int, bit_b: int, bit_c: int) -> Statuses | None:
    """Statuses forced by the three digits at the discriminant position.

    Returns None for the contradiction rows, i.e. whenever
    ``bit_a == bit_b XOR bit_c``.
    """
    key = (bit_a, bit_b, bit_c)
    if any(d not in (0, 1) for d in key):
        raise ValueError(f"binary digits required, got {key}")
    return CASE_TABLE[key]


def reorder_dominant(
    a1: int, a2: int, a3: int
) -> tuple[tuple[int, int, int], tuple[int, int, int]]:
    """Permute the triple so the first entry is >= the Nim sum of the other two.

    Such a position always exists: a flat triangle meets the bound with
    equality everywhere, and a non-flat one contains a large vertex.  The
    leftmost qualifying position wins and the other two keep their relative
    order.  Returns the permuted triple and the permutation as original
    indices, so ``result[k] == input[perm[k]]``.
    """
    triple = (require_natural(a1), require_natural(a2), require_natural(a3))
    for i in range(3):
        rest = tuple(j for j in range(3) if j != i)
        if triple[i] >= triple[rest[0]] ^ triple[rest[1]]:
            perm = (i, *rest)
            return tuple(triple[p] for p in perm), perm
    raise AssertionError(f"no dominant position in {triple}")
