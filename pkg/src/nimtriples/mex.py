"""The exclusion-set view of Nim addition and the greedy minimal table.

Lowering one operand of a XOR b in every possible way yields the exclusion
set {x XOR b : x < a} united with {a XOR y : y < b}.  The Nim sum itself
never lands in that set (XOR cancels), and every smaller natural does, so
a XOR b is exactly the set's minimum excludant.  The same idea drives the
greedy table: filling an n-by-n grid row-major with the smallest value that
keeps all rows and columns repetition-free reproduces the XOR table entry
for entry.  Repetition-free rows and columns are unique solvability of
equations, which is why XOR is the smallest such binary operation.
"""

from __future__ import annotations

import operator

from .limits import MEX_ENUMERATION_CAP, CapExceeded
from .natural import require_natural

__all__ = [
    "exclusion_set",
    "greedy_minimal_table",
    "mex_oracle",
    "table_to_text",
    "verify_table_equals_xor",
]


def exclusion_set(a: int, b: int, *, cap: int = MEX_ENUMERATION_CAP) -> set[int]:
    """Every value reachable from (a, b) by lowering one operand of XOR.

    Holds up to a + b elements, hence the cap; CapExceeded signals the
    caller to use the direct XOR instead of enumerating.
    """
    a = require_natural(a)
    b = require_natural(b)
    if a + b > cap:
        raise CapExceeded(f"exclusion set for ({a}, {b}) needs {a + b} entries, cap is {cap}")
    return {x ^ b for x in range(a)} | {a ^ y for y in range(b)}


def mex_oracle(a: int, b: int, *, cap: int = MEX_ENUMERATION_CAP) -> int:
    """Smallest natural outside exclusion_set(a, b).

    Agrees with a XOR b everywhere.  This is the validation route, not the
    computation route: it costs Theta(a + b) while XOR costs O(bits).
    """
    excluded = exclusion_set(a, b, cap=cap)
    present = bytearray(len(excluded) + 1)  # mex(S) <= |S|, so this is tight
    for value in excluded:
        if value < len(present):
            present[value] = 1
    return present.index(0)


def greedy_minimal_table(n: int) -> list[list[int]]:
    """Fill an n-by-n table row-major, always taking the smallest legal value.

    A value is legal when it does not already appear in the current row or
    the current column, so the filled prefix is repetition-free in every row
    and column at all times.  Greedy choice per cell: the lowest clear bit
    of the union of the row and column occupancy masks.
    """
    n = operator.index(n)
    if n < 1:
        raise ValueError(f"table size must be >= 1, got {n}")
    col_used = [0] * n
    rows: list[list[int]] = []
    for _ in range(n):
        row_used = 0
        row: list[int] = []
        for b in range(n):
            used = row_used | col_used[b]
            value = (~used & (used + 1)).bit_length() - 1
            row.append(value)
            taken = 1 << value
            row_used |= taken
            col_used[b] |= taken
        rows.append(row)
    return rows


def verify_table_equals_xor(rows: list[list[int]]) -> tuple[bool, tuple[int, int] | None]:
    """Check entry (a, b) == a XOR b everywhere; report the first mismatch row-major."""
    for a, row in enumerate(rows):
        for b, value in enumerate(row):
            if value != a ^ b:
                return False, (a, b)
    return True, None


def table_to_text(rows: list[list[int]]) -> str:
    """One line per row, space-separated decimal entries, no trailing newline."""
    return "\n".join(" ".join(str(value) for value in row) for row in rows)
