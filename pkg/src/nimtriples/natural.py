"""Arbitrary-width natural numbers: parsing, bit access, and Nim addition.

Naturals are plain Python ints restricted to values >= 0.  Python's int is
already arbitrary precision with a unique (canonical) representation, so this
module only adds validation, radix handling, and the carry-free addition.
All functions are pure; values are immutable and safe to share.
"""

from __future__ import annotations

import operator

__all__ = ["bit", "compare", "nim_sum", "parse_natural", "require_natural"]


def require_natural(value) -> int:
    """Return ``value`` as a plain int, rejecting negatives and non-integers."""
    try:
        value = operator.index(value)
    except TypeError:
        raise ValueError(f"not an integer: {value!r}") from None
    if value < 0:
        raise ValueError(f"not a natural number: {value}")
    return value


def parse_natural(text: str) -> int:
    """Parse a natural number from a decimal, ``0x`` hex, or ``0b`` binary string.

    Signs are rejected outright: negative numbers are not representable, and
    a leading ``+`` is noise.  Raises ValueError on anything unparseable.
    """
    s = text.strip()
    if "-" in s or "+" in s:
        raise ValueError(f"not a natural number: {text!r}")
    lowered = s.lower()
    if lowered.startswith("0x"):
        base, digits = 16, s[2:]
    elif lowered.startswith("0b"):
        base, digits = 2, s[2:]
    else:
        base, digits = 10, s
    try:
        return int(digits, base)
    except ValueError:
        raise ValueError(f"not a natural number: {text!r}") from None


def nim_sum(a: int, b: int) -> int:
    """Carry-free binary addition: digit i of the result is a_i XOR b_i."""
    return require_natural(a) ^ require_natural(b)


def bit(a: int, i: int) -> int:
    """Digit i of a's binary expansion, least significant first.

    Defined for every i >= 0; positions beyond the top set bit are 0.
    """
    a = require_natural(a)
    i = operator.index(i)
    if i < 0:
        raise ValueError(f"bit index must be >= 0, got {i}")
    return (a >> i) & 1


def compare(a: int, b: int) -> int:
    """Three-way integer order: -1 if a < b, 0 if equal, +1 if a > b."""
    a = require_natural(a)
    b = require_natural(b)
    return (a > b) - (a < b)
