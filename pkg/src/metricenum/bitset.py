"""Small helpers for vertex sets stored as Python int bitsets.

Bit i set means element i is present. Python ints give arbitrary width,
O(1)-ish boolean algebra, and cheap hashing, which is all the engines need.
"""

from __future__ import annotations

from typing import Iterable, Iterator

__all__ = ["bit", "from_iter", "iter_bits", "to_frozenset", "popcount", "lowest_bit"]


def bit(i: int) -> int:
    return 1 << i


def from_iter(items: Iterable[int]) -> int:
    mask = 0
    for i in items:
        mask |= 1 << i
    return mask


def iter_bits(mask: int) -> Iterator[int]:
    """Yield set bit positions in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_frozenset(mask: int) -> frozenset[int]:
    return frozenset(iter_bits(mask))


def popcount(mask: int) -> int:
    return mask.bit_count()


def lowest_bit(mask: int) -> int:
    """Position of the lowest set bit; mask must be nonzero."""
    return (mask & -mask).bit_length() - 1
