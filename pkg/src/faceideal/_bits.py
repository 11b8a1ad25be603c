"""Bitset helpers. Faces and squarefree monomials are plain ``int`` masks."""

from __future__ import annotations

from typing import Iterable, Iterator

MAX_BITS = 63


def popcount(mask: int) -> int:
    return mask.bit_count()


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def full_mask(n: int) -> int:
    return (1 << n) - 1


def canonical_key(mask: int) -> tuple[int, tuple[int, ...]]:
    """Sort key: cardinality first, then lexicographic on the index tuple."""
    return (mask.bit_count(), tuple(bits(mask)))


def canonical_sorted(masks: Iterable[int]) -> list[int]:
    return sorted(set(masks), key=canonical_key)


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask`` (including ``mask`` and 0)."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0
