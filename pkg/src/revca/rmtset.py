"""Fixed-width bitset over rule min term indices.

Every set the tree machinery manipulates is a subset of [0, d**3), so an
int bitmask gives O(1) union/intersection/popcount. ``RmtSet`` is the
immutable public wrapper; the hot loops in :mod:`revca.tree` and
:mod:`revca.decider` work on the raw masks directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


def mask_of(indices: Iterable[int], width: int) -> int:
    """Build a bitmask from RMT indices, validating the range."""
    mask = 0
    for i in indices:
        if not 0 <= i < width:
            raise ValueError(f"RMT index {i} out of range [0, {width})")
        mask |= 1 << i
    return mask


def iter_bits(mask: int) -> Iterator[int]:
    """Yield set bit positions in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class RmtSet:
    """Immutable set of RMT indices drawn from [0, width)."""

    mask: int
    width: int

    def __post_init__(self):
        if self.width <= 0:
            raise ValueError("width must be positive")
        if self.mask < 0 or self.mask >> self.width:
            raise ValueError("mask has bits outside [0, width)")

    @classmethod
    def of(cls, indices: Iterable[int], width: int) -> "RmtSet":
        return cls(mask_of(indices, width), width)

    @classmethod
    def empty(cls, width: int) -> "RmtSet":
        return cls(0, width)

    @classmethod
    def full(cls, width: int) -> "RmtSet":
        return cls((1 << width) - 1, width)

    def __contains__(self, r: int) -> bool:
        return 0 <= r < self.width and bool(self.mask >> r & 1)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def _check_width(self, other: "RmtSet") -> None:
        if self.width != other.width:
            raise ValueError("mismatched RmtSet widths")

    def __or__(self, other: "RmtSet") -> "RmtSet":
        self._check_width(other)
        return RmtSet(self.mask | other.mask, self.width)

    def __and__(self, other: "RmtSet") -> "RmtSet":
        self._check_width(other)
        return RmtSet(self.mask & other.mask, self.width)

    def __sub__(self, other: "RmtSet") -> "RmtSet":
        self._check_width(other)
        return RmtSet(self.mask & ~other.mask, self.width)

    union = __or__
    intersection = __and__

    def indices(self) -> tuple[int, ...]:
        return tuple(iter_bits(self.mask))

    def __repr__(self) -> str:
        return f"RmtSet({{{', '.join(map(str, self))}}}, width={self.width})"
