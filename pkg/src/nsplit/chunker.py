"""Cut a byte string into R near-equal contiguous elements and glue it back."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping


@dataclass(frozen=True)
class ElementPartition:
    """Boundaries of the R contiguous elements of an original_length-byte input.

    Element e (1-based) spans bytes [boundaries[e-1], boundaries[e]).
    Leftover bytes go to the lowest-numbered elements, so the layout is a
    pure function of (original_length, big_r) and nothing about element
    sizes ever needs to be stored.
    """

    original_length: int
    big_r: int
    boundaries: tuple[int, ...]

    def check_id(self, e: int) -> None:
        if not 1 <= e <= self.big_r:
            raise ValueError(f"element id {e} out of range 1..{self.big_r}")

    def size(self, e: int) -> int:
        """Byte count of element e."""
        self.check_id(e)
        return self.boundaries[e] - self.boundaries[e - 1]


def partition(original_length: int, big_r: int) -> ElementPartition:
    """Element boundaries for a byte string of the given length.

    The first original_length mod R elements carry one extra byte;
    elements may be empty when the input is shorter than R.
    """
    if big_r < 1:
        raise ValueError(f"element count must be >= 1, got {big_r}")
    if original_length < 0:
        raise ValueError(f"length must be >= 0, got {original_length}")
    base, extra = divmod(original_length, big_r)
    bounds = [0]
    for e in range(big_r):
        bounds.append(bounds[-1] + base + (1 if e < extra else 0))
    return ElementPartition(original_length, big_r, tuple(bounds))


def element_bytes(data: bytes, part: ElementPartition, e: int) -> bytes:
    """The e-th contiguous slice of ``data``."""
    if len(data) != part.original_length:
        raise ValueError(
            f"data is {len(data)} bytes, partition expects {part.original_length}"
        )
    part.check_id(e)
    return data[part.boundaries[e - 1] : part.boundaries[e]]


def reassemble(elements: Mapping[int, bytes], part: ElementPartition) -> bytes:
    """Concatenate elements 1..R back into the original byte string."""
    pieces = []
    for e in range(1, part.big_r + 1):
        if e not in elements:
            raise ValueError(f"missing element {e}")
        piece = elements[e]
        if len(piece) != part.size(e):
            raise ValueError(
                f"element {e} is {len(piece)} bytes, expected {part.size(e)}"
            )
        pieces.append(piece)
    return b"".join(pieces)
