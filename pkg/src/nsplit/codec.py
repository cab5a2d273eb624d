"""Split a byte string into n module files and rebuild it from any m of them."""

from __future__ import annotations

import zlib
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .chunker import element_bytes, partition
from .container import FLAG_OPTIMIZED, ModuleHeader, PayloadLengthError, write_module
from .layout import row_elements
from .scheme import SchemeParams, derive_characteristics


class InconsistentHeadersError(Exception):
    """Module headers disagree on scheme, layout flavor, length or checksum."""


class MissingElementsError(Exception):
    """The given modules do not jointly contain every element of the file."""

    def __init__(self, missing: Iterable[int]):
        self.missing = frozenset(missing)
        ids = ", ".join(str(e) for e in sorted(self.missing))
        super().__init__(f"cannot reconstruct: missing elements {ids}")


class ChecksumMismatchError(Exception):
    """Reassembled bytes do not match the checksum stored at split time."""


@dataclass(frozen=True)
class ReconstructionPlan:
    """Where each element will be read from.

    assignments maps element id -> (module position, byte offset inside
    that module's payload); missing lists uncovered element ids. The plan
    is feasible iff missing is empty, which any m distinct positions
    guarantee.
    """

    params: SchemeParams
    optimized: bool
    original_length: int
    checksum: int
    assignments: Mapping[int, tuple[int, int]]
    missing: frozenset[int]

    @property
    def feasible(self) -> bool:
        return not self.missing


def split_file(data: bytes, params: SchemeParams, optimized: bool = False) -> list[bytes]:
    """Produce the n module files for ``data``.

    The module at position i carries the elements of layout row i,
    concatenated in row order; total payload across all modules is
    exactly (n-m+1) times the input size.
    """
    chars = derive_characteristics(params)
    part = partition(len(data), chars.big_r)
    crc = zlib.crc32(data)
    flags = FLAG_OPTIMIZED if optimized else 0
    modules = []
    for position in range(1, params.n + 1):
        row = row_elements(params, position, optimized)
        payload = b"".join(element_bytes(data, part, e) for e in row)
        header = ModuleHeader(
            n=params.n,
            m=params.m,
            position=position,
            original_length=len(data),
            checksum=crc,
            flags=flags,
        )
        modules.append(write_module(header, payload))
    return modules


def plan_reconstruction(headers: Sequence[ModuleHeader]) -> ReconstructionPlan:
    """Assign each element to the first available module containing it.

    All headers must describe the same split (equal n, m, flags, length
    and checksum) and carry distinct positions; anything else raises
    InconsistentHeadersError rather than producing a plan.
    """
    if not headers:
        raise InconsistentHeadersError("no module headers given")
    first = headers[0]
    for header in headers[1:]:
        same = (header.n, header.m, header.flags, header.original_length, header.checksum)
        if same != (first.n, first.m, first.flags, first.original_length, first.checksum):
            raise InconsistentHeadersError("module headers describe different splits")
    positions = sorted(header.position for header in headers)
    if len(set(positions)) != len(positions):
        raise InconsistentHeadersError(f"duplicate module positions in {positions}")

    params = first.params
    chars = derive_characteristics(params)
    part = partition(first.original_length, chars.big_r)
    rows = {pos: row_elements(params, pos, first.optimized) for pos in positions}

    assignments: dict[int, tuple[int, int]] = {}
    missing = []
    for eid in range(1, chars.big_r + 1):
        for pos in positions:
            row = rows[pos]
            if eid in row:
                offset = sum(part.size(other) for other in row[: row.index(eid)])
                assignments[eid] = (pos, offset)
                break
        else:
            missing.append(eid)
    return ReconstructionPlan(
        params=params,
        optimized=first.optimized,
        original_length=first.original_length,
        checksum=first.checksum,
        assignments=assignments,
        missing=frozenset(missing),
    )


def reconstruct(modules: Sequence[tuple[ModuleHeader, bytes]]) -> bytes:
    """Rebuild the original byte string from (header, payload) pairs.

    Raises MissingElementsError when the modules cannot cover every
    element (reporting exactly which ids are absent), PayloadLengthError
    on a payload whose size contradicts its header, and
    ChecksumMismatchError when the result fails the stored CRC-32.
    """
    plan = plan_reconstruction([header for header, _ in modules])
    if not plan.feasible:
        raise MissingElementsError(plan.missing)

    payloads = {}
    for header, payload in modules:
        expected = header.payload_length()
        if len(payload) != expected:
            raise PayloadLengthError(
                f"module {header.position}: payload is {len(payload)} bytes, "
                f"header implies {expected}"
            )
        payloads[header.position] = payload

    chars = derive_characteristics(plan.params)
    part = partition(plan.original_length, chars.big_r)
    pieces = []
    for eid in range(1, chars.big_r + 1):
        pos, offset = plan.assignments[eid]
        pieces.append(payloads[pos][offset : offset + part.size(eid)])
    data = b"".join(pieces)
    if zlib.crc32(data) != plan.checksum:
        raise ChecksumMismatchError("reconstructed data fails the stored CRC-32 check")
    return data
