"""On-disk format of one module file: a fixed 24-byte header plus payload.

Header layout (all integers little-endian):

    offset  size  field
    0       4     magic, ASCII "NSP1"
    4       1     format version, currently 1
    5       1     flags: bit 0 = optimized module ordering, bits 1-7 reserved
    6       2     n, total module count
    8       2     m, recovery threshold
    10      2     position, 1-based index of this module in the layout
    12      8     original file length in bytes
    20      4     CRC-32 (IEEE) of the entire original file

The payload is the module's elements concatenated in row order. Element
ids and sizes are never stored: the layout is fully determined by
(n, m, flags, original_length), so all headers of one split are
byte-identical except for `position`.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass

from .chunker import partition
from .layout import row_elements
from .scheme import SchemeParams, derive_characteristics

MAGIC = b"NSP1"
VERSION = 1
FLAG_OPTIMIZED = 0x01

HEADER_FORMAT = "<4sBBHHHQI"
HEADER_SIZE = struct.calcsize(HEADER_FORMAT)  # 24


class ModuleFormatError(Exception):
    """Base class for malformed module files."""


class BadMagicError(ModuleFormatError):
    """The file does not start with the NSP1 magic."""


class UnsupportedVersionError(ModuleFormatError):
    """The file uses a format version this code does not understand."""


class HeaderFieldError(ModuleFormatError):
    """A header field is out of its valid range."""


class TruncatedPayloadError(ModuleFormatError):
    """The file is shorter than its header says it should be."""


class PayloadLengthError(ModuleFormatError):
    """The payload is longer than the header-implied element sizes allow."""


@dataclass(frozen=True)
class ModuleHeader:
    """Parsed header of one module file."""

    n: int
    m: int
    position: int
    original_length: int
    checksum: int
    flags: int = 0
    magic: bytes = MAGIC
    version: int = VERSION

    def __post_init__(self) -> None:
        if self.magic != MAGIC:
            raise BadMagicError(f"bad magic {self.magic!r}, expected {MAGIC!r}")
        if self.version != VERSION:
            raise UnsupportedVersionError(f"unsupported format version {self.version}")
        if self.flags & ~FLAG_OPTIMIZED:
            raise HeaderFieldError(f"reserved flag bits set: {self.flags:#04x}")
        if not 1 <= self.m <= self.n <= 0xFFFF:
            raise HeaderFieldError(
                f"require 1 <= m <= n <= 65535, got n={self.n}, m={self.m}"
            )
        if not 1 <= self.position <= self.n:
            raise HeaderFieldError(
                f"position {self.position} out of range 1..{self.n}"
            )
        if not 0 <= self.original_length <= 0xFFFF_FFFF_FFFF_FFFF:
            raise HeaderFieldError(f"length field overflow: {self.original_length}")
        if not 0 <= self.checksum <= 0xFFFF_FFFF:
            raise HeaderFieldError(f"checksum field overflow: {self.checksum:#x}")

    @property
    def params(self) -> SchemeParams:
        return SchemeParams(self.n, self.m)

    @property
    def optimized(self) -> bool:
        return bool(self.flags & FLAG_OPTIMIZED)

    def element_ids(self) -> tuple[int, ...]:
        """Element ids carried by this module, in payload order."""
        return row_elements(self.params, self.position, self.optimized)

    def payload_length(self) -> int:
        """Exact payload byte count implied by the header fields."""
        chars = derive_characteristics(self.params)
        part = partition(self.original_length, chars.big_r)
        return sum(part.size(e) for e in self.element_ids())

    def pack(self) -> bytes:
        return struct.pack(
            HEADER_FORMAT,
            self.magic,
            self.version,
            self.flags,
            self.n,
            self.m,
            self.position,
            self.original_length,
            self.checksum,
        )


def write_module(header: ModuleHeader, payload: bytes) -> bytes:
    """Serialize one module file; bit-reproducible for identical inputs."""
    expected = header.payload_length()
    if len(payload) != expected:
        raise PayloadLengthError(
            f"payload is {len(payload)} bytes, header implies {expected}"
        )
    return header.pack() + payload


def parse_module(blob: bytes) -> tuple[ModuleHeader, bytes]:
    """Validate and split one module file into (header, payload).

    Raises BadMagicError, UnsupportedVersionError, HeaderFieldError,
    TruncatedPayloadError or PayloadLengthError depending on what is
    wrong, so callers can report precisely.
    """
    if len(blob) < HEADER_SIZE:
        raise TruncatedPayloadError(
            f"file is {len(blob)} bytes, the header alone is {HEADER_SIZE}"
        )
    magic, version, flags, n, m, position, original_length, checksum = struct.unpack(
        HEADER_FORMAT, blob[:HEADER_SIZE]
    )
    if magic != MAGIC:
        raise BadMagicError(f"bad magic {magic!r}, expected {MAGIC!r}")
    if version != VERSION:
        raise UnsupportedVersionError(f"unsupported format version {version}")
    header = ModuleHeader(
        n=n,
        m=m,
        position=position,
        original_length=original_length,
        checksum=checksum,
        flags=flags,
    )
    payload = blob[HEADER_SIZE:]
    expected = header.payload_length()
    if len(payload) < expected:
        raise TruncatedPayloadError(
            f"payload is {len(payload)} bytes, header implies {expected}"
        )
    if len(payload) > expected:
        raise PayloadLengthError(
            f"{len(payload) - expected} trailing bytes after the payload"
        )
    return header, payload
