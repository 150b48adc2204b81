"""
PGM (portable graymap) reading and writing.

Supports the plain ("P2") and raw ("P5") variants with maxval <= 255. Header
fields may be separated by any whitespace and interleaved with '#' comments
running to the end of the line. In P5 exactly one whitespace byte follows
maxval, then width*height sample bytes, top row first.

Coordinates are (column, row) with (0, 0) in the top-left corner.
"""

import logging
from dataclasses import dataclass
from typing import Tuple

from PIL import Image

from services.errors import InvalidInputError, PgmParseError, UnsupportedFormatError

logger = logging.getLogger(__name__)

WHITESPACE = b" \t\n\r\v\f"


@dataclass(frozen=True)
class GrayImage:
    """A width x height grid of brightness samples in [0, maxval], row-major."""

    width: int
    height: int
    maxval: int
    samples: Tuple[int, ...]

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise InvalidInputError(f"image size must be positive, got {self.width}x{self.height}")
        if not 1 <= self.maxval <= 255:
            raise InvalidInputError(f"maxval must be in [1, 255], got {self.maxval}")
        if len(self.samples) != self.width * self.height:
            raise InvalidInputError(f"expected {self.width * self.height} samples, got {len(self.samples)}")
        bad = next((v for v in self.samples if not 0 <= v <= self.maxval), None)
        if bad is not None:
            raise InvalidInputError(f"sample {bad} outside [0, {self.maxval}]")

    @classmethod
    def from_rows(cls, rows, maxval: int = 255) -> "GrayImage":
        rows = [list(r) for r in rows]
        return cls(len(rows[0]) if rows else 0, len(rows), maxval, tuple(v for r in rows for v in r))

    def brightness(self, col: int, row: int) -> int:
        return self.samples[row * self.width + col]

    def flipped(self) -> "GrayImage":
        """The image turned by a half-turn: (col, row) -> (W-1-col, H-1-row)."""
        return GrayImage(self.width, self.height, self.maxval, tuple(reversed(self.samples)))

    def to_pil(self) -> Image.Image:
        """8-bit grayscale Pillow image, rescaled to 0..255 when maxval < 255."""
        if self.maxval == 255:
            data = bytes(self.samples)
        else:
            data = bytes(v * 255 // self.maxval for v in self.samples)
        return Image.frombytes("L", (self.width, self.height), data)


def _skip_space(data: bytes, pos: int) -> int:
    while pos < len(data):
        if data[pos] in WHITESPACE:
            pos += 1
        elif data[pos] == ord("#"):
            while pos < len(data) and data[pos] not in b"\r\n":
                pos += 1
        else:
            break
    return pos


def _read_int(data: bytes, pos: int, what: str) -> Tuple[int, int]:
    """Parse one decimal header/sample token starting at or after pos; returns (value, end)."""
    start = _skip_space(data, pos)
    end = start
    while end < len(data) and data[end] not in WHITESPACE and data[end] != ord("#"):
        end += 1
    if start == end:
        raise PgmParseError(f"truncated data: missing {what}", start)
    token = data[start:end]
    if not token.isdigit():
        raise PgmParseError(f"non-numeric {what} {token[:16]!r}", start)
    return int(token), end


def read_pgm(data: bytes) -> GrayImage:
    """
    Parse a P2 or P5 graymap.

    Raises:
        UnsupportedFormatError: another netpbm magic (P1, P3, P4, P6, P7)
        PgmParseError: bad magic, bad header value, truncated or out-of-range data
    """
    magic = data[:2]
    if len(magic) < 2:
        raise PgmParseError("truncated data: missing magic number", 0)
    if magic in (b"P1", b"P3", b"P4", b"P6", b"P7"):
        raise UnsupportedFormatError(f"unsupported netpbm format {magic.decode()}; only P2 and P5 graymaps", 0)
    if magic not in (b"P2", b"P5"):
        raise PgmParseError(f"bad magic number {magic!r}", 0)

    width, pos = _read_int(data, 2, "width")
    height, pos = _read_int(data, pos, "height")
    header_end = pos
    maxval, pos = _read_int(data, pos, "maxval")
    if width < 1 or height < 1:
        raise PgmParseError(f"image size must be positive, got {width}x{height}", header_end)
    if not 1 <= maxval <= 255:
        raise PgmParseError(f"maxval {maxval} outside [1, 255]", pos)

    count = width * height
    if magic == b"P5":
        if pos >= len(data) or data[pos] not in WHITESPACE:
            raise PgmParseError("expected one whitespace byte after maxval", pos)
        start = pos + 1
        raw = data[start:start + count]
        if len(raw) < count:
            raise PgmParseError(f"truncated data: {len(raw)} of {count} samples", len(data))
        samples = tuple(raw)
        offsets = range(start, start + count)
    else:
        values, offsets = [], []
        for i in range(count):
            begin = _skip_space(data, pos)
            value, pos = _read_int(data, pos, f"sample {i}")
            values.append(value)
            offsets.append(begin)
        samples = tuple(values)

    for value, offset in zip(samples, offsets):
        if value > maxval:
            raise PgmParseError(f"sample {value} exceeds maxval {maxval}", offset)

    logger.debug("parsed %s %dx%d maxval %d", magic.decode(), width, height, maxval)
    return GrayImage(width, height, maxval, samples)


def write_pgm(image: GrayImage, plain: bool = True) -> bytes:
    """Serialize as P2 (plain=True, one text line per row) or P5."""
    if plain:
        rows = [
            " ".join(str(image.brightness(c, r)) for c in range(image.width))
            for r in range(image.height)
        ]
        return f"P2\n{image.width} {image.height}\n{image.maxval}\n".encode() + "\n".join(rows).encode() + b"\n"
    return f"P5\n{image.width} {image.height}\n{image.maxval}\n".encode() + bytes(image.samples)
