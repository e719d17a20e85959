"""Bit-stream I/O for the encode/decode/simulate commands.

``bytes`` streams are raw octets read most-significant bit first; ``bits`` streams are text made
of ``0``/``1`` digits with whitespace ignored. Partial frames are rejected, never padded.
"""

from collections.abc import Iterator
from enum import Enum
from pathlib import Path

from ..models.bitword import BitWord
from ..models.errors import FrameError


class StreamFormat(str, Enum):
    BYTES = "bytes"
    BITS = "bits"


def read_bits(path: Path | str, fmt: StreamFormat) -> str:
    """Read a stream as a string of digits, position 1 first."""
    if fmt is StreamFormat.BYTES:
        return "".join(format(b, "08b") for b in Path(path).read_bytes())
    digits = "".join(Path(path).read_text(encoding="utf-8").split())
    if any(c not in "01" for c in digits):
        raise FrameError(f"{path}: a bits stream may only contain 0, 1 and whitespace")
    return digits


def split_frames(bits: str, frame_bits: int) -> Iterator[BitWord]:
    if len(bits) % frame_bits:
        raise FrameError(
            f"stream of {len(bits)} bits is not a whole number of {frame_bits}-bit frames "
            f"({len(bits) % frame_bits} bits left over)"
        )
    for start in range(0, len(bits), frame_bits):
        yield BitWord.from_string(bits[start : start + frame_bits])


def write_bits(path: Path | str, bits: str, fmt: StreamFormat) -> None:
    if fmt is StreamFormat.BITS:
        Path(path).write_text(bits + "\n", encoding="utf-8", newline="\n")
        return
    if len(bits) % 8:
        raise FrameError(f"{len(bits)} output bits do not fill whole bytes; use --format bits")
    data = int(bits, 2).to_bytes(len(bits) // 8, "big") if bits else b""
    Path(path).write_bytes(data)
