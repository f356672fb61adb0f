"""Binary sensor frame codec.

One frame carries one full sweep from one sensor. Layout, all multi-byte
integers little-endian:

    offset  size  field
    0       2     magic 0x57 0x58 ("WX")
    2       1     version (currently 1)
    3       2     sensor_id
    5       8     timestamp_ms
    13      4     start_khz
    17      2     bin_khz
    19      2     n_bins
    21      n     bins, one signed byte of dBm each
    21+n    4     CRC-32 over bytes [0, 21+n)

The CRC is the ubiquitous reflected-0xEDB88320 variant (init and final xor
0xFFFFFFFF), i.e. exactly zlib.crc32. Parse errors are split three ways so a
collector can count framing noise, short reads and corruption separately.
"""
from __future__ import annotations

import struct
import zlib
from dataclasses import dataclass

from ..errors import DomainError

MAGIC = b"WX"
VERSION = 1

_HEADER = struct.Struct("<2sBHQIHH")
_CRC = struct.Struct("<I")


class FrameError(DomainError):
    """Base for everything that can go wrong with a wire frame."""


class FrameFormatError(FrameError):
    """Bad magic, unknown version, or trailing bytes."""


class FrameTruncationError(FrameError):
    """The byte sequence ends before the declared frame does."""


class FrameIntegrityError(FrameError):
    """Checksum mismatch: the frame was damaged in transit."""


@dataclass(frozen=True)
class SensorSweep:
    """One spectrum sweep: dBm per frequency bin on a regular grid."""

    sensor_id: int
    timestamp_ms: int
    start_khz: int
    bin_khz: int
    bins: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "bins", tuple(int(b) for b in self.bins))
        if not 0 <= self.sensor_id <= 0xFFFF:
            raise DomainError(f"sensor_id must fit 16 bits, got {self.sensor_id}")
        if not 0 <= self.timestamp_ms <= 0xFFFFFFFFFFFFFFFF:
            raise DomainError(f"timestamp_ms must fit 64 bits, got {self.timestamp_ms}")
        if not 0 <= self.start_khz <= 0xFFFFFFFF:
            raise DomainError(f"start_khz must fit 32 bits, got {self.start_khz}")
        if not 0 < self.bin_khz <= 0xFFFF:
            raise DomainError(f"bin_khz must be a positive 16-bit value, got {self.bin_khz}")
        if not self.bins:
            raise DomainError("sweep must contain at least one bin")
        for b in self.bins:
            if not -128 <= b <= 127:
                raise DomainError(f"bin value {b} outside signed 8-bit range")

    @property
    def n_bins(self) -> int:
        return len(self.bins)

    def bin_center_khz(self, i: int) -> float:
        return self.start_khz + (i + 0.5) * self.bin_khz

    @property
    def stop_khz(self) -> int:
        return self.start_khz + self.n_bins * self.bin_khz


def encode_frame(sweep: SensorSweep) -> bytes:
    """Serialize one sweep; raises DomainError if it cannot fit a frame."""
    n = sweep.n_bins
    if n > 0xFFFF:
        raise DomainError(f"{n} bins do not fit the 16-bit frame length field")
    body = _HEADER.pack(
        MAGIC,
        VERSION,
        sweep.sensor_id,
        sweep.timestamp_ms,
        sweep.start_khz,
        sweep.bin_khz,
        n,
    ) + struct.pack(f"<{n}b", *sweep.bins)
    return body + _CRC.pack(zlib.crc32(body))


def parse_frame(data: bytes) -> SensorSweep:
    """Decode and verify one frame; the input must be exactly one frame."""
    if len(data) < len(MAGIC):
        raise FrameTruncationError(f"frame cut off after {len(data)} bytes")
    if data[:2] != MAGIC:
        raise FrameFormatError(f"bad magic {data[:2]!r}")
    if len(data) < _HEADER.size:
        raise FrameTruncationError(
            f"header needs {_HEADER.size} bytes, got {len(data)}"
        )
    magic, version, sensor_id, timestamp_ms, start_khz, bin_khz, n = _HEADER.unpack_from(
        data, 0
    )
    if version != VERSION:
        raise FrameFormatError(f"unsupported frame version {version}")
    expected = _HEADER.size + n + _CRC.size
    if len(data) < expected:
        raise FrameTruncationError(
            f"frame declares {expected} bytes, got {len(data)}"
        )
    if len(data) > expected:
        raise FrameFormatError(
            f"{len(data) - expected} trailing bytes after a {expected}-byte frame"
        )
    body = data[: _HEADER.size + n]
    (crc_received,) = _CRC.unpack_from(data, _HEADER.size + n)
    if zlib.crc32(body) != crc_received:
        raise FrameIntegrityError("CRC mismatch")
    bins = struct.unpack_from(f"<{n}b", data, _HEADER.size)
    return SensorSweep(
        sensor_id=sensor_id,
        timestamp_ms=timestamp_ms,
        start_khz=start_khz,
        bin_khz=bin_khz,
        bins=bins,
    )
