"""Binary limb files: b"MDIV1", u64 LE word count, then the words (LE, least significant first)."""
from __future__ import annotations

import struct
from pathlib import Path

import numpy as np

from .biguint import BigUint

MAGIC = b"MDIV1"
_HEADER = len(MAGIC) + 8


class LimbFileError(ValueError):
    pass


def read_limbs(path) -> BigUint:
    data = Path(path).read_bytes()
    if data[: len(MAGIC)] != MAGIC:
        raise LimbFileError(f"{path}: bad magic, expected {MAGIC!r}")
    if len(data) < _HEADER:
        raise LimbFileError(f"{path}: truncated header")
    (count,) = struct.unpack_from("<Q", data, len(MAGIC))
    body = data[_HEADER:]
    if len(body) != 8 * count:
        raise LimbFileError(f"{path}: header says {count} words, body has {len(body)} bytes")
    return BigUint(np.frombuffer(body, dtype="<u8"))


def write_limbs(path, x: BigUint) -> None:
    words = np.ascontiguousarray(x.words, dtype="<u8")
    with open(path, "wb") as fh:
        fh.write(MAGIC)
        fh.write(struct.pack("<Q", words.size))
        fh.write(words.tobytes())
