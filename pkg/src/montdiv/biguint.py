"""Little-endian vector of 64-bit words."""
from __future__ import annotations

import numpy as np

from .primitives import M64


class BigUint:
    """Immutable unsigned integer stored as little-endian uint64 words.

    The storage length ``len(x)`` may include high zero words; equality and
    ``int(x)`` go by value.
    """

    __slots__ = ("_words",)

    def __init__(self, words=(0,)):
        arr = np.array(words, dtype=np.uint64, copy=True, ndmin=1)
        if arr.ndim != 1:
            raise ValueError("words must be one-dimensional")
        if arr.size == 0:
            arr = np.zeros(1, dtype=np.uint64)
        arr.flags.writeable = False
        self._words = arr

    @classmethod
    def from_int(cls, value: int, n: int | None = None) -> BigUint:
        if value < 0:
            raise ValueError("BigUint cannot hold a negative value")
        need = max(1, (value.bit_length() + 63) // 64)
        n = need if n is None else n
        if n < need:
            raise ValueError(f"{value.bit_length()}-bit value does not fit {n} words")
        raw = value.to_bytes(8 * n, "little")
        obj = cls.__new__(cls)
        arr = np.frombuffer(raw, dtype="<u8").astype(np.uint64)
        arr.flags.writeable = False
        obj._words = arr
        return obj

    @classmethod
    def from_digits(cls, digits, bits: int) -> BigUint:
        if bits == 64:
            return cls(list(digits))
        words = []
        for d in digits:
            words.append(d & M64)
            words.append(d >> 64)
        return cls(words)

    @property
    def words(self) -> np.ndarray:
        return self._words

    def __len__(self) -> int:
        return self._words.size

    def __int__(self) -> int:
        return int.from_bytes(self._words.astype("<u8").tobytes(), "little")

    __index__ = __int__

    def tolist(self) -> list[int]:
        return self._words.tolist()

    def digits(self, bits: int = 64) -> list[int]:
        """Words regrouped into ``bits``-wide digits, zero-padding an odd top word."""
        w = self._words.tolist()
        if bits == 64:
            return w
        if len(w) % 2:
            w.append(0)
        return [w[i] | (w[i + 1] << 64) for i in range(0, len(w), 2)]

    def padded(self, n: int) -> np.ndarray:
        """Words zero-extended to at least ``n`` entries (a copy only if needed)."""
        if self._words.size >= n:
            return self._words
        out = np.zeros(n, dtype=np.uint64)
        out[: self._words.size] = self._words
        return out

    def significant_len(self) -> int:
        nz = np.flatnonzero(self._words)
        return int(nz[-1]) + 1 if nz.size else 1

    def trailing_zeros(self) -> int:
        """Count of trailing zero bits; 0 for the value zero."""
        nz = np.flatnonzero(self._words)
        if not nz.size:
            return 0
        i = int(nz[0])
        w = int(self._words[i])
        return 64 * i + (w & -w).bit_length() - 1

    def __rshift__(self, s: int) -> BigUint:
        if s < 0:
            raise ValueError("negative shift")
        whole, part = divmod(s, 64)
        w = self._words[whole:]
        if w.size == 0:
            return BigUint()
        if part:
            hi = np.zeros_like(w)
            hi[:-1] = w[1:] << np.uint64(64 - part)
            w = (w >> np.uint64(part)) | hi
        return BigUint(w)

    def low_bits(self, k: int) -> int:
        whole = (k + 63) // 64
        return int(BigUint(self._words[:whole])) & ((1 << k) - 1)

    def __eq__(self, other) -> bool:
        if isinstance(other, BigUint):
            a, b = self._words, other._words
            n = max(a.size, b.size)
            return bool(np.array_equal(self.padded(n), other.padded(n)))
        if isinstance(other, int):
            return int(self) == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(int(self))

    def __repr__(self) -> str:
        if len(self) <= 4:
            return f"BigUint({int(self)})"
        return f"BigUint(<{len(self)} words>)"
