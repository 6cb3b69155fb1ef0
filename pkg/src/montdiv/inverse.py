"""Inverse of an odd modulus mod 2^64 (Newton) and mod 2^128 (bit-doubling)."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidModulusError, PreconditionError, UnsupportedWidthError
from .primitives import M64, MontCtx, mull, umulh

NEWTON_STEPS_64 = 4


def _require_odd(q: int) -> None:
    if not q & 1:
        raise InvalidModulusError(f"modulus must be odd, got {q}")


def qinv_seed(q: int) -> int:
    """XOR(3q, 2): at least 5 correct low bits of q^-1 mod 2^64."""
    _require_odd(q)
    return mull(3, q) ^ 2


def good_bits(q: int, qinv: int, bits: int = 64) -> int:
    """Number of low bits for which q*qinv agrees with 1, capped at ``bits``."""
    err = (q * qinv - 1) & ((1 << bits) - 1)
    if err == 0:
        return bits
    return (err & -err).bit_length() - 1


def qinv_newton64(q: int, trace: list | None = None) -> int:
    """q^-1 mod 2^64 via four Newton steps from the XOR seed.

    If ``trace`` is given, one ``(q*qinv_prev mod 2^64, qinv_new)`` pair is
    appended per step.
    """
    q &= M64
    qinv = qinv_seed(q)
    for _ in range(NEWTON_STEPS_64):
        tmp = mull(q, qinv)
        qinv = mull(qinv, (2 - tmp) & M64)
        if trace is not None:
            trace.append((tmp, qinv))
    return qinv


def qinv_extend(q_lo: int, q_hi: int, qinv_lo: int) -> int:
    """High 64 bits of the inverse of ``q_hi*2^64 + q_lo`` mod 2^128.

    Three 64-bit multiplies: MULL(-qinv_lo, MULL(q_hi, qinv_lo) + UMULH(q_lo, qinv_lo)).
    """
    if mull(q_lo, qinv_lo) != 1:
        raise PreconditionError("qinv_lo is not the inverse of q_lo mod 2^64")
    s = (mull(q_hi, qinv_lo) + umulh(q_lo, qinv_lo)) & M64
    return mull(-qinv_lo & M64, s)


def make_ctx(q) -> MontCtx:
    """Montgomery context at the narrowest supported width holding ``q``."""
    q = int(q)
    if q < 3:
        raise InvalidModulusError(f"modulus must be >= 3, got {q}")
    _require_odd(q)
    if q >> 128:
        raise UnsupportedWidthError(f"modulus wider than 128 bits: {q.bit_length()} bits")
    lo = qinv_newton64(q & M64)
    if q >> 64 == 0:
        return MontCtx(q, lo, 64)
    hi = qinv_extend(q & M64, q >> 64, lo)
    return MontCtx(q, (hi << 64) | lo, 128)


@dataclass(frozen=True)
class DivisorSpec:
    """General divisor = odd part << tz. ``odd_ctx`` is None when the odd part is 1."""

    tz: int
    odd_ctx: MontCtx | None

    @property
    def odd(self) -> int:
        return self.odd_ctx.q if self.odd_ctx is not None else 1

    @property
    def value(self) -> int:
        return self.odd << self.tz


def make_divisor(d) -> DivisorSpec:
    d = int(d)
    if d < 2:
        raise InvalidModulusError(f"divisor must be >= 2, got {d}")
    tz = (d & -d).bit_length() - 1
    odd = d >> tz
    return DivisorSpec(tz, make_ctx(odd) if odd > 1 else None)
