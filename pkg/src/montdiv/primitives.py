"""Width-parametric multiply primitives and Montgomery kernels.

Words are plain Python ints holding exactly ``bits`` bits, ``bits`` in {64, 128}.
A 128-bit word splits little-endian into (d0, d1) 64-bit halves.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidModulusError, UnsupportedWidthError

WIDTHS = (64, 128)
M64 = (1 << 64) - 1


def _check_width(bits: int) -> None:
    if bits not in WIDTHS:
        raise UnsupportedWidthError(f"word width must be 64 or 128, got {bits}")


def split128(x: int) -> tuple[int, int]:
    return x & M64, x >> 64


def join128(d0: int, d1: int) -> int:
    return (d1 << 64) | d0


def umul_lohi(x: int, y: int, bits: int = 64) -> tuple[int, int]:
    """Full double-width product ``x*y`` returned as ``(lo, hi)``.

    At 128 bits the product is assembled from four 64x64 partial products
    with explicit carry propagation between the 64-bit columns.
    """
    if bits == 64:
        p = x * y
        return p & M64, p >> 64
    _check_width(bits)
    x0, x1 = split128(x)
    y0, y1 = split128(y)
    p00 = x0 * y0
    p01 = x0 * y1
    p10 = x1 * y0
    p11 = x1 * y1
    w0 = p00 & M64
    col1 = (p00 >> 64) + (p01 & M64) + (p10 & M64)
    w1 = col1 & M64
    col2 = (col1 >> 64) + (p01 >> 64) + (p10 >> 64) + (p11 & M64)
    w2 = col2 & M64
    w3 = ((col2 >> 64) + (p11 >> 64)) & M64
    return join128(w0, w1), join128(w2, w3)


def mull(x: int, y: int, bits: int = 64) -> int:
    """Lower half of ``x*y``, i.e. the product mod 2^bits."""
    return (x * y) & ((1 << bits) - 1)


def umulh(x: int, y: int, bits: int = 64) -> int:
    """Upper half of the unsigned double-width product ``x*y``."""
    return (x * y) >> bits


@dataclass(frozen=True)
class MontCtx:
    """Validated odd modulus with its inverse mod R = 2^bits."""

    q: int
    qinv: int
    bits: int = 64

    def __post_init__(self):
        _check_width(self.bits)
        if self.q < 3 or not self.q & 1:
            raise InvalidModulusError(f"modulus must be odd and >= 3, got {self.q}")
        if self.q >> self.bits:
            raise UnsupportedWidthError(f"modulus {self.q} does not fit {self.bits} bits")
        if (self.q * self.qinv) & self.mask != 1:
            raise InvalidModulusError("qinv is not the inverse of q mod 2^bits")

    @property
    def mask(self) -> int:
        return (1 << self.bits) - 1

    @property
    def radix(self) -> int:
        return 1 << self.bits


def mont_mul(x: int, y: int, ctx: MontCtx) -> int:
    """Montgomery product ``x*y*R^-1 mod q``, result in [0, q).

    Inputs up to 2^bits - 1 are accepted; the high half is reduced first
    when it is not already below q.
    """
    q, bits = ctx.q, ctx.bits
    p = x * y
    hi = p >> bits
    lo = umulh(q, mull(ctx.qinv, p & ctx.mask, bits), bits)
    if hi >= q:
        hi %= q
    if hi < lo:
        return hi - lo + q
    return hi - lo


def mont_sqr(x: int, ctx: MontCtx) -> int:
    return mont_mul(x, x, ctx)


def mmul_one(x: int, ctx: MontCtx) -> int:
    """Montgomery multiply by unity, ``x*R^-1 mod q``, without a double-width product."""
    lo = umulh(ctx.q, mull(ctx.qinv, x, ctx.bits), ctx.bits)
    return ctx.q - lo if lo else 0


def mod_add(x: int, y: int, q: int, bits: int = 64) -> int:
    """``(x + y) mod q`` for x, y < q, with the b-bit sum allowed to wrap."""
    mask = (1 << bits) - 1
    s = (x + y) & mask
    if s < x or s >= q:
        s = (s - q) & mask
    return s


def mod_sub(x: int, y: int, q: int) -> int:
    return x - y if x >= y else x - y + q
