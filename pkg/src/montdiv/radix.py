"""Radix powers R^n mod q in O(lg n) Montgomery operations."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .primitives import MontCtx, mmul_one, mont_mul, mont_sqr

BITMAP_CAPACITY = 32


def r_mod_q(ctx: MontCtx) -> int:
    return ((ctx.mask % ctx.q) + 1) % ctx.q


def r2_mod_q(ctx: MontCtx) -> int:
    """R^2 mod q from the exact integer R mod q; no floating point involved."""
    r = r_mod_q(ctx)
    return (r * r) % ctx.q


@dataclass(frozen=True)
class PoweringBitmap:
    """Squaring schedule for the radix powering loop.

    Bit i set means "downshift then multiply" (power 2p-2); clear means a plain
    square (power 2p-1). Bits are consumed from index count-1 down to 0.
    """

    bits: int
    count: int
    p_final: int

    def popcount(self) -> int:
        return bin(self.bits).count("1")


def build_bitmap(n: int) -> PoweringBitmap:
    if n < 4:
        raise ValueError(f"bitmap needs n >= 4, got {n}")
    if n >> BITMAP_CAPACITY:
        raise ValueError(f"n = {n} exceeds the 32-bit powering bitmap")
    bm = 0
    j = 0
    p = n
    while p > 5:
        if p % 2 == 0:
            bm |= 1 << j
        p = p // 2 + 1
        j += 1
    return PoweringBitmap(bm, j, p)


def radix_power(n: int, ctx: MontCtx, trace: list | None = None) -> int:
    """R^n mod q.

    ``trace`` receives one ``(calls, power_out)`` entry per Montgomery step,
    where ``calls`` is a tuple of kernel names.
    """
    if n < 0:
        raise ValueError("use inverse_radix_power for negative exponents")

    def log(calls, p):
        if trace is not None:
            trace.append((calls, p))

    if n == 0:
        return 1
    if n == 1:
        return r_mod_q(ctx)
    pw = r2_mod_q(ctx)
    if n == 2:
        return pw
    ptmp = mont_sqr(pw, ctx)
    log(("MONT_SQR",), 3)
    if n == 3:
        return ptmp
    bm = build_bitmap(n)
    if bm.p_final == 4:
        pw = mont_mul(pw, ptmp, ctx)
        log(("MONT_MUL",), 4)
    else:
        pw = mont_sqr(ptmp, ctx)
        log(("MONT_SQR",), 5)
    p = bm.p_final
    for i in range(bm.count - 1, -1, -1):
        if bm.bits >> i & 1:
            ptmp = mmul_one(pw, ctx)
            pw = mont_mul(ptmp, pw, ctx)
            p = 2 * p - 2
            log(("MONT_SQR", "MMUL_ONE"), p)
        else:
            pw = mont_sqr(pw, ctx)
            p = 2 * p - 1
            log(("MONT_SQR",), p)
    return pw


def inverse_radix_power(m: int, ctx: MontCtx) -> int:
    """R^-m mod q for m >= 0.

    Same halving recursion as radix_power run on the exponent -m, starting
    from R^-1 = MMUL_ONE(1) and R^-2 = MMUL_ONE(R^-1).
    """
    if m < 0:
        raise ValueError("m must be non-negative")
    if m == 0:
        return 1
    bm = 0
    j = 0
    p = -m
    while p < -2:
        if p % 2 == 0:
            bm |= 1 << j
        p = p // 2 + 1
        j += 1
    pw = mmul_one(1, ctx)
    if p == -2:
        pw = mmul_one(pw, ctx)
    for i in range(j - 1, -1, -1):
        if bm >> i & 1:
            pw = mont_mul(mmul_one(pw, ctx), pw, ctx)
        else:
            pw = mont_sqr(pw, ctx)
    return pw


class Variant(enum.Enum):
    USE_A = "A"
    USE_B = "B"


def _bitmap_cost(n: int) -> int:
    return build_bitmap(n).popcount() if n >= 4 else 0


def choose_variant(n: int) -> Variant:
    """Pick the scaled-remainder loop whose radix power is cheaper.

    The carry route pays one extra loop iteration, so it wins only when its
    power n+1 has at least two fewer set bitmap bits than n; ties go to B.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n <= 3:
        return Variant.USE_B
    cost_a = _bitmap_cost(n + 1) + 1
    cost_b = _bitmap_cost(n)
    return Variant.USE_A if cost_a < cost_b else Variant.USE_B


def _popcounts(lo: int, hi: int) -> np.ndarray:
    """Bitmap popcounts for every n in [lo, hi], vectorised over n."""
    p = np.arange(lo, hi + 1, dtype=np.int64)
    count = np.zeros_like(p)
    active = p > 5
    while active.any():
        count += active & (p % 2 == 0)
        p = np.where(active, p // 2 + 1, p)
        active = p > 5
    return count


def bitmap_census(n_min: int, n_max: int) -> tuple[Fraction, int]:
    """Mean and max of |popcount(bm(n+1)) - popcount(bm(n))| over n in [n_min, n_max]."""
    if not 6 <= n_min < n_max:
        raise ValueError("need 6 <= n_min < n_max")
    pc = _popcounts(n_min, n_max + 1)
    diff = np.abs(np.diff(pc))
    return Fraction(int(diff.sum()), int(diff.size)), int(diff.max())
