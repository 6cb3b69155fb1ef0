"""Exact quotient from x and its remainder (quotient loop), folded and even-divisor forms."""
from __future__ import annotations

import numpy as np

from . import kernels
from .biguint import BigUint
from .errors import InconsistentRemainderError, UnsupportedFoldError
from .inverse import DivisorSpec
from .primitives import MontCtx, mod_sub, mont_mul, mull
from .radix import radix_power
from .remainder import (
    FOLDS,
    _divisor,
    _padded_count,
    as_biguint,
    fold_scaled_remainder,
    kernel_args,
    odd_remainder,
)


def quotient_digits(digits, r: int, ctx: MontCtx, check: bool = False) -> tuple[list[int], int]:
    """Quotient loop over b-bit digits seeded with carry ``r``.

    Returns the quotient digits and the final cy + bw. With ``check`` every
    iteration also asserts the carry bound and the low-half identity.
    """
    q, qinv, bits, mask = ctx.q, ctx.qinv, ctx.bits, ctx.mask
    cy, bw = r, 0
    out = []
    for xi in digits:
        diff = (xi - bw - cy) & mask
        bw = int(diff > xi)
        # the borrow travels upward in cy + bw; no q re-add as in the remainder loop
        tmp = (diff * qinv) & mask
        if check:
            if cy > mask - 1 and out:
                raise AssertionError(f"carry {cy} exceeds R-2")
            if mull(tmp, q, bits) != diff:
                raise AssertionError("low half of tmp*q differs from x_i - bw - cy")
        cy = (tmp * q) >> bits
        out.append(tmp)
    return out, cy + bw


def _from_digits(digits, ctx: MontCtx) -> BigUint:
    return BigUint.from_digits(digits, ctx.bits)


def quotient(x, r: int, ctx: MontCtx, check: bool = False) -> BigUint:
    """floor(x / q) given r = x mod q; raises if r is inconsistent with x."""
    x = as_biguint(x)
    if not 0 <= r < ctx.q:
        raise InconsistentRemainderError(f"remainder {r} not in [0, q)")
    if ctx.bits == 64 and not check:
        y = np.empty(len(x), dtype=np.uint64)
        end = int(kernels.quotient_d(x.words, y, np.uint64(r), *kernel_args(ctx)))
        out = BigUint(y)
    else:
        digits, end = quotient_digits(x.digits(ctx.bits), r, ctx, check)
        out = _from_digits(digits, ctx)
    if end:
        raise InconsistentRemainderError(f"final carry {end} != 0: r is not x mod q")
    return out


def quotient_low_words(x, r: int, ctx: MontCtx, m: int) -> BigUint:
    """Low ``m`` 64-bit words of floor(x / q), reading only words 0..m-1 of x.

    Correct whenever the caller's bound holds, i.e. the quotient fits m words;
    otherwise these are still its exact low m words.
    """
    x = as_biguint(x)
    if m < 1:
        raise ValueError("m must be >= 1")
    low = BigUint(x.words[:m])
    digits, _ = quotient_digits(low.digits(ctx.bits), r, ctx)
    words = _from_digits(digits, ctx).tolist()[:m]
    words += [0] * (m - len(words))
    return BigUint(words)


def partial_remainder_cascade(carries, ctx: MontCtx, weight: int) -> list[int]:
    """Remainders r_0..r_{F-1} of the dividend from each segment upward.

    ``weight`` is the Montgomery-scaled segment power P*R = R^(s+1) mod q, so
    each ``mont_mul(., weight)`` multiplies by P = R^s. r_0 is x mod q.
    """
    q = ctx.q
    carries = list(carries)
    out = [0] * len(carries)
    acc = 0
    for j in range(len(carries) - 1, -1, -1):
        acc = mont_mul(mod_sub(acc, carries[j], q), weight, ctx)
        out[j] = acc
    return out


def folded_quotient(x, ctx: MontCtx, fold: int) -> tuple[BigUint, int]:
    """Two-pass division with F interleaved chains per pass.

    Returns (quotient, remainder). The remainder pass yields the segment
    carries, the cascade turns them into seeds, and every quotient segment
    starts with a zero borrow.
    """
    if fold not in FOLDS:
        raise UnsupportedFoldError(f"folding factor must be one of {FOLDS}, got {fold}")
    x = as_biguint(x)
    n = _padded_count(x, ctx, fold)
    s = n // fold
    carries = fold_scaled_remainder(x, ctx, fold)
    seeds = partial_remainder_cascade(carries, ctx, radix_power(s + 1, ctx))
    expect_end = seeds[1:] + [0]
    if ctx.bits == 64:
        words = x.padded(n)
        y = np.empty(n, dtype=np.uint64)
        r64 = [np.uint64(r) for r in seeds]
        if fold == 1:
            ends = [kernels.quotient_d(words, y, r64[0], *kernel_args(ctx))]
        elif fold == 2:
            ends = kernels.quotient_d2(words, y, *r64, *kernel_args(ctx))
        else:
            ends = kernels.quotient_d4(words, y, *r64, *kernel_args(ctx))
        ends = [int(e) for e in ends]
        y = y[: len(x)] if n > len(x) else y
        quo = BigUint(y)
    else:
        digits = x.digits(ctx.bits)
        digits += [0] * (n - len(digits))
        out, ends = [], []
        for j in range(fold):
            seg, end = quotient_digits(digits[j * s:(j + 1) * s], seeds[j], ctx)
            out += seg
            ends.append(end)
        quo = _from_digits(out, ctx)
    if ends != expect_end:
        raise InconsistentRemainderError(f"segment end carries {ends} != {expect_end}")
    return quo, seeds[0]


def div_rem(x, divisor, fold: int = 1) -> tuple[BigUint, BigUint]:
    """(floor(x / d), x mod d) for d >= 2 whose odd part fits 128 bits."""
    x = as_biguint(x)
    ds: DivisorSpec = _divisor(divisor)
    if fold not in FOLDS:
        raise UnsupportedFoldError(f"folding factor must be one of {FOLDS}, got {fold}")
    tz = ds.tz
    bsave = x.low_bits(tz) if tz else 0
    xs = x >> tz if tz else x
    ctx = ds.odd_ctx
    if ctx is None:
        return xs, BigUint.from_int(bsave)
    if fold == 1:
        r = odd_remainder(xs, ctx)
        y = quotient(xs, r, ctx)
    else:
        y, r = folded_quotient(xs, ctx, fold)
    return y, BigUint.from_int((r << tz) + bsave)
