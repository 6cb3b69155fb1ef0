"""Right-to-left scaled remainders (carry and residue loops) and loop folding."""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from . import kernels
from .biguint import BigUint
from .errors import UnsupportedFoldError
from .inverse import DivisorSpec, make_divisor
from .primitives import MontCtx, mod_add, mont_mul
from .radix import Variant, choose_variant, inverse_radix_power, radix_power

FOLDS = (1, 2, 4)


def as_biguint(x) -> BigUint:
    return x if isinstance(x, BigUint) else BigUint.from_int(int(x))


def digit_count(x: BigUint, ctx: MontCtx) -> int:
    per = ctx.bits // 64
    return (len(x) + per - 1) // per


def kernel_args(ctx: MontCtx) -> tuple[np.uint64, np.uint64]:
    # plain ints below 2^63 would be typed int64 and promote to float64
    return np.uint64(ctx.q), np.uint64(ctx.qinv)


def _fast(ctx: MontCtx, trace) -> bool:
    return ctx.bits == 64 and trace is None


def hensel_carry(digits, ctx: MontCtx, trace: list | None = None) -> int:
    """Carry loop over b-bit digits; returns the final carry."""
    q, qinv, bits, mask = ctx.q, ctx.qinv, ctx.bits, ctx.mask
    cy = 0
    for xi in digits:
        bw = cy > xi
        tmp = (((xi - cy) * qinv) + bw) & mask
        cy = (tmp * q) >> bits
        if trace is not None:
            trace.append(cy)
    return cy


def _carry_a(x: BigUint, ctx: MontCtx, trace=None) -> int:
    if _fast(ctx, trace):
        return int(kernels.hensel_a(x.words, *kernel_args(ctx)))
    return hensel_carry(x.digits(ctx.bits), ctx, trace)


def is_div(x, ctx: MontCtx, fold: int = 1) -> bool:
    """True iff q divides x (carry loop, optionally F-way folded)."""
    x = as_biguint(x)
    if fold == 1:
        return _carry_a(x, ctx) == 0
    carries = fold_scaled_remainder(x, ctx, fold)
    return combine_partials(carries, ctx, _padded_count(x, ctx, fold)) == 0


class ScaleKind(enum.Enum):
    # r = value * R^n: the negated carry-loop output
    NEG_SCALED_A = "A"
    # r = value * R^(n-1): the residue-loop output
    POS_SCALED_B = "B"


@dataclass(frozen=True)
class ScaledRemainder:
    value: int
    kind: ScaleKind
    n: int

    @property
    def montgomery_power(self) -> int:
        """Radix power whose Montgomery product with ``value`` gives x mod q."""
        return self.n + 1 if self.kind is ScaleKind.NEG_SCALED_A else self.n

    def unscale(self, ctx: MontCtx) -> int:
        return mont_mul(self.value, radix_power(self.montgomery_power, ctx), ctx)


def scaled_remainder_a(x, ctx: MontCtx, trace: list | None = None) -> ScaledRemainder:
    """Negated carry: s with x = s * R^n (mod q); ``trace`` collects each carry."""
    x = as_biguint(x)
    cy = _carry_a(x, ctx, trace)
    return ScaledRemainder(ctx.q - cy if cy else 0, ScaleKind.NEG_SCALED_A, digit_count(x, ctx))


def scaled_remainder_b(x, ctx: MontCtx, trace: list | None = None) -> ScaledRemainder:
    """Residue loop: lo with x = lo * R^(n-1) (mod q).

    ``trace`` collects lo for every digit, including the multiply-free last one.
    """
    x = as_biguint(x)
    n = digit_count(x, ctx)
    q = ctx.q
    if n == 1:
        d0 = x.digits(ctx.bits)[0]
        if trace is not None:
            trace.append(d0)
        return ScaledRemainder(d0 % q, ScaleKind.POS_SCALED_B, 1)
    if _fast(ctx, trace):
        lo = int(kernels.hensel_b(x.words, *kernel_args(ctx)))
    else:
        qinv, bits, mask = ctx.qinv, ctx.bits, ctx.mask
        digits = x.digits(bits)
        cy = 0
        for xi in digits:
            tmp = (xi - cy) & mask
            bw = cy > xi
            lo = (tmp + q) & mask if bw else tmp
            if trace is not None:
                trace.append(lo)
            tmp = ((tmp * qinv) + bw) & mask
            cy = (tmp * q) >> bits
    if lo >= q:
        lo %= q
    return ScaledRemainder(lo, ScaleKind.POS_SCALED_B, n)


def _padded_count(x: BigUint, ctx: MontCtx, fold: int) -> int:
    n = digit_count(x, ctx)
    return -(-n // fold) * fold


def fold_scaled_remainder(x, ctx: MontCtx, fold: int) -> list[int]:
    """Carry-loop outputs for ``fold`` equal segments of x (low segment first).

    x is zero-padded to a multiple of ``fold`` digits; the input is not modified.
    """
    if fold not in FOLDS:
        raise UnsupportedFoldError(f"folding factor must be one of {FOLDS}, got {fold}")
    x = as_biguint(x)
    n = _padded_count(x, ctx, fold)
    if ctx.bits == 64:
        words = x.padded(n)
        if fold == 1:
            return [int(kernels.hensel_a(words, *kernel_args(ctx)))]
        if fold == 2:
            return [int(c) for c in kernels.hensel_a2(words, *kernel_args(ctx))]
        return [int(c) for c in kernels.hensel_a4(words, *kernel_args(ctx))]
    digits = x.digits(ctx.bits)
    digits += [0] * (n - len(digits))
    s = n // fold
    return [hensel_carry(digits[j * s:(j + 1) * s], ctx) for j in range(fold)]


def combine_partials(carries, ctx: MontCtx, n: int) -> int:
    """Recombine segment carries into the serial carry-loop output.

    Segment j of length s = n/F contributes cy_j * R^(-s*(F-1-j)); the sum is
    nested from the low segment up, one Montgomery weighting per step.
    """
    carries = list(carries)
    if len(carries) == 1:
        return carries[0]
    s = n // len(carries)
    # mont_mul(c, R^(1-s)) = c * R^-s
    weight = inverse_radix_power(s - 1, ctx)
    acc = carries[0]
    for c in carries[1:]:
        acc = mod_add(mont_mul(acc, weight, ctx), c, ctx.q, ctx.bits)
    return acc


def odd_remainder(x: BigUint, ctx: MontCtx, fold: int = 1) -> int:
    """x mod q for an odd Montgomery modulus, as a plain int."""
    if fold == 1:
        n = digit_count(x, ctx)
        if choose_variant(n) is Variant.USE_A:
            sr = scaled_remainder_a(x, ctx)
        else:
            sr = scaled_remainder_b(x, ctx)
        return sr.unscale(ctx)
    n = _padded_count(x, ctx, fold)
    cy = combine_partials(fold_scaled_remainder(x, ctx, fold), ctx, n)
    return ScaledRemainder(ctx.q - cy if cy else 0, ScaleKind.NEG_SCALED_A, n).unscale(ctx)


def _divisor(divisor) -> DivisorSpec:
    if isinstance(divisor, DivisorSpec):
        return divisor
    if isinstance(divisor, MontCtx):
        return DivisorSpec(0, divisor)
    return make_divisor(divisor)


def remainder(x, divisor, fold: int = 1) -> BigUint:
    """x mod divisor for any divisor >= 2 whose odd part fits 128 bits."""
    x = as_biguint(x)
    ds = _divisor(divisor)
    if fold not in FOLDS:
        raise UnsupportedFoldError(f"folding factor must be one of {FOLDS}, got {fold}")
    bsave = x.low_bits(ds.tz) if ds.tz else 0
    xs = x >> ds.tz if ds.tz else x
    r = odd_remainder(xs, ds.odd_ctx, fold) if ds.odd_ctx is not None else 0
    return BigUint.from_int((r << ds.tz) + bsave)


def divides(x, divisor, fold: int = 1) -> bool:
    """Divisibility for any divisor, even ones via a trailing-zero check first."""
    x = as_biguint(x)
    ds = _divisor(divisor)
    if x == 0:
        return True
    if x.trailing_zeros() < ds.tz:
        return False
    if ds.odd_ctx is None:
        return True
    return is_div(x >> ds.tz if ds.tz else x, ds.odd_ctx, fold)
