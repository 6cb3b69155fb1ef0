"""Powers of two mod q: 2^-p without radix scalings, the positive ladder, factor checks."""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import InvalidModulusError
from .inverse import make_ctx
from .primitives import MontCtx, mmul_one, mod_add, mont_mul, mont_sqr


class LadderStep(NamedTuple):
    call: str
    bit_index: int | None
    doubled: bool
    value: int


@dataclass(frozen=True)
class Pow2Plan:
    """Control data for the inverse-power ladder of exponent p at width ``bits``."""

    p: int
    bits: int
    pshift: int
    i1: int
    i0: int
    ichunk: int
    seed: int

    @property
    def complemented(self) -> int:
        return ~self.pshift & ((1 << self.bits) - 1)

    @property
    def iterations(self) -> int:
        return self.i0


def _chunk_bounds(e: int, bits: int) -> tuple[int, int]:
    # widest leading bitfield of e whose value stays below bits
    i1 = e.bit_length() - 1
    i0 = max(i1 - (bits.bit_length() - 1) + 1, 0)
    return i1, i0


def plan_neg_pow2(p: int, bits: int = 64) -> Pow2Plan:
    if p < 1:
        raise ValueError("p must be >= 1")
    pshift = p + bits
    if pshift >> bits:
        raise ValueError(f"exponent too large: need p <= 2^{bits} - {bits} - 1")
    i1, i0 = _chunk_bounds(pshift, bits)
    ichunk = pshift >> i0
    return Pow2Plan(p, bits, pshift, i1, i0, ichunk, 1 << (bits - ichunk - 1))


def neg_pow2_mod(p: int, ctx: MontCtx, trace: list | None = None) -> int:
    """2^-p mod q using only Montgomery squarings and mod-doublings.

    Each squaring contributes a factor 2^-b; running the ladder on p + b and
    doubling on the zero bits of p + b lands on 2^-p with no R-scaling step.
    """
    if p == 0:
        return 1
    plan = plan_neg_pow2(p, ctx.bits)
    q, bits = ctx.q, ctx.bits
    s = plan.seed
    if s >= q:
        s %= q
    flip = plan.complemented
    for i in range(plan.i0 - 1, -1, -1):
        s = mont_sqr(s, ctx)
        dbl = bool(flip >> i & 1)
        if dbl:
            s = mod_add(s, s, q, bits)
        if trace is not None:
            trace.append(LadderStep("MONT_SQR", i, dbl, s))
    return mod_add(s, s, q, bits)


def pos_pow2_mod(p: int, ctx: MontCtx, trace: list | None = None) -> int:
    """2^p mod q by the conventional Montgomery ladder.

    The seed R*2^chunk needs R^2 (one squaring of R^(3/2)) and one general
    multiply; a closing MMUL_ONE strips the R scaling.
    """
    if p < 0:
        raise ValueError("p must be >= 0")
    if p == 0:
        return 1 % ctx.q
    q, bits = ctx.q, ctx.bits

    def log(call, i, dbl, v):
        if trace is not None:
            trace.append(LadderStep(call, i, dbl, v))

    i1, i0 = _chunk_bounds(p, bits)
    chunk = p >> i0
    r32 = pow(2, 3 * bits // 2, q)
    r2 = mont_sqr(r32, ctx)
    log("MONT_SQR", None, False, r2)
    s = mont_mul(r2, 1 << chunk, ctx)
    log("MONT_MUL", None, False, s)
    for i in range(i0 - 1, -1, -1):
        s = mont_sqr(s, ctx)
        dbl = bool(p >> i & 1)
        if dbl:
            s = mod_add(s, s, q, bits)
        log("MONT_SQR", i, dbl, s)
    s = mmul_one(s, ctx)
    log("MMUL_ONE", None, False, s)
    return s


def _candidate_ctx(q) -> MontCtx:
    q = int(q)
    if q < 3 or not q & 1:
        raise InvalidModulusError(f"factor candidate must be odd and >= 3, got {q}")
    return make_ctx(q)


def mersenne_has_factor(p: int, q) -> bool:
    """True iff q divides 2^p - 1, i.e. 2^-p == 1 (mod q)."""
    return neg_pow2_mod(p, _candidate_ctx(q)) == 1


def fermat_has_factor(f: int, q) -> bool:
    """True iff q divides 2^(2^f) + 1, i.e. 2^-(2^f) == -1 (mod q)."""
    ctx = _candidate_ctx(q)
    return neg_pow2_mod(1 << f, ctx) == ctx.q - 1
