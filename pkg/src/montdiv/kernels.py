"""Compiled width-64 loops for the remainder and quotient passes.

Each folded kernel interleaves F independent carry chains in one loop body so
the multiplier latency of one chain overlaps the others. Segment j covers
words [j*s, (j+1)*s) with s = len(x) // F; callers pad x to a multiple of F.
"""
import numpy as np
from llvmlite import ir
from numba import njit, types
from numba.extending import intrinsic

_ONE = np.uint64(1)
_ZERO = np.uint64(0)


@intrinsic
def _umulh(typingctx, a, b):
    sig = types.uint64(types.uint64, types.uint64)

    def codegen(context, builder, signature, args):
        i128 = ir.IntType(128)
        p = builder.mul(builder.zext(args[0], i128), builder.zext(args[1], i128))
        return builder.trunc(builder.lshr(p, ir.Constant(i128, 64)), ir.IntType(64))

    return sig, codegen


@njit(cache=True)
def umulh64(a, b):
    return _umulh(np.uint64(a), np.uint64(b))


@njit(cache=True)
def hensel_a(x, q, qinv):
    cy = _ZERO
    for i in range(x.size):
        xi = x[i]
        bw = _ONE if cy > xi else _ZERO
        tmp = (xi - cy) * qinv + bw
        cy = _umulh(tmp, q)
    return cy


@njit(cache=True)
def hensel_a2(x, q, qinv):
    s = x.size // 2
    c0 = _ZERO
    c1 = _ZERO
    for i in range(s):
        a0 = x[i]
        a1 = x[i + s]
        b0 = _ONE if c0 > a0 else _ZERO
        b1 = _ONE if c1 > a1 else _ZERO
        t0 = (a0 - c0) * qinv + b0
        t1 = (a1 - c1) * qinv + b1
        c0 = _umulh(t0, q)
        c1 = _umulh(t1, q)
    return c0, c1


@njit(cache=True)
def hensel_a4(x, q, qinv):
    s = x.size // 4
    c0 = _ZERO
    c1 = _ZERO
    c2 = _ZERO
    c3 = _ZERO
    for i in range(s):
        a0 = x[i]
        a1 = x[i + s]
        a2 = x[i + 2 * s]
        a3 = x[i + 3 * s]
        b0 = _ONE if c0 > a0 else _ZERO
        b1 = _ONE if c1 > a1 else _ZERO
        b2 = _ONE if c2 > a2 else _ZERO
        b3 = _ONE if c3 > a3 else _ZERO
        t0 = (a0 - c0) * qinv + b0
        t1 = (a1 - c1) * qinv + b1
        t2 = (a2 - c2) * qinv + b2
        t3 = (a3 - c3) * qinv + b3
        c0 = _umulh(t0, q)
        c1 = _umulh(t1, q)
        c2 = _umulh(t2, q)
        c3 = _umulh(t3, q)
    return c0, c1, c2, c3


@njit(cache=True)
def hensel_b(x, q, qinv):
    """Residue-loop value ``lo`` for len(x) >= 2 (not reduced below q)."""
    n = x.size
    cy = _ZERO
    for i in range(n - 1):
        xi = x[i]
        bw = _ONE if cy > xi else _ZERO
        tmp = (xi - cy) * qinv + bw
        cy = _umulh(tmp, q)
    xi = x[n - 1]
    lo = xi - cy
    if cy > xi:
        lo += q
    return lo


@njit(cache=True)
def quotient_d(x, y, r, q, qinv):
    """Quotient loop into y; returns the final cy + bw (zero for a correct r)."""
    cy = np.uint64(r)
    bw = _ZERO
    for i in range(x.size):
        xi = x[i]
        tmp = xi - bw - cy
        bw = _ONE if tmp > xi else _ZERO
        tmp = tmp * qinv
        cy = _umulh(tmp, q)
        y[i] = tmp
    return cy + bw


@njit(cache=True)
def quotient_d2(x, y, r0, r1, q, qinv):
    s = x.size // 2
    c0 = np.uint64(r0)
    c1 = np.uint64(r1)
    w0 = _ZERO
    w1 = _ZERO
    for i in range(s):
        a0 = x[i]
        a1 = x[i + s]
        t0 = a0 - w0 - c0
        t1 = a1 - w1 - c1
        w0 = _ONE if t0 > a0 else _ZERO
        w1 = _ONE if t1 > a1 else _ZERO
        t0 = t0 * qinv
        t1 = t1 * qinv
        c0 = _umulh(t0, q)
        c1 = _umulh(t1, q)
        y[i] = t0
        y[i + s] = t1
    return c0 + w0, c1 + w1


@njit(cache=True)
def quotient_d4(x, y, r0, r1, r2, r3, q, qinv):
    s = x.size // 4
    c0 = np.uint64(r0)
    c1 = np.uint64(r1)
    c2 = np.uint64(r2)
    c3 = np.uint64(r3)
    w0 = _ZERO
    w1 = _ZERO
    w2 = _ZERO
    w3 = _ZERO
    for i in range(s):
        a0 = x[i]
        a1 = x[i + s]
        a2 = x[i + 2 * s]
        a3 = x[i + 3 * s]
        t0 = a0 - w0 - c0
        t1 = a1 - w1 - c1
        t2 = a2 - w2 - c2
        t3 = a3 - w3 - c3
        w0 = _ONE if t0 > a0 else _ZERO
        w1 = _ONE if t1 > a1 else _ZERO
        w2 = _ONE if t2 > a2 else _ZERO
        w3 = _ONE if t3 > a3 else _ZERO
        t0 = t0 * qinv
        t1 = t1 * qinv
        t2 = t2 * qinv
        t3 = t3 * qinv
        c0 = _umulh(t0, q)
        c1 = _umulh(t1, q)
        c2 = _umulh(t2, q)
        c3 = _umulh(t3, q)
        y[i] = t0
        y[i + s] = t1
        y[i + 2 * s] = t2
        y[i + 3 * s] = t3
    return c0 + w0, c1 + w1, c2 + w2, c3 + w3
