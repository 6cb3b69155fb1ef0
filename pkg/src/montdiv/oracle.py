"""Slow schoolbook arithmetic used only to check the fast paths.

Nothing here touches the Montgomery machinery; values are split into
base-2^64 digits locally and processed most-significant digit first.
"""
from __future__ import annotations

_BASE_BITS = 64
_MASK = (1 << _BASE_BITS) - 1


def _digits(v: int) -> list[int]:
    out = []
    while v:
        out.append(v & _MASK)
        v >>= _BASE_BITS
    return out or [0]


def _undigits(ds) -> int:
    v = 0
    for d in reversed(ds):
        v = (v << _BASE_BITS) | d
    return v


def oracle_divmod(x, d) -> tuple[int, int]:
    """Left-to-right long division, one base-2^64 quotient digit per step."""
    x, d = int(x), int(d)
    if d <= 0:
        raise ZeroDivisionError("oracle_divmod by zero")
    if x < 0:
        raise ValueError("negative dividend")
    qd = []
    rem = 0
    for digit in reversed(_digits(x)):
        rem = (rem << _BASE_BITS) | digit
        # rem < d * 2^64 here, so the trial digit fits one word
        t, rem = divmod(rem, d)
        qd.append(t)
    qd.reverse()
    return _undigits(qd), rem


def oracle_mul(x, y) -> int:
    """Grade-school product over 64-bit digits."""
    xs, ys = _digits(int(x)), _digits(int(y))
    acc = [0] * (len(xs) + len(ys) + 1)
    for i, a in enumerate(xs):
        carry = 0
        for j, b in enumerate(ys):
            t = acc[i + j] + a * b + carry
            acc[i + j] = t & _MASK
            carry = t >> _BASE_BITS
        k = i + len(ys)
        while carry:
            t = acc[k] + carry
            acc[k] = t & _MASK
            carry = t >> _BASE_BITS
            k += 1
    return _undigits(acc)


def oracle_powmod(base, exp, m) -> int:
    """Right-to-left square-and-multiply with oracle_divmod reductions."""
    base, exp, m = int(base), int(exp), int(m)
    if m <= 0:
        raise ZeroDivisionError("modulus must be positive")
    result = oracle_divmod(1, m)[1]
    base = oracle_divmod(base, m)[1]
    while exp:
        if exp & 1:
            result = oracle_divmod(oracle_mul(result, base), m)[1]
        base = oracle_divmod(oracle_mul(base, base), m)[1]
        exp >>= 1
    return result


def oracle_inverse(a, m) -> int:
    """a^-1 mod m by the extended Euclidean algorithm."""
    a, m = int(a) % int(m), int(m)
    r0, r1, s0, s1 = m, a, 0, 1
    while r1:
        t = r0 // r1
        r0, r1 = r1, r0 - t * r1
        s0, s1 = s1, s0 - t * s1
    if r0 != 1:
        raise ValueError(f"{a} has no inverse mod {m}")
    return s0 % m
