"""Command-line front end.

Exit status: 0 on success, 1 when ``isdiv`` finds no divisibility, 2 on
usage, parse, or argument errors.
"""
from __future__ import annotations

import argparse
import os
import re
import sys
from pathlib import Path

from .bench import CSV_HEADER, run_bench, to_csv
from .biguint import BigUint
from .errors import MontDivError
from .inverse import make_ctx
from .limbfile import LimbFileError, read_limbs, write_limbs
from .pow2 import fermat_has_factor, mersenne_has_factor, neg_pow2_mod, pos_pow2_mod
from .quotient import div_rem
from .radix import bitmap_census
from .remainder import FOLDS, divides, remainder

_POW_EXPR = re.compile(r"^2\^(\d+)(?:([+-])(\d+))?$")


def parse_biguint(text: str) -> BigUint:
    """Decimal, 0x-hex, ``2^K+c`` / ``2^K-c``, or the path of a limb file."""
    s = text.strip().replace(" ", "")
    m = _POW_EXPR.match(s)
    if m:
        k = int(m.group(1))
        c = int(m.group(3) or 0)
        if c >> 64:
            raise ValueError(f"constant {c} in {text!r} exceeds 64 bits")
        value = (1 << k) + c if m.group(2) != "-" else (1 << k) - c
        if value < 0:
            raise ValueError(f"{text!r} is negative")
        return BigUint.from_int(value)
    if re.fullmatch(r"0[xX][0-9a-fA-F]+", s):
        return BigUint.from_int(int(s, 16))
    if re.fullmatch(r"[0-9]+", s):
        return BigUint.from_int(int(s))
    if Path(text).is_file():
        return read_limbs(text)
    raise ValueError(f"cannot parse {text!r} as a number or limb file")


def _fmt(v, hex_out: bool) -> str:
    v = int(v)
    return hex(v) if hex_out else str(v)


def _cmd_isdiv(a) -> int:
    ok = divides(a.x, int(a.q), fold=a.fold)
    print("true" if ok else "false")
    return 0 if ok else 1


def _cmd_rem(a) -> int:
    print(_fmt(remainder(a.x, int(a.q), fold=a.fold), a.hex))
    return 0


def _cmd_divmod(a) -> int:
    y, r = div_rem(a.x, int(a.q), fold=a.fold)
    print(f"remainder {_fmt(r, a.hex)}")
    print(f"quotient {_fmt(y, a.hex)}")
    words = y.tolist()
    while len(words) > 1 and words[-1] == 0 and len(words) > len(a.x):
        words.pop()
    print(f"quotient_words {len(words)}")
    for i, w in enumerate(words):
        print(f"y {i} {_fmt(w, a.hex)}")
    if a.quotient_out:
        write_limbs(a.quotient_out, y)
    return 0


def _cmd_pow2(a) -> int:
    ctx = make_ctx(int(a.q))
    fn = neg_pow2_mod if a.inverse else pos_pow2_mod
    print(_fmt(fn(a.p, ctx), a.hex))
    return 0


def _cmd_mersenne(a) -> int:
    print("true" if mersenne_has_factor(a.p, int(a.q)) else "false")
    return 0


def _cmd_fermat(a) -> int:
    print("true" if fermat_has_factor(a.f, int(a.q)) else "false")
    return 0


def _cmd_census(a) -> int:
    mean, worst = bitmap_census(a.n_min, a.n_max)
    print(f"mean {mean.numerator}/{mean.denominator}")
    print(f"mean_float {float(mean):.10f}")
    print(f"max_diff {worst}")
    return 0


def _cmd_bench(a) -> int:
    seed = a.seed
    if seed is None:
        seed = int(os.environ.get("MONTDIV_SEED", "0"))
    q = int(a.q) if a.q is not None else None
    rows = run_bench(a.words, a.trials, seed, q, a.folds)
    print(CSV_HEADER)
    for row in rows:
        print(to_csv(row))
    return 0


def _number(text: str) -> BigUint:
    try:
        return parse_biguint(text)
    except (ValueError, LimbFileError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="montdiv", description="Right-to-left Montgomery long division.")
    sub = p.add_subparsers(dest="command", required=True)

    def division_args(sp, with_hex=True):
        sp.add_argument("--x", type=_number, required=True, help="dividend")
        sp.add_argument("--q", type=_number, required=True, help="divisor")
        sp.add_argument("--fold", type=int, choices=FOLDS, default=1)
        if with_hex:
            sp.add_argument("--hex", action="store_true")

    sp = sub.add_parser("isdiv", help="does q divide x")
    division_args(sp, with_hex=False)
    sp.set_defaults(func=_cmd_isdiv)

    sp = sub.add_parser("rem", help="x mod q")
    division_args(sp)
    sp.set_defaults(func=_cmd_rem)

    sp = sub.add_parser("divmod", help="quotient and remainder")
    division_args(sp)
    sp.add_argument("--quotient-out", metavar="PATH", help="also write the quotient as a limb file")
    sp.set_defaults(func=_cmd_divmod)

    sp = sub.add_parser("pow2", help="2^p or 2^-p mod q")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--q", type=_number, required=True)
    sp.add_argument("--inverse", action="store_true", help="compute 2^-p")
    sp.add_argument("--hex", action="store_true")
    sp.set_defaults(func=_cmd_pow2)

    sp = sub.add_parser("mersenne", help="does q divide 2^p - 1")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--q", type=_number, required=True)
    sp.set_defaults(func=_cmd_mersenne)

    sp = sub.add_parser("fermat", help="does q divide 2^(2^f) + 1")
    sp.add_argument("--f", type=int, required=True)
    sp.add_argument("--q", type=_number, required=True)
    sp.set_defaults(func=_cmd_fermat)

    sp = sub.add_parser("census", help="powering-bitmap popcount statistics")
    sp.add_argument("--n-min", type=int, default=6)
    sp.add_argument("--n-max", type=int, default=1 << 20)
    sp.set_defaults(func=_cmd_census)

    sp = sub.add_parser("bench", help="throughput CSV for F in {1,2,4}")
    sp.add_argument("--words", type=int, default=1 << 20)
    sp.add_argument("--trials", type=int, default=5)
    sp.add_argument("--seed", type=int, default=None, help="PRNG seed (default: $MONTDIV_SEED or 0)")
    sp.add_argument("--q", type=_number, default=None, help="divisor (default: random 64-bit odd)")
    sp.add_argument("--folds", type=int, nargs="+", choices=FOLDS, default=list(FOLDS))
    sp.set_defaults(func=_cmd_bench)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (MontDivError, LimbFileError, ValueError) as exc:
        print(f"montdiv: error: {exc}", file=sys.stderr)
        return 2
