"""Right-to-left long division built on the Montgomery multiply.

Remainders come from Hensel-style carry loops scaled back by a radix power,
quotients from a second loop seeded with the remainder. Both loops fold into
F interleaved chains for instruction-level parallelism.
"""
from .biguint import BigUint
from .errors import (
    InconsistentRemainderError,
    InvalidModulusError,
    MontDivError,
    PreconditionError,
    UnsupportedFoldError,
    UnsupportedWidthError,
)
from .inverse import DivisorSpec, make_ctx, make_divisor, qinv_extend, qinv_newton64, qinv_seed
from .pow2 import fermat_has_factor, mersenne_has_factor, neg_pow2_mod, pos_pow2_mod
from .primitives import MontCtx, mmul_one, mod_add, mont_mul, mont_sqr, mull, umul_lohi, umulh
from .quotient import div_rem, folded_quotient, partial_remainder_cascade, quotient, quotient_low_words
from .radix import bitmap_census, build_bitmap, choose_variant, r2_mod_q, radix_power
from .remainder import (
    ScaledRemainder,
    combine_partials,
    divides,
    fold_scaled_remainder,
    is_div,
    remainder,
    scaled_remainder_a,
    scaled_remainder_b,
)

__all__ = [
    "BigUint", "DivisorSpec", "MontCtx", "ScaledRemainder",
    "MontDivError", "InvalidModulusError", "UnsupportedWidthError", "PreconditionError",
    "UnsupportedFoldError", "InconsistentRemainderError",
    "umul_lohi", "mull", "umulh", "mont_mul", "mont_sqr", "mmul_one", "mod_add",
    "qinv_seed", "qinv_newton64", "qinv_extend", "make_ctx", "make_divisor",
    "is_div", "divides", "scaled_remainder_a", "scaled_remainder_b", "fold_scaled_remainder",
    "combine_partials", "remainder",
    "r2_mod_q", "build_bitmap", "radix_power", "choose_variant", "bitmap_census",
    "quotient", "quotient_low_words", "partial_remainder_cascade", "folded_quotient", "div_rem",
    "neg_pow2_mod", "pos_pow2_mod", "mersenne_has_factor", "fermat_has_factor",
]
