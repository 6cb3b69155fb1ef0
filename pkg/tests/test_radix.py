import pytest
from hypothesis import given, settings, strategies as st

from montdiv import bitmap_census, build_bitmap, choose_variant, make_ctx, r2_mod_q, radix_power
from montdiv.errors import PreconditionError
from montdiv.oracle import oracle_powmod
from montdiv.radix import Variant, inverse_radix_power

from conftest import Q128, Q64


def test_r_squared(ctx64):
    assert r2_mod_q(ctx64) == 5575771501247148520


def test_bitmaps_of_example_exponents():
    b16 = build_bitmap(16)
    assert (b16.bits, b16.count, b16.p_final) == (0b01, 2, 5)
    b17 = build_bitmap(17)
    assert (b17.bits, b17.count, b17.p_final) == (0b00, 2, 5)


def test_bitmap_worst_and_best():
    assert build_bitmap(1026).popcount() == 9
    assert build_bitmap(1025).popcount() == 0


def test_bitmap_limits():
    with pytest.raises((ValueError, PreconditionError)):
        build_bitmap(2**32)


def test_power_16_trace(ctx64):
    trace = []
    assert radix_power(16, ctx64, trace) == 1547775041475743422
    assert trace == [
        (("MONT_SQR",), 3),
        (("MONT_SQR",), 5),
        (("MONT_SQR",), 9),
        (("MONT_SQR", "MMUL_ONE"), 16),
    ]


def test_power_17_trace(ctx64):
    trace = []
    assert radix_power(17, ctx64, trace) == 8502984233828494641
    assert trace == [(("MONT_SQR",), 3), (("MONT_SQR",), 5), (("MONT_SQR",), 9), (("MONT_SQR",), 17)]


@pytest.mark.parametrize("q", [Q64, Q128, 3, 2**64 - 59, 2**127 - 1])
def test_powers_against_oracle(q):
    ctx = make_ctx(q)
    for n in range(0, 4097):
        assert radix_power(n, ctx) == oracle_powmod(2, ctx.bits * n, q)


@settings(max_examples=100)
@given(st.integers(1, 2**127 - 1).map(lambda v: 2 * v + 1), st.integers(0, 4096))
def test_random_moduli(q, n):
    ctx = make_ctx(q)
    assert radix_power(n, ctx) == oracle_powmod(2, ctx.bits * n, q)


@given(st.integers(4, 2**32 - 1))
def test_operation_count_is_logarithmic(n):
    trace = []
    radix_power(n, make_ctx(Q64), trace)
    j = build_bitmap(n).count
    ops = sum(len(calls) for calls, _ in trace)
    assert ops <= 2 * (j + 1) + 2
    assert trace[-1][1] == n


@pytest.mark.parametrize("m", [0, 1, 2, 7, 100])
def test_inverse_powers(ctx64, m):
    assert inverse_radix_power(m, ctx64) == pow(2, -64 * m, Q64)


def test_variant_choice():
    assert choose_variant(16) is Variant.USE_B
    assert choose_variant(1025) is Variant.USE_B
    # 1027 drops one bitmap bit, which exactly pays for A's extra iteration: a tie
    assert build_bitmap(1027).popcount() + 1 == build_bitmap(1026).popcount()
    assert choose_variant(1026) is Variant.USE_B
    assert choose_variant(2) is Variant.USE_B


def test_small_census():
    mean, worst = bitmap_census(6, 7)
    d6 = abs(build_bitmap(7).popcount() - build_bitmap(6).popcount())
    d7 = abs(build_bitmap(8).popcount() - build_bitmap(7).popcount())
    assert mean == type(mean)(d6 + d7, 2)
    assert worst == max(d6, d7)


@given(st.integers(6, 2**32 - 2))
def test_successor_bitmap_drops_at_most_one_bit(n):
    assert build_bitmap(n).popcount() - build_bitmap(n + 1).popcount() <= 1
    assert choose_variant(n) is Variant.USE_B
