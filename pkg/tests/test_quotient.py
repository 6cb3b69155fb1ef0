import pytest
from hypothesis import given, strategies as st

from montdiv import BigUint, div_rem, folded_quotient, make_ctx, partial_remainder_cascade, quotient, quotient_low_words
from montdiv.errors import InconsistentRemainderError
from montdiv.oracle import oracle_divmod
from montdiv.quotient import quotient_digits
from montdiv.radix import radix_power
from montdiv.remainder import fold_scaled_remainder

from conftest import Q128, Q64, R977, X128, X977

QUOTIENT_WORDS = [
    6364180061714936936, 4771973621301622518, 694724920058399436, 7462732776264284083,
    15651191667900344027, 684779273839653350, 8910056920539811989, 6625598233439971816,
    13578887251066731535, 7249027741998019233, 11772736962114281085, 15530135107470554958,
    6468054066637286049, 8083046564352798341, 147809, 0,
]


def test_serial_quotient_words(ctx64):
    assert quotient(X977, R977, ctx64).tolist() == QUOTIENT_WORDS
    assert quotient(X977, R977, ctx64, check=True).tolist() == QUOTIENT_WORDS


@pytest.mark.parametrize("fold", [2, 4])
def test_folded_quotient_words(ctx64, fold):
    y, r = folded_quotient(X977, ctx64, fold)
    assert y.tolist() == QUOTIENT_WORDS
    assert r == R977


def test_width128_example(ctx128):
    r = 130392762589805994888402779408669015
    y = quotient(X128, r, ctx128)
    assert int(y) == 678655403024582752
    x_minus_r = X128 - r
    assert x_minus_r == 153238840814299457210250380295598336874033710165951072
    low = x_minus_r % 2**128
    assert low == 336620864253378130591640020431239938656
    assert low * ctx128.qinv % 2**128 == 678655403024582752
    # the single 64-bit word identity: low words of x - r times low word of qinv
    assert 17701223841397244512 * 18061898331188349201 % 2**64 == 678655403024582752
    assert int(quotient_low_words(X128, r, ctx128, 1)) == 678655403024582752


def test_low_words_full_width(ctx64):
    assert quotient_low_words(X977, R977, ctx64, 16).tolist() == QUOTIENT_WORDS
    assert quotient_low_words(X977, R977, ctx64, 3).tolist() == QUOTIENT_WORDS[:3]


def test_cascade_bottom_is_full_remainder(ctx64):
    for fold in (2, 4):
        carries = fold_scaled_remainder(X977, ctx64, fold)
        # Montgomery-scaled segment power R^(s+1)
        weight = radix_power(16 // fold + 1, ctx64)
        rems = partial_remainder_cascade(carries, ctx64, weight)
        assert len(rems) == fold
        assert rems[0] == R977
        seg = 64 * 16 // fold
        for j, rj in enumerate(rems):
            assert rj == (X977 >> (seg * j)) % Q64


def test_wrong_remainder_detected(ctx64):
    with pytest.raises(InconsistentRemainderError):
        quotient(X977, R977 + 1, ctx64)
    with pytest.raises(InconsistentRemainderError):
        quotient(X977, Q64, ctx64)


def test_low_half_identity(ctx64):
    # every emitted word satisfies mull(y_i, q) == borrow-adjusted x_i
    digits = BigUint.from_int(X977).digits()
    ys, carry = quotient_digits(digits, R977, ctx64, check=True)
    assert carry == 0 and ys == QUOTIENT_WORDS


@pytest.mark.parametrize("d,x", [(12, 100), (2**70, 3**90), (6, 2**200 + 5), (2**64 * Q64, X977)])
def test_even_divisors(d, x):
    y, r = div_rem(x, d)
    assert (int(y), int(r)) == divmod(x, d)


def test_power_of_two_divisor_is_shift():
    y, r = div_rem(X977, 2**10)
    assert int(y) == X977 >> 10 and int(r) == 1023


@given(st.integers(0, 2**3000), st.integers(3, 2**128 - 1).filter(lambda q: q & 1), st.sampled_from([1, 2, 4]))
def test_div_rem_matches_oracle(x, q, fold):
    y, r = div_rem(x, q, fold)
    assert (int(y), int(r)) == oracle_divmod(x, q)


@given(st.integers(0, 2**1000), st.integers(3, 2**64 - 1).filter(lambda q: q & 1), st.data())
def test_low_words_with_known_width(x, q, data):
    ctx = make_ctx(q)
    want, r = oracle_divmod(x, q)
    m = max(1, -(-want.bit_length() // ctx.bits))
    assert int(quotient_low_words(x, r, ctx, m)) == want
