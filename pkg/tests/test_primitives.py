import pytest
from hypothesis import given, strategies as st

from montdiv import MontCtx, mmul_one, mod_add, mont_mul, mont_sqr, mull, umul_lohi, umulh
from montdiv.errors import InvalidModulusError, UnsupportedWidthError
from montdiv.oracle import oracle_inverse, oracle_mul
from montdiv.primitives import join128, mod_sub, split128

from conftest import Q64, QINV64, Q128, QINV128

w64 = st.integers(0, 2**64 - 1)
w128 = st.integers(0, 2**128 - 1)
odd64 = st.integers(1, 2**63 - 1).map(lambda v: 2 * v + 1)
odd128 = st.integers(2**63, 2**127 - 1).map(lambda v: 2 * v + 1)


def test_widening_multiply_examples():
    assert umul_lohi(2**64 - 1, 2**64 - 1) == (1, 2**64 - 2)
    assert umul_lohi(0, 12345) == (0, 0)
    assert mull(Q64, QINV64) == 1
    assert umulh(1654746039858251761, 18061898331188349201) == 1620223851777327935


def test_width128_multiply_against_schoolbook():
    a, b = 2**128 - 1, 2**127 + 12345
    lo, hi = umul_lohi(a, b, 128)
    assert (hi << 128) | lo == oracle_mul(a, b)
    assert mull(Q128, QINV128, 128) == 1


@given(w64, w64)
def test_lohi_64_matches_product(x, y):
    lo, hi = umul_lohi(x, y)
    assert (hi << 64) | lo == oracle_mul(x, y)
    assert mull(x, y) == lo and umulh(x, y) == hi


@given(w128, w128)
def test_lohi_128_matches_product(x, y):
    lo, hi = umul_lohi(x, y, 128)
    assert (hi << 128) | lo == oracle_mul(x, y)


@given(w128)
def test_split_join_roundtrip(x):
    assert join128(*split128(x)) == x


def test_bad_width_rejected():
    with pytest.raises(UnsupportedWidthError):
        umul_lohi(1, 1, 32)


def test_ctx_invariants():
    with pytest.raises(InvalidModulusError):
        MontCtx(Q64 + 1, QINV64)
    with pytest.raises(InvalidModulusError):
        MontCtx(Q64, QINV64 + 2)
    with pytest.raises(InvalidModulusError):
        MontCtx(1, 1)


def _ctx(q, bits):
    return MontCtx(q, oracle_inverse(q, 1 << bits), bits)


@pytest.mark.parametrize("bits,strategy", [(64, odd64), (128, odd128)])
def test_montgomery_multiply_definition(bits, strategy):
    @given(strategy, st.data())
    def check(q, data):
        ctx = _ctx(q, bits)
        x = data.draw(st.integers(0, q - 1))
        y = data.draw(st.integers(0, q - 1))
        rinv = oracle_inverse(1 << bits, q)
        assert mont_mul(x, y, ctx) == x * y * rinv % q
        assert mont_sqr(x, ctx) == mont_mul(x, x, ctx)
        assert mmul_one(x, ctx) == x * rinv % q

    check()


@given(odd64, st.data())
def test_extended_input_range(q, data):
    # inputs need not be reduced when their product's high half stays below q
    ctx = _ctx(q, 64)
    x = data.draw(st.integers(0, 2**64 - 1))
    y = data.draw(st.integers(0, 2**64 - 1))
    assert mont_mul(x, y, ctx) == x * y * oracle_inverse(2**64, q) % q


@given(odd64, st.data())
def test_mod_add_sub(q, data):
    x = data.draw(st.integers(0, q - 1))
    y = data.draw(st.integers(0, q - 1))
    assert mod_add(x, y, q) == (x + y) % q
    assert mod_sub(x, y, q) == (x - y) % q


def test_mod_add_wraps_near_radix():
    q = 2**64 - 59
    assert mod_add(q - 1, q - 1, q) == q - 2
