import pytest
from hypothesis import given
from hypothesis import strategies as st

from natbdd.natbits import from_rbits, odd_part, to_rbits, two_adic_valuation

naturals = st.integers(min_value=0)


def test_to_rbits_examples():
    assert to_rbits(0) == []
    assert to_rbits(1) == [1]
    assert to_rbits(6) == [0, 1, 1]


def test_to_rbits_rejects_negatives():
    with pytest.raises(ValueError):
        to_rbits(-1)


def test_from_rbits_examples():
    assert from_rbits([]) == 0
    assert from_rbits([0, 1, 1]) == 6
    # non-canonical input (padding zeros at the top) is accepted
    assert from_rbits([1, 0, 0]) == 1


def test_from_rbits_rejects_non_bits():
    with pytest.raises(ValueError):
        from_rbits([0, 2])
    with pytest.raises(ValueError):
        from_rbits([1, "1"])


def test_roundtrip_exhaustive_to_2_pow_16():
    for n in range(1 << 16):
        assert from_rbits(to_rbits(n)) == n


def test_canonical_form_has_no_top_zeros():
    for n in range(1 << 12):
        bits = to_rbits(n)
        assert not bits or bits[-1] == 1


@given(naturals)
def test_roundtrip(n):
    assert from_rbits(to_rbits(n)) == n


def test_two_adic_valuation_examples():
    assert two_adic_valuation(1) == 0
    assert two_adic_valuation(12) == 2
    assert two_adic_valuation(2**40) == 40
    assert odd_part(2**40) == 1


def test_odd_part_examples():
    assert odd_part(1) == 1
    assert odd_part(12) == 3
    assert odd_part(42) == 21


def test_valuation_of_zero_is_an_error():
    with pytest.raises(ValueError):
        two_adic_valuation(0)
    with pytest.raises(ValueError):
        odd_part(0)


@given(st.integers(min_value=1))
def test_two_adic_factorization(n):
    odd = odd_part(n)
    assert odd % 2 == 1
    assert (1 << two_adic_valuation(n)) * odd == n
