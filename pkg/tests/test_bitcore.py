import numpy as np
import pytest
from hypothesis import given, strategies as st

from rsdict import RawBitVector


def vec_145():
    return RawBitVector.from_positions(np.array([1, 4, 5]), 8)


def test_get_examples():
    v = vec_145()
    assert v.get(1) == 1
    assert v.get(0) == 0
    with pytest.raises(IndexError):
        v.get(8)


def test_popcount_range_examples():
    v = vec_145()
    assert v.popcount_range(0, 8) == 3
    assert v.popcount_range(4, 2) == 2
    assert v.popcount_range(3, 0) == 0
    with pytest.raises(IndexError):
        v.popcount_range(5, 4)


def test_popcount_equals_bit_sum():
    rng = np.random.default_rng(3)
    for n in (0, 1, 64, 65, 200, 1000):
        bits = rng.integers(0, 2, n).astype(np.uint8)
        v = RawBitVector.from_bits(bits)
        assert v.popcount_range(0, n) == int(bits.sum())
        assert [v.get(i) for i in range(n)] == bits.tolist()


@given(st.data())
def test_popcount_additive(data):
    n = data.draw(st.integers(1, 300))
    bits = data.draw(st.lists(st.integers(0, 1), min_size=n, max_size=n))
    v = RawBitVector.from_bits(np.array(bits, dtype=np.uint8))
    a = data.draw(st.integers(0, n))
    b = data.draw(st.integers(0, n - a))
    split = data.draw(st.integers(0, a + b))
    whole = v.popcount_range(a, b)
    assert whole == v.popcount_range(a, min(split, b)) + \
        v.popcount_range(a + min(split, b), b - min(split, b))


def test_tail_bits_are_zero():
    v = RawBitVector.from_positions(np.array([69]), 70)
    words = v.words
    assert int(words[1]) >> (70 - 64) == 0


def test_serialization_roundtrip():
    for n in (0, 1, 63, 64, 65, 1000):
        pos = np.arange(0, n, 3, dtype=np.int64)
        v = RawBitVector.from_positions(pos, n)
        blob = v.to_bytes()
        assert len(blob) == 8 + 8 * ((n + 63) // 64)
        w = RawBitVector.from_bytes(blob)
        assert v == w and w.to_bytes() == blob


def test_from_positions_validation():
    with pytest.raises(ValueError):
        RawBitVector.from_positions(np.array([3, 3]), 8)
    with pytest.raises(ValueError):
        RawBitVector.from_positions(np.array([5, 4]), 8)
    with pytest.raises(ValueError):
        RawBitVector.from_positions(np.array([8]), 8)


def test_positions_roundtrip():
    pos = np.array([0, 5, 63, 64, 99], dtype=np.int64)
    v = RawBitVector.from_positions(pos, 100)
    assert np.array_equal(v.positions(), pos)
    assert v.count() == 5
