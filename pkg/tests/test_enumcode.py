import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from rsdict import bbound_bits, build, entropy_bits, enum_decode, enum_encode, size_report
from rsdict.enumcode import binom_table, code_len_table, decode_tables
from tests.conftest import RefDict, assert_matches_reference, random_positions


def test_binom_table_pascal():
    c = binom_table()
    assert c[0, 0] == 1
    for t in range(1, 65):
        assert c[t, 0] == 1 and c[t, t] == 1
        for u in range(1, t):
            assert int(c[t, u]) == int(c[t - 1, u - 1]) + int(c[t - 1, u])


def test_encode_examples():
    assert enum_encode(0b0000, 4, 0) == 0
    assert code_len_table(4)[0] == 0
    assert enum_encode(0b0011, 4, 2) == 0
    assert enum_encode(0b1100, 4, 2) == 5


def test_decode_examples():
    assert enum_decode(0, 4, 0) == 0
    assert enum_decode(0, 4, 2) == 0b0011
    with pytest.raises(ValueError):
        enum_decode(6, 4, 2)


def test_encode_contract_errors():
    with pytest.raises(ValueError):
        enum_encode(0b0111, 4, 2)  # popcount mismatch
    with pytest.raises(ValueError):
        enum_encode(0b10000, 4, 1)  # bit above t


@given(st.integers(1, 20), st.data())
@settings(max_examples=60)
def test_bijection_random(t, data):
    block = data.draw(st.integers(0, (1 << t) - 1))
    u = bin(block).count("1")
    off = enum_encode(block, t, u)
    assert 0 <= off < math.comb(t, u)
    assert enum_decode(off, t, u) == block


def test_exhaustive_bijection_small():
    for t in range(0, 11):
        for u in range(t + 1):
            seen = set()
            for off in range(math.comb(t, u)):
                blk = enum_decode(off, t, u)
                assert bin(blk).count("1") == u
                assert enum_encode(blk, t, u) == off
                seen.add(blk)
            assert len(seen) == math.comb(t, u)


def test_decode_table_agrees_with_walk():
    taboff, tabdat = decode_tables(32, cap=65536)
    assert taboff[0] == -1 and taboff[32] == -1  # trivial classes short-circuit
    assert taboff[5] == -1                       # C(32,5) is above the cap
    for u in (1, 2, 3, 4, 28, 31):
        assert taboff[u] >= 0
        c = math.comb(32, u)
        for off in range(0, c, max(1, c // 97)):
            assert int(tabdat[int(taboff[u]) + off]) == enum_decode(off, 32, u)


def test_entropy_values():
    assert entropy_bits(1000, 0) == 0.0
    assert entropy_bits(1000, 1000) == 0.0
    n = 10 * (1 << 20)
    assert abs(entropy_bits(n, 0.01 * n) / n - 0.0808) < 1e-4
    assert abs(entropy_bits(n, 0.05 * n) / n - 0.2864) < 1e-4
    with pytest.raises(ValueError):
        entropy_bits(10, 11)


def test_bbound_values():
    assert bbound_bits(4, 2) == 3
    assert bbound_bits(10, 0) == 0
    with pytest.raises(ValueError):
        bbound_bits(4, 5)


def test_bbound_below_entropy_ceiling():
    for n in (8, 64, 300, 4096, 16384):
        for m in (0, 1, n // 100 + 1, n // 10, n // 2, n):
            assert bbound_bits(n, m) <= math.ceil(entropy_bits(n, m)) + (1 if 0 < m < n else 0)
            # the bound is tight up to the ceiling of the real entropy
            if 0 < m < n:
                assert bbound_bits(n, m) <= math.ceil(entropy_bits(n, m))


@pytest.mark.parametrize("density", [0.0, 0.01, 0.2, 0.5, 1.0])
def test_ent_reference_equivalence(density):
    n = 4096
    pos = random_positions(n, density, 23)
    d = build("ent", pos, n)
    assert_matches_reference(d, RefDict(pos, n))
    # equivalence with the plain structure on the same data
    p = build("plain", pos, n)
    xs = np.arange(n)
    assert np.array_equal(d.rank1_many(xs), p.rank1_many(xs))


def test_ent_select_example():
    d = build("ent", np.array([1, 4, 5]), 8)
    assert d.select1(2) == 4
    allz = build("ent", np.array([], dtype=np.int64), 512)
    assert allz.rank1(511) == 0


def test_code_stream_near_entropy():
    n = 1 << 16
    for density in (0.01, 0.05, 0.3):
        pos = random_positions(n, density, 7)
        d = build("ent", pos, n)
        rep = size_report(d)
        code = rep.parts["code"]
        lens = code_len_table(32)
        nsb = (n + 31) // 32
        # stream length is exactly the sum of the per-block code lengths,
        # which stays within one bit per block of the entropy
        assert code <= math.ceil(entropy_bits(n, len(pos))) + nsb
