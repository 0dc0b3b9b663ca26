import numpy as np
import pytest

from rsdict import build
from tests.conftest import RefDict, assert_matches_reference, random_positions


def build_145(**kw):
    return build("plain", np.array([1, 4, 5]), 8, **kw)


def test_rank1_examples():
    d = build_145()
    assert d.rank1(0) == 0
    assert d.rank1(4) == 2
    assert d.rank1(7) == 3
    with pytest.raises(IndexError):
        d.rank1(8)
    with pytest.raises(IndexError):
        d.rank1(-1)


def test_select1_examples():
    d = build_145()
    assert d.select1(1) == 1
    assert d.select1(3) == 5
    with pytest.raises(ValueError):
        d.select1(4)
    with pytest.raises(ValueError):
        d.select1(0)


def test_rank0_select0_examples():
    d = build_145()
    assert d.rank0(4) == 3
    assert d.select0(1) == 0
    assert d.rank0(0) == 1


def test_select_rank_inverse():
    pos = random_positions(3000, 0.3, 2)
    d = build("plain", pos, 3000)
    for i in range(1, d.m + 1, 7):
        x = d.select1(i)
        assert d.rank1(x) == i
        assert pos[i - 1] == x
    for x in range(0, 3000, 11):
        r = d.rank1(x)
        if r >= 1:
            assert d.select1(r) <= x
        assert d.rank1(x) + d.rank0(x) == x + 1


@pytest.mark.parametrize("density", [0.0, 0.001, 0.05, 0.5, 0.95, 1.0])
@pytest.mark.parametrize("n", [1, 100, 1024, 4096])
def test_reference_equivalence(n, density):
    pos = random_positions(n, density, 17)
    d = build("plain", pos, n)
    assert_matches_reference(d, RefDict(pos, n))


def test_custom_block_geometry():
    pos = random_positions(2000, 0.2, 5)
    for l, s in ((64, 8), (512, 64), (128, 16)):
        d = build("plain", pos, 2000, l=l, s=s)
        assert_matches_reference(d, RefDict(pos, 2000))
    with pytest.raises(ValueError):
        build("plain", pos, 2000, l=100, s=24)  # s must divide l
    with pytest.raises(ValueError):
        build("plain", pos, 2000, l=64, s=12)   # s must be a multiple of 8


def test_empty_and_full_vectors():
    d = build("plain", np.array([], dtype=np.int64), 256)
    assert d.m == 0 and d.rank1(255) == 0
    with pytest.raises(ValueError):
        d.select1(1)
    full = build("plain", np.arange(256), 256)
    assert full.rank1(255) == 256 and full.select1(256) == 255
    with pytest.raises(ValueError):
        full.select0(1)


def test_payload_is_exactly_n():
    d = build("plain", random_positions(5000, 0.3, 1), 5000)
    parts = dict((name, bits) for name, bits, is_p in d._size_parts() if is_p)
    assert parts == {"bits": 5000}
