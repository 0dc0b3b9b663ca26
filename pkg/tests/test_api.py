import numpy as np
import pytest

import rsdict
from rsdict import RawBitVector, build, load, size_report
from tests.conftest import RefDict, assert_matches_reference, random_positions


def test_build_from_bitvector_and_positions():
    pos = np.array([1, 4, 5], dtype=np.int64)
    via_pos = build("sarray", pos, 8)
    via_vec = build("sarray", RawBitVector.from_positions(pos, 8))
    assert via_pos.m == via_vec.m == 3
    assert via_pos.serialize() == via_vec.serialize()


def test_build_validation():
    with pytest.raises(ValueError):
        build("nope", np.array([1]), 8)
    with pytest.raises(ValueError):
        build("plain", np.array([1, 1]), 8)   # duplicate
    with pytest.raises(ValueError):
        build("plain", np.array([5, 2]), 8)   # unsorted
    with pytest.raises(ValueError):
        build("plain", np.array([1]), None)   # n required
    with pytest.raises(ValueError):
        build("vcode", np.array([1]), 8, p=7)


def test_size_report_identity():
    for kind in rsdict.KINDS:
        pos = random_positions(3000, 0.1, 4)
        rep = size_report(build(kind, pos, 3000))
        assert rep.total_bits == rep.payload_bits + rep.directory_bits
        assert rep.total_bits == sum(rep.parts.values())
        assert rep.pct_of_n == pytest.approx(100 * rep.total_bits / 3000)


def test_interface_equivalence_across_kinds():
    n = 2100
    pos = random_positions(n, 0.07, 10)
    ref = RefDict(pos, n)
    dicts = [build(kind, pos, n) for kind in rsdict.KINDS]
    for d in dicts:
        assert (d.n, d.m) == (n, len(pos))
        assert_matches_reference(d, ref)
    xs = np.arange(n)
    base = dicts[0].rank1_many(xs)
    for d in dicts[1:]:
        assert np.array_equal(d.rank1_many(xs), base)


def test_container_roundtrip_byte_identical():
    for kind in rsdict.KINDS:
        pos = random_positions(5000, 0.03, 8)
        d = build(kind, pos, 5000)
        blob = d.serialize()
        d2 = load(blob)
        assert type(d2) is type(d)
        assert d2.serialize() == blob
        assert_matches_reference(d2, RefDict(pos, 5000))


def test_container_rejects_corruption():
    d = build("plain", random_positions(2000, 0.2, 2), 2000)
    blob = bytearray(d.serialize())
    blob[len(blob) // 2] ^= 0x40
    with pytest.raises(ValueError, match="checksum"):
        load(bytes(blob))
    with pytest.raises(ValueError, match="magic"):
        load(b"NOTRIGHT" + bytes(blob[8:]))
    with pytest.raises(ValueError):
        load(bytes(blob[:20]))


def test_container_header_layout():
    d = build("plain", np.array([3]), 64)
    blob = d.serialize()
    assert blob[:8] == b"RSDICT01"
    assert int.from_bytes(blob[8:10], "little") == 1   # version
    assert blob[10] == 1                               # plain tag


def test_default_select0_agrees_with_native():
    n = 3000
    pos = random_positions(n, 0.4, 12)
    ref = RefDict(pos, n)
    for kind in rsdict.KINDS:
        d = build(kind, pos, n)
        for i in range(1, n - len(pos) + 1, 101):
            assert d.select0(i) == ref.select0(i)


def test_select0_native_flags():
    flags = {k: build(k, random_positions(1000, 0.3, 1), 1000).select0_native
             for k in rsdict.KINDS}
    assert flags["plain"] and flags["ent"] and flags["esp"] and flags["darray"]
    assert not flags["vcode"] and not flags["recrank"] and not flags["sarray"]
