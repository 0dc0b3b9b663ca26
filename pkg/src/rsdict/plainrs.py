"""Verbatim bit vector plus a two-level rank directory; select by binary
search over the directory and a final word scan.

This is the uncompressed baseline (n bits of payload) and the dense-side
workhorse reused by the reduction chain and the dense select index.
"""
from __future__ import annotations

import struct

import numpy as np

from rsdict import _pack
from rsdict._backend import get_kernels
from rsdict.api import RankSelectDict
from rsdict.enumcode import _check_geometry, rank_directories


class PlainRankSelect(RankSelectDict):
    KIND = "plain"
    select0_native = True

    def __init__(self, positions, n, *, l=256, s=32, backend=None):
        _check_geometry(l, s)
        positions = np.asarray(positions, dtype=np.int64)
        self._k = get_kernels(backend)
        self._n = int(n)
        self._l = int(l)
        self._s = int(s)
        self._words = _pack.positions_to_words(positions, n)
        self._rl, self._rs, cum = rank_directories(self._words, n, l, s)
        self._m = int(cum[-1])

    @property
    def n(self):
        return self._n

    @property
    def m(self):
        return self._m

    @property
    def words(self):
        return self._words

    def _args(self):
        return (self._words, self._rl, self._rs, self._l, self._s)

    def rank1(self, x):
        self._check_rank_arg(x)
        return self._k.plain_rank1(*self._args(), x)

    def select1(self, i):
        self._check_select_arg(i)
        return self._k.plain_select1(*self._args(), self._n, self._m, i)

    def select0(self, i):
        if not 1 <= i <= self._n - self._m:
            raise ValueError(f"select0 rank {i} outside [1, {self._n - self._m}]")
        return self._k.plain_select0(*self._args(), self._n, self._m, i)

    def rank1_many(self, xs):
        out = np.empty(len(xs), dtype=np.int64)
        self._k.plain_rank1_many(*self._args(), np.asarray(xs, dtype=np.int64), out)
        return out

    def select1_many(self, qs):
        out = np.empty(len(qs), dtype=np.int64)
        self._k.plain_select1_many(*self._args(), self._n, self._m,
                                   np.asarray(qs, dtype=np.int64), out)
        return out

    def select0_many(self, qs):
        out = np.empty(len(qs), dtype=np.int64)
        self._k.plain_select0_many(*self._args(), self._n, self._m,
                                   np.asarray(qs, dtype=np.int64), out)
        return out

    # ---- sizes and serialization -----------------------------------------
    def _widths(self):
        return _pack.width_for(self._m), _pack.width_for(self._l - 1)

    def _size_parts(self):
        w_rl, w_rs = self._widths()
        return [
            ("rank_l", len(self._rl) * w_rl, False),
            ("rank_s", len(self._rs) * w_rs, False),
            ("bits", self._n, True),
        ]

    def _param_blob(self):
        w_rl, w_rs = self._widths()
        return struct.pack("<QQIIBB", self._n, self._m, self._l, self._s, w_rl, w_rs)

    def _sections(self):
        w_rl, w_rs = self._widths()
        return [
            (len(self._rl) * w_rl, _pack.pack_fixed(self._rl, w_rl)),
            (len(self._rs) * w_rs, _pack.pack_fixed(self._rs, w_rs)),
            (self._n, self._words),
        ]

    @classmethod
    def _deserialize(cls, params, sections, backend):
        n, m, l, s, w_rl, w_rs = struct.unpack("<QQIIBB", params)
        obj = cls.__new__(cls)
        obj._k = get_kernels(backend)
        obj._n, obj._m, obj._l, obj._s = int(n), int(m), int(l), int(s)
        nlb = (obj._n + l - 1) // l if obj._n else 0
        nsb = (obj._n + s - 1) // s if obj._n else 0
        obj._rl = _pack.unpack_fixed(sections[0][1], nlb + 1, w_rl).astype(np.uint64)
        obj._rs = _pack.unpack_fixed(sections[1][1], nsb, w_rs).astype(np.uint32)
        obj._words = sections[2][1]
        return obj
