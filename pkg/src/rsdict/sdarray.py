"""Dense/sparse pair: a dense-vector select index (darray) and the
high/low split sparse dictionary built on it (sarray).

darray groups the ones L at a time.  Per group it keeps the position of the
first one; a group whose span exceeds L2 stores every position explicitly,
otherwise every L3-th position is sampled relative to the group start and a
bounded word scan finishes the query.  A mirrored index over the complemented
bits serves select0.  rank delegates to the plain two-level directory.

sarray splits each element into w = ceil(lg(n/m)) low bits, stored packed,
and a high part unary-coded into a bit vector H of length m + number of
buckets (H[(x >> w) + i] = 1 for the i-th element, 0-based).  select1 is one
darray select on H plus arithmetic; rank1 seeds from select0 on H and scans
the bucket sequentially.
"""
from __future__ import annotations

import struct

import numpy as np

from rsdict import _pack
from rsdict._backend import get_kernels
from rsdict.api import RankSelectDict
from rsdict.enumcode import _check_geometry, rank_directories


class _SelectIndex:
    """One polarity of the darray select machinery."""

    __slots__ = ("count", "pl", "flags", "sl", "slbase", "ss", "ssbase")

    def __init__(self, positions, L, L2, L3):
        cnt = len(positions)
        self.count = cnt
        nb = (cnt + L - 1) // L
        self.pl = positions[::L].astype(np.int64) if cnt else np.zeros(0, np.int64)
        if cnt:
            spans = np.empty(nb, dtype=np.int64)
            spans[:-1] = np.diff(self.pl)
            spans[-1] = positions[-1] - self.pl[-1]
            flags = spans > L2
            # the final sample of the final group is its last one, so a span
            # of exactly L2 there would not fit the ceil(lg L2)-bit samples
            flags[-1] |= spans[-1] >= L2
            self.flags = flags.astype(np.uint8)
        else:
            self.flags = np.zeros(0, dtype=np.uint8)
        counts = np.minimum(np.arange(1, nb + 1) * L, cnt) - np.arange(nb) * L
        expl = self.flags.astype(bool)
        sl_counts = np.where(expl, counts, 0)
        self.slbase = np.concatenate([[0], np.cumsum(sl_counts)])[:-1].astype(np.int64)
        if expl.any():
            self.sl = np.concatenate(
                [positions[b * L : b * L + counts[b]] for b in np.flatnonzero(expl)]
            ).astype(np.int64)
        else:
            self.sl = np.zeros(0, dtype=np.int64)
        ss_counts = np.where(~expl, -(-counts // L3), 0)
        self.ssbase = np.concatenate([[0], np.cumsum(ss_counts)])[:-1].astype(np.int64)
        if cnt and (~expl).any():
            idx = np.arange(cnt, dtype=np.int64)
            samp = ((idx % L) % L3 == 0) & ~expl[idx // L]
            rel = positions[samp] - self.pl[(idx // L)[samp]]
            if len(rel) and rel.max() >= L2:
                raise AssertionError("compact-group sample exceeds the span threshold")
            self.ss = rel.astype(np.uint32)
        else:
            self.ss = np.zeros(0, dtype=np.uint32)

    def args(self):
        return (self.pl, self.flags, self.sl, self.slbase, self.ss, self.ssbase)

    def size_bits(self, poswidth, l2width):
        return (len(self.pl) * poswidth + len(self.flags)
                + len(self.sl) * poswidth + len(self.ss) * l2width)


def _pack_index(ix, poswidth, l2width):
    return [
        (len(ix.pl) * poswidth, _pack.pack_fixed(ix.pl, poswidth)),
        (len(ix.flags), _pack.pack_fixed(ix.flags, 1)),
        (len(ix.sl) * poswidth, _pack.pack_fixed(ix.sl, poswidth)),
        (len(ix.ss) * l2width, _pack.pack_fixed(ix.ss, l2width)),
    ]


def _unpack_index(sections, base, count, L, L2, L3, poswidth, l2width):
    ix = object.__new__(_SelectIndex)
    ix.count = count
    nb = (count + L - 1) // L
    ix.pl = _pack.unpack_fixed(sections[base][1], nb, poswidth).astype(np.int64)
    ix.flags = _pack.unpack_fixed(sections[base + 1][1], nb, 1).astype(np.uint8)
    nsl = sections[base + 2][0] // poswidth if poswidth else 0
    ix.sl = _pack.unpack_fixed(sections[base + 2][1], nsl, poswidth).astype(np.int64)
    nss = sections[base + 3][0] // l2width if l2width else 0
    ix.ss = _pack.unpack_fixed(sections[base + 3][1], nss, l2width).astype(np.uint32)
    counts = np.minimum(np.arange(1, nb + 1) * L, count) - np.arange(nb) * L
    expl = ix.flags.astype(bool)
    ix.slbase = np.concatenate([[0], np.cumsum(np.where(expl, counts, 0))])[:-1].astype(np.int64)
    ix.ssbase = np.concatenate([[0], np.cumsum(np.where(~expl, -(-counts // L3), 0))])[:-1].astype(np.int64)
    return ix


def _check_da_params(L, L2, L3):
    if L < 1 or L3 < 1 or L3 > L:
        raise ValueError(f"need 1 <= L3 <= L, got L={L}, L3={L3}")
    if L2 < 1:
        raise ValueError("L2 must be positive")


class DArray(RankSelectDict):
    KIND = "darray"
    select0_native = True

    def __init__(self, positions, n, *, L=1024, L2=65536, L3=32, l=256, s=32,
                 backend=None):
        _check_da_params(L, L2, L3)
        _check_geometry(l, s)
        positions = np.asarray(positions, dtype=np.int64)
        self._kern = get_kernels(backend)
        self._n, self._m = int(n), len(positions)
        self._L, self._L2, self._L3 = int(L), int(L2), int(L3)
        self._l, self._s = int(l), int(s)
        self._words = _pack.positions_to_words(positions, n)
        self._rl, self._rs, _ = rank_directories(self._words, n, l, s)
        self._ones = _SelectIndex(positions, L, L2, L3)
        zeros = np.flatnonzero(_pack.words_to_bits(self._words, n) == 0).astype(np.int64)
        self._zeros = _SelectIndex(zeros, L, L2, L3)

    @property
    def n(self):
        return self._n

    @property
    def m(self):
        return self._m

    def rank1(self, x):
        self._check_rank_arg(x)
        return self._kern.plain_rank1(self._words, self._rl, self._rs, self._l, self._s, x)

    def select1(self, i):
        self._check_select_arg(i)
        return self._kern.da_select(self._words, self._n, 0, *self._ones.args(),
                                    self._L, self._L2, self._L3, i)

    def select0(self, i):
        z = self._n - self._m
        if not 1 <= i <= z:
            raise ValueError(f"select0 rank {i} outside [1, {z}]")
        return self._kern.da_select(self._words, self._n, 1, *self._zeros.args(),
                                    self._L, self._L2, self._L3, i)

    def rank1_many(self, xs):
        out = np.empty(len(xs), dtype=np.int64)
        self._kern.plain_rank1_many(self._words, self._rl, self._rs, self._l, self._s,
                                    np.asarray(xs, dtype=np.int64), out)
        return out

    def select1_many(self, qs):
        out = np.empty(len(qs), dtype=np.int64)
        self._kern.da_select_many(self._words, self._n, 0, *self._ones.args(),
                                  self._L, self._L2, self._L3,
                                  np.asarray(qs, dtype=np.int64), out)
        return out

    def select0_many(self, qs):
        out = np.empty(len(qs), dtype=np.int64)
        self._kern.da_select_many(self._words, self._n, 1, *self._zeros.args(),
                                  self._L, self._L2, self._L3,
                                  np.asarray(qs, dtype=np.int64), out)
        return out

    # ---- sizes and serialization ---------------------------------------------
    def _widths(self):
        return (_pack.width_for(self._m), _pack.width_for(self._l - 1),
                _pack.width_for(max(0, self._n - 1)), _pack.width_for(self._L2 - 1))

    def _size_parts(self):
        w_rl, w_rs, w_pos, w_l2 = self._widths()
        return [
            ("rank_l", len(self._rl) * w_rl, False),
            ("rank_s", len(self._rs) * w_rs, False),
            ("select1_index", self._ones.size_bits(w_pos, w_l2), False),
            ("select0_index", self._zeros.size_bits(w_pos, w_l2), False),
            ("bits", self._n, True),
        ]

    def _param_blob(self):
        w_rl, w_rs, w_pos, w_l2 = self._widths()
        return struct.pack("<QQIIIIIBBBB", self._n, self._m, self._L, self._L2,
                           self._L3, self._l, self._s, w_rl, w_rs, w_pos, w_l2)

    def _sections(self):
        w_rl, w_rs, w_pos, w_l2 = self._widths()
        out = [
            (self._n, self._words),
            (len(self._rl) * w_rl, _pack.pack_fixed(self._rl, w_rl)),
            (len(self._rs) * w_rs, _pack.pack_fixed(self._rs, w_rs)),
        ]
        out += _pack_index(self._ones, w_pos, w_l2)
        out += _pack_index(self._zeros, w_pos, w_l2)
        return out

    @classmethod
    def _deserialize(cls, params, sections, backend):
        (n, m, L, L2, L3, l, s, w_rl, w_rs, w_pos, w_l2) = struct.unpack(
            "<QQIIIIIBBBB", params)
        obj = cls.__new__(cls)
        obj._kern = get_kernels(backend)
        obj._n, obj._m = int(n), int(m)
        obj._L, obj._L2, obj._L3 = int(L), int(L2), int(L3)
        obj._l, obj._s = int(l), int(s)
        obj._words = sections[0][1]
        nlb = (obj._n + l - 1) // l if obj._n else 0
        nsb = (obj._n + s - 1) // s if obj._n else 0
        obj._rl = _pack.unpack_fixed(sections[1][1], nlb + 1, w_rl).astype(np.uint64)
        obj._rs = _pack.unpack_fixed(sections[2][1], nsb, w_rs).astype(np.uint32)
        obj._ones = _unpack_index(sections, 3, obj._m, obj._L, obj._L2, obj._L3,
                                  w_pos, w_l2)
        obj._zeros = _unpack_index(sections, 7, obj._n - obj._m, obj._L, obj._L2,
                                   obj._L3, w_pos, w_l2)
        return obj


class SArray(RankSelectDict):
    KIND = "sarray"

    def __init__(self, positions, n, *, L=1024, L2=65536, L3=32, backend=None):
        _check_da_params(L, L2, L3)
        positions = np.asarray(positions, dtype=np.int64)
        self._kern = get_kernels(backend)
        self._n, self._m = int(n), len(positions)
        self._L, self._L2, self._L3 = int(L), int(L2), int(L3)
        m = self._m
        if m == 0:
            self._w = 0
            self._lo = _pack.alloc_words(0)
            self._hlen = 0
            self._hwords = _pack.alloc_words(0)
            self._hones = _SelectIndex(np.zeros(0, np.int64), L, L2, L3)
            self._hzeros = _SelectIndex(np.zeros(0, np.int64), L, L2, L3)
            return
        w = 0
        while (m << w) < n:
            w += 1
        self._w = w
        self._lo = _pack.pack_fixed(positions & ((1 << w) - 1), w)
        highs = positions >> w
        hpos = highs + np.arange(m, dtype=np.int64)
        buckets = ((n - 1) >> w) + 1
        self._hlen = m + buckets
        self._hwords = _pack.positions_to_words(hpos, self._hlen)
        self._hones = _SelectIndex(hpos, L, L2, L3)
        zpos = np.flatnonzero(_pack.words_to_bits(self._hwords, self._hlen) == 0)
        self._hzeros = _SelectIndex(zpos.astype(np.int64), L, L2, L3)

    @property
    def n(self):
        return self._n

    @property
    def m(self):
        return self._m

    def rank1(self, x):
        self._check_rank_arg(x)
        if self._m == 0:
            return 0
        return self._kern.sa_rank1(self._hwords, self._hlen, *self._hzeros.args(),
                                   self._L, self._L2, self._L3, self._lo, self._w,
                                   self._m, x)

    def select1(self, i):
        self._check_select_arg(i)
        return self._kern.sa_select1(self._hwords, self._hlen, *self._hones.args(),
                                     self._L, self._L2, self._L3, self._lo, self._w, i)

    def select0(self, i):
        z = self._n - self._m
        if not 1 <= i <= z:
            raise ValueError(f"select0 rank {i} outside [1, {z}]")
        if self._m == 0:
            return i - 1
        return self._kern.sa_select0(self._hwords, self._hlen, *self._hzeros.args(),
                                     self._L, self._L2, self._L3, self._lo, self._w,
                                     self._n, self._m, i)

    def rank1_many(self, xs):
        xs = np.asarray(xs, dtype=np.int64)
        if self._m == 0:
            return np.zeros(len(xs), dtype=np.int64)
        out = np.empty(len(xs), dtype=np.int64)
        self._kern.sa_rank1_many(self._hwords, self._hlen, *self._hzeros.args(),
                                 self._L, self._L2, self._L3, self._lo, self._w,
                                 self._m, xs, out)
        return out

    def select1_many(self, qs):
        out = np.empty(len(qs), dtype=np.int64)
        self._kern.sa_select1_many(self._hwords, self._hlen, *self._hones.args(),
                                   self._L, self._L2, self._L3, self._lo, self._w,
                                   np.asarray(qs, dtype=np.int64), out)
        return out

    def select0_many(self, qs):
        qs = np.asarray(qs, dtype=np.int64)
        if self._m == 0:
            return qs - 1
        out = np.empty(len(qs), dtype=np.int64)
        self._kern.sa_select0_many(self._hwords, self._hlen, *self._hzeros.args(),
                                   self._L, self._L2, self._L3, self._lo, self._w,
                                   self._n, self._m, qs, out)
        return out

    # ---- sizes and serialization ---------------------------------------------
    def _widths(self):
        return (_pack.width_for(max(0, self._hlen - 1)), _pack.width_for(self._L2 - 1))

    def _size_parts(self):
        w_pos, w_l2 = self._widths()
        return [
            ("low_bits", self._m * self._w, True),
            ("high_bits", self._hlen, True),
            ("select1_index", self._hones.size_bits(w_pos, w_l2), False),
            ("select0_index", self._hzeros.size_bits(w_pos, w_l2), False),
        ]

    def _param_blob(self):
        w_pos, w_l2 = self._widths()
        return struct.pack("<QQIIIIBBB", self._n, self._m, self._L, self._L2,
                           self._L3, self._hlen, self._w, w_pos, w_l2)

    def _sections(self):
        w_pos, w_l2 = self._widths()
        out = [
            (self._m * self._w, self._lo),
            (self._hlen, self._hwords),
        ]
        out += _pack_index(self._hones, w_pos, w_l2)
        out += _pack_index(self._hzeros, w_pos, w_l2)
        return out

    @classmethod
    def _deserialize(cls, params, sections, backend):
        n, m, L, L2, L3, hlen, w, w_pos, w_l2 = struct.unpack("<QQIIIIBBB", params)
        obj = cls.__new__(cls)
        obj._kern = get_kernels(backend)
        obj._n, obj._m = int(n), int(m)
        obj._L, obj._L2, obj._L3 = int(L), int(L2), int(L3)
        obj._hlen, obj._w = int(hlen), int(w)
        obj._lo = sections[0][1]
        obj._hwords = sections[1][1]
        obj._hones = _unpack_index(sections, 2, obj._m, obj._L, obj._L2, obj._L3,
                                   w_pos, w_l2)
        obj._hzeros = _unpack_index(sections, 6, obj._hlen - obj._m, obj._L,
                                    obj._L2, obj._L3, w_pos, w_l2)
        return obj
