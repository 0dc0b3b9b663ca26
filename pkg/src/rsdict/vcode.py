"""Vertical code: the gap sequence stored as per-block bit planes.

Gaps g[0] = P_1, g[i] = P_{i+1} - P_i - 1 are grouped p at a time (p a
multiple of 8 so planes are whole bytes).  Block b keeps its base position
S[b] = P_{b*p} (virtual P_0 = -1), the plane count T[b] (bits of the largest
gap in the block), and T[b] planes of p bits; plane j holds bit j of every
gap.  select1 masks each plane to the first q+1 gaps and popcounts, so its
cost is T[b] byte operations; rank1 binary-searches select1.

Plane offsets are either stored per block ("full", one u32 each) or anchored
every 32 blocks and re-derived by summing T ("sampled", the compact option).
"""
from __future__ import annotations

import struct

import numpy as np

from rsdict import _pack
from rsdict._backend import get_kernels
from rsdict.api import RankSelectDict

ANCHOR_EVERY = 32
OFFSET_MODES = ("full", "sampled")


class VerticalCode(RankSelectDict):
    KIND = "vcode"

    def __init__(self, positions, n, *, p=8, offset_mode="full", backend=None):
        if p < 8 or p % 8:
            raise ValueError(f"p must be a positive multiple of 8, got {p}")
        if offset_mode not in OFFSET_MODES:
            raise ValueError(f"offset_mode must be one of {OFFSET_MODES}")
        if n >= 1 << 32:
            raise ValueError("vertical code stores 32-bit base positions; n < 2**32")
        positions = np.asarray(positions, dtype=np.int64)
        self._kern = get_kernels(backend)
        self._n = int(n)
        self._m = len(positions)
        self._p = int(p)
        self._mode = offset_mode
        nb = (self._m + p - 1) // p
        gaps = np.zeros(nb * p, dtype=np.int64)
        if self._m:
            gaps[: self._m] = np.diff(positions, prepend=-1) - 1
        g2 = gaps.reshape(nb, p)
        maxg = g2.max(axis=1) if nb else np.zeros(0, dtype=np.int64)
        t = np.zeros(nb, dtype=np.int64)
        nz = maxg > 0
        t[nz] = np.frexp(maxg[nz].astype(np.float64))[1]
        # frexp is exact below 2**53, well above the 32-bit position cap
        self._t = t.astype(np.uint8)
        sarr = np.empty(nb, dtype=np.int64)
        if nb:
            sarr[0] = -1
            sarr[1:] = positions[p - 1 :: p][: nb - 1]
        self._sarr = sarr
        pbytes = p // 8
        starts = np.concatenate([[0], np.cumsum(t, dtype=np.int64)]) * pbytes
        total = int(starts[-1]) if nb else 0
        planes = np.zeros(total + 8, dtype=np.uint8)  # 8 guard bytes
        tmax = int(t.max()) if nb else 0
        for j in range(tmax):
            rows = np.flatnonzero(t > j)
            packed = np.packbits((g2[rows] >> j) & 1, axis=1, bitorder="little")
            dest = starts[rows] + j * pbytes
            planes[(dest[:, None] + np.arange(pbytes)).ravel()] = packed.ravel()
        self._planes = planes
        self._plane_bytes = total
        if offset_mode == "full":
            self._offs = starts[:nb].astype(np.uint64)
            self._anchors = np.zeros(0, dtype=np.uint64)
        else:
            self._offs = np.zeros(0, dtype=np.uint64)
            self._anchors = starts[:nb:ANCHOR_EVERY].astype(np.uint64)

    # ---- queries -----------------------------------------------------------
    @property
    def n(self):
        return self._n

    @property
    def m(self):
        return self._m

    def _args(self):
        return (self._sarr, self._t, self._planes, self._offs, self._anchors,
                0 if self._mode == "full" else 1, self._p)

    def rank1(self, x):
        self._check_rank_arg(x)
        return self._kern.vc_rank1(*self._args(), self._n, self._m, x)

    def select1(self, i):
        self._check_select_arg(i)
        return self._kern.vc_select1(*self._args(), self._m, i)

    def select0(self, i):
        z = self._n - self._m
        if not 1 <= i <= z:
            raise ValueError(f"select0 rank {i} outside [1, {z}]")
        if self._m == 0:
            return i - 1
        return self._kern.vc_select0(*self._args(), self._n, self._m, i)

    def rank1_many(self, xs):
        out = np.empty(len(xs), dtype=np.int64)
        self._kern.vc_rank1_many(*self._args(), self._n, self._m,
                                 np.asarray(xs, dtype=np.int64), out)
        return out

    def select1_many(self, qs):
        out = np.empty(len(qs), dtype=np.int64)
        self._kern.vc_select1_many(*self._args(), self._m,
                                   np.asarray(qs, dtype=np.int64), out)
        return out

    def select0_many(self, qs):
        qs = np.asarray(qs, dtype=np.int64)
        if self._m == 0:
            return qs - 1
        out = np.empty(len(qs), dtype=np.int64)
        self._kern.vc_select0_many(*self._args(), self._n, self._m, qs, out)
        return out

    # ---- sizes and serialization ---------------------------------------------
    def _size_parts(self):
        nb = len(self._sarr)
        off_bits = 32 * len(self._offs) + 32 * len(self._anchors)
        return [
            ("base_pos", 32 * nb, False),
            ("plane_counts", 8 * nb, False),
            ("plane_offsets", int(off_bits), False),
            ("planes", 8 * self._plane_bytes, True),
        ]

    def _param_blob(self):
        return struct.pack("<QQIBQ", self._n, self._m, self._p,
                           OFFSET_MODES.index(self._mode), self._plane_bytes)

    def _sections(self):
        nb = len(self._sarr)
        offs = self._offs if self._mode == "full" else self._anchors
        by = self._planes[: self._plane_bytes].tobytes()
        by = by.ljust(((len(by) + 7) // 8) * 8, b"\0")
        plane_words = np.frombuffer(by, dtype="<u8").astype(np.uint64)
        return [
            (32 * nb, _pack.pack_fixed(self._sarr + 1, 32)),
            (8 * nb, _pack.pack_fixed(self._t, 8)),
            (32 * len(offs), _pack.pack_fixed(offs, 32)),
            (8 * self._plane_bytes, _pack.with_guard(plane_words)),
        ]

    @classmethod
    def _deserialize(cls, params, sections, backend):
        n, m, p, mode_idx, plane_bytes = struct.unpack("<QQIBQ", params)
        obj = cls.__new__(cls)
        obj._kern = get_kernels(backend)
        obj._n, obj._m, obj._p = int(n), int(m), int(p)
        obj._mode = OFFSET_MODES[mode_idx]
        obj._plane_bytes = int(plane_bytes)
        nb = (obj._m + p - 1) // p
        obj._sarr = _pack.unpack_fixed(sections[0][1], nb, 32).astype(np.int64) - 1
        obj._t = _pack.unpack_fixed(sections[1][1], nb, 8).astype(np.uint8)
        noffs = sections[2][0] // 32
        offs = _pack.unpack_fixed(sections[2][1], noffs, 32)
        if obj._mode == "full":
            obj._offs, obj._anchors = offs, np.zeros(0, dtype=np.uint64)
        else:
            obj._offs, obj._anchors = np.zeros(0, dtype=np.uint64), offs
        raw = sections[3][1].view(np.uint8)
        planes = np.zeros(obj._plane_bytes + 8, dtype=np.uint8)
        planes[: obj._plane_bytes] = raw[: obj._plane_bytes]
        obj._planes = planes
        return obj
