"""Sparse dictionary by recursive reduction.

While the ones density is at most 1/4, the bit array is split into blocks of
t = max(2, round(1 / -lg(1 - p))) bits (chosen so roughly half the blocks are
nonzero); a contracted array marks the nonzero blocks and the nonzero blocks
are concatenated into an extracted array, which is reduced again.  Contracted
arrays and the final dense extracted array are plain dictionaries; a rank or
select walks the chain one level at a time.
"""
from __future__ import annotations

import math
import struct

import numpy as np

from rsdict import _pack
from rsdict._backend import get_kernels
from rsdict.api import RankSelectDict
from rsdict.enumcode import _check_geometry, rank_directories

T_CAP = 1 << 16  # block-size cap for extremely sparse inputs


def choose_block_size(p: float) -> int:
    """Reduction block size for ones density p; contracted density lands
    near 1/2."""
    if p <= 0:
        raise ValueError("density must be positive")
    if p >= 1:
        return 2
    t = round(1.0 / -math.log2(1.0 - p))
    return max(2, min(int(t), T_CAP))


def rr_size_bound(n: int, m: int) -> float:
    """Closed-form payload target: 1.44 m lg(n/m) + m bits."""
    if m <= 0 or m > n:
        raise ValueError(f"need 1 <= m <= n, got m={m}, n={n}")
    return 1.44 * m * math.log2(n / m) + m


class RecRank(RankSelectDict):
    KIND = "recrank"

    def __init__(self, positions, n, *, l=256, s=32, backend=None):
        _check_geometry(l, s)
        positions = np.asarray(positions, dtype=np.int64)
        self._kern = get_kernels(backend)
        self._n = int(n)
        self._m = len(positions)
        self._l, self._s = int(l), int(s)
        self._sentinel = None
        if self._m == 0:
            self._sentinel = "empty"
        elif self._m == self._n:
            self._sentinel = "full"
        level_words = []
        level_ts = []
        stored_bits = []
        if self._sentinel is None:
            cur = positions
            cur_len = self._n
            while self._m / cur_len <= 0.25 and len(level_ts) < 64:
                t, nz = self._level_block_size(cur, cur_len)
                nxt_len = len(nz) * t
                if nxt_len >= cur_len:
                    break
                nb = (cur_len + t - 1) // t
                level_ts.append(t)
                stored_bits.append(nb)
                level_words.append(_pack.positions_to_words(nz, nb))
                blocks = cur // t
                cur = np.searchsorted(nz, blocks) * t + (cur - blocks * t)
                cur_len = nxt_len
            stored_bits.append(cur_len)
            level_words.append(_pack.positions_to_words(cur, cur_len))
        self._ts = np.asarray(level_ts, dtype=np.int64)
        self._flatten(level_words, stored_bits)

    @staticmethod
    def _level_block_size(cur, cur_len):
        """Block size for one reduction level.

        The density formula is the starting point; past the first level the
        ones are no longer Bernoulli (every extracted parent block carries at
        least one), which leaves too few empty blocks and stalls the
        reduction.  Shrinking t until the extracted array is at most half the
        input restores the halving that the size and level-count analysis
        relies on.  t = 2 always qualifies since 2 * nnz <= 2m <= cur_len / 2
        at densities where the reduction runs.
        """
        m = len(cur)
        t0 = choose_block_size(m / cur_len)

        def extracted(t):
            nz = np.unique(cur // t)
            return nz, len(nz) * t

        nz, ext = extracted(t0)
        if ext <= cur_len // 2 or t0 <= 2:
            return t0, nz
        lo, hi = 2, t0
        nz_lo, _ = extracted(lo)
        while lo < hi:
            mid = (lo + hi + 1) // 2
            nz_mid, ext_mid = extracted(mid)
            if ext_mid <= cur_len // 2:
                lo, nz_lo = mid, nz_mid
            else:
                hi = mid - 1
        return lo, nz_lo

    def _flatten(self, level_words, stored_bits):
        """Concatenate per-level words and directories into shared buffers."""
        nlv = len(level_words)
        self._nlev = max(0, nlv - 1)
        woff, rloff, rsoff = [0], [0], [0]
        wchunks, rlchunks, rschunks = [], [], []
        for words, bits in zip(level_words, stored_bits):
            rl, rs, _ = rank_directories(words, bits, self._l, self._s)
            wchunks.append(_pack.trim_words(words, bits))
            rlchunks.append(rl)
            rschunks.append(rs)
            woff.append(woff[-1] + len(wchunks[-1]))
            rloff.append(rloff[-1] + len(rl))
            rsoff.append(rsoff[-1] + len(rs))
        if nlv:
            self._words = _pack.with_guard(np.concatenate(wchunks))
            self._rl = np.concatenate(rlchunks).astype(np.uint64)
            self._rs = (np.concatenate(rschunks).astype(np.uint32)
                        if any(len(c) for c in rschunks) else np.zeros(0, np.uint32))
        else:
            self._words = _pack.alloc_words(0)
            self._rl = np.zeros(0, dtype=np.uint64)
            self._rs = np.zeros(0, dtype=np.uint32)
        self._woff = np.asarray(woff, dtype=np.int64)
        self._rloff = np.asarray(rloff, dtype=np.int64)
        self._rsoff = np.asarray(rsoff, dtype=np.int64)
        self._nbits = np.asarray(stored_bits, dtype=np.int64)

    # ---- queries -----------------------------------------------------------
    @property
    def n(self):
        return self._n

    @property
    def m(self):
        return self._m

    @property
    def level_count(self):
        return int(len(self._ts))

    @property
    def block_sizes(self):
        return [int(t) for t in self._ts]

    def _args(self):
        return (self._words, self._rl, self._rs, self._woff, self._rloff,
                self._rsoff, self._ts, self._nbits, self._nlev, self._l, self._s)

    def rank1(self, x):
        self._check_rank_arg(x)
        if self._sentinel == "empty":
            return 0
        if self._sentinel == "full":
            return x + 1
        return self._kern.rr_rank1(*self._args(), x)

    def select1(self, i):
        self._check_select_arg(i)
        if self._sentinel == "full":
            return i - 1
        return self._kern.rr_select1(*self._args(), self._m, i)

    def select0(self, i):
        z = self._n - self._m
        if not 1 <= i <= z:
            raise ValueError(f"select0 rank {i} outside [1, {z}]")
        if self._sentinel == "empty":
            return i - 1
        return self._kern.rr_select0(*self._args(), self._n, self._m, i)

    def rank1_many(self, xs):
        xs = np.asarray(xs, dtype=np.int64)
        if self._sentinel == "empty":
            return np.zeros(len(xs), dtype=np.int64)
        if self._sentinel == "full":
            return xs + 1
        out = np.empty(len(xs), dtype=np.int64)
        self._kern.rr_rank1_many(*self._args(), xs, out)
        return out

    def select1_many(self, qs):
        qs = np.asarray(qs, dtype=np.int64)
        if self._sentinel == "full":
            return qs - 1
        out = np.empty(len(qs), dtype=np.int64)
        self._kern.rr_select1_many(*self._args(), self._m, qs, out)
        return out

    def select0_many(self, qs):
        qs = np.asarray(qs, dtype=np.int64)
        if self._sentinel == "empty":
            return qs - 1
        out = np.empty(len(qs), dtype=np.int64)
        self._kern.rr_select0_many(*self._args(), self._n, self._m, qs, out)
        return out

    # ---- sizes and serialization --------------------------------------------
    def _size_parts(self):
        parts = []
        nlv = self._nlev + 1 if len(self._nbits) else 0
        w_rs = _pack.width_for(self._l - 1)
        for lv in range(nlv):
            bits = int(self._nbits[lv])
            mlv = int(self._rl[self._rloff[lv + 1] - 1]) if bits else 0
            w_rl = _pack.width_for(mlv)
            tag = f"level{lv}" if lv < self._nlev else "final"
            parts.append((f"{tag}_bits", bits, True))
            parts.append((f"{tag}_rank_l",
                          int(self._rloff[lv + 1] - self._rloff[lv]) * w_rl, False))
            parts.append((f"{tag}_rank_s",
                          int(self._rsoff[lv + 1] - self._rsoff[lv]) * w_rs, False))
        return parts or [("empty", 0, True)]

    def _param_blob(self):
        head = struct.pack("<QQIIB", self._n, self._m, self._l, self._s,
                           0 if self._sentinel is None else
                           (1 if self._sentinel == "empty" else 2))
        levels = struct.pack(f"<I{len(self._ts)}I", len(self._ts),
                             *[int(t) for t in self._ts])
        lens = struct.pack(f"<I{len(self._nbits)}Q", len(self._nbits),
                           *[int(b) for b in self._nbits])
        return head + levels + lens

    def _sections(self):
        out = []
        nlv = self._nlev + 1 if len(self._nbits) else 0
        w_rs = _pack.width_for(self._l - 1)
        for lv in range(nlv):
            bits = int(self._nbits[lv])
            rl = self._rl[self._rloff[lv]:self._rloff[lv + 1]]
            rs = self._rs[self._rsoff[lv]:self._rsoff[lv + 1]]
            mlv = int(rl[-1]) if len(rl) else 0
            w_rl = _pack.width_for(mlv)
            out.append((bits, _pack.with_guard(
                self._words[self._woff[lv]:self._woff[lv + 1]])))
            out.append((len(rl) * w_rl, _pack.pack_fixed(rl, w_rl)))
            out.append((len(rs) * w_rs, _pack.pack_fixed(rs, w_rs)))
        return out

    @classmethod
    def _deserialize(cls, params, sections, backend):
        n, m, l, s, sent = struct.unpack_from("<QQIIB", params, 0)
        off = struct.calcsize("<QQIIB")
        (nts,) = struct.unpack_from("<I", params, off)
        off += 4
        ts = struct.unpack_from(f"<{nts}I", params, off)
        off += 4 * nts
        (nlv,) = struct.unpack_from("<I", params, off)
        off += 4
        nbits = struct.unpack_from(f"<{nlv}Q", params, off)
        obj = cls.__new__(cls)
        obj._kern = get_kernels(backend)
        obj._n, obj._m, obj._l, obj._s = int(n), int(m), int(l), int(s)
        obj._sentinel = {0: None, 1: "empty", 2: "full"}[sent]
        obj._ts = np.asarray(ts, dtype=np.int64)
        obj._nlev = max(0, nlv - 1)
        obj._nbits = np.asarray(nbits, dtype=np.int64)
        w_rs = _pack.width_for(l - 1)
        woff, rloff, rsoff = [0], [0], [0]
        wchunks, rlchunks, rschunks = [], [], []
        for lv in range(nlv):
            bits = int(nbits[lv])
            nlb = (bits + l - 1) // l if bits else 0
            nsb = (bits + s - 1) // s if bits else 0
            bw, rlw_sec, rsw_sec = sections[3 * lv], sections[3 * lv + 1], sections[3 * lv + 2]
            w_rl = rlw_sec[0] // (nlb + 1) if nlb + 1 else 0
            wchunks.append(_pack.trim_words(bw[1], bits))
            rlchunks.append(_pack.unpack_fixed(rlw_sec[1], nlb + 1, int(w_rl)))
            rschunks.append(_pack.unpack_fixed(rsw_sec[1], nsb, w_rs).astype(np.uint32))
            woff.append(woff[-1] + len(wchunks[-1]))
            rloff.append(rloff[-1] + nlb + 1)
            rsoff.append(rsoff[-1] + nsb)
        if nlv:
            obj._words = _pack.with_guard(np.concatenate(wchunks))
            obj._rl = np.concatenate(rlchunks).astype(np.uint64)
            obj._rs = (np.concatenate(rschunks)
                       if any(len(c) for c in rschunks) else np.zeros(0, np.uint32))
        else:
            obj._words = _pack.alloc_words(0)
            obj._rl = np.zeros(0, dtype=np.uint64)
            obj._rs = np.zeros(0, dtype=np.uint32)
        obj._woff = np.asarray(woff, dtype=np.int64)
        obj._rloff = np.asarray(rloff, dtype=np.int64)
        obj._rsoff = np.asarray(rsoff, dtype=np.int64)
        return obj
