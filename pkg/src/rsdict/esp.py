"""Entropy-coded dictionary whose code-word pointers are estimated from rank
counts instead of stored.

Three-level blocking: superblocks of k bits carry an explicit bit pointer
(slp) into the code stream and an absolute rank sample; blocks of l bits and
chunks of s bits carry rank samples relative to their enclosing level.  Each
s-bit chunk is enumeratively coded and placed at

    slp[superblock] + est(block prefix) + est(chunk prefix) + slack * index

where est is a ceiled fixed-point over-approximation of the empirical entropy
of the prefix, computed from the rank samples alone.  Superadditivity of the
entropy makes consecutive placements non-overlapping; the builder verifies
this for every adjacent pair and fails loudly otherwise.

The relative rank samples are bit-packed with adaptive widths (block samples
at the width of their superblock's population, chunk samples at the width of
their block's population), which keeps the directories near the entropy of
the data they describe.  The base offsets of the packed streams are derived
at load time and are not part of the stored structure.
"""
from __future__ import annotations

import struct

import numpy as np

from rsdict import _pack
from rsdict._backend import get_kernels
from rsdict.api import RankSelectDict
from rsdict.enumcode import binom_table, code_len_table, decode_tables

FX_SCALE = 65536  # 2**16 fixed-point log tables

_fx_cache: dict[int, tuple[np.ndarray, np.ndarray]] = {}


def fx_log_tables(maxv: int) -> tuple[np.ndarray, np.ndarray]:
    """(ceil, floor) of FX_SCALE * lg v for v = 1..maxv, exact at ties."""
    if maxv not in _fx_cache:
        v = np.arange(1, maxv + 1, dtype=np.int64)
        scaled = np.log2(v.astype(np.float64)) * FX_SCALE
        up = np.ceil(scaled).astype(np.int64)
        dn = np.floor(scaled).astype(np.int64)
        pow2 = (v & (v - 1)) == 0
        exact = np.round(np.log2(v[pow2].astype(np.float64))).astype(np.int64) * FX_SCALE
        up[pow2] = exact
        dn[pow2] = exact
        # near-integer scaled logs are decided with exact big-int arithmetic
        near = np.flatnonzero((~pow2) & (np.abs(scaled - np.round(scaled)) < 1e-6))
        for idx in near:
            val = int(v[idx])
            r = int(np.round(scaled[idx]))
            t = val ** FX_SCALE
            up[idx] = r if (1 << r) >= t else r + 1
            dn[idx] = r if (1 << r) <= t else r - 1
        fxu = np.zeros(maxv + 1, dtype=np.int64)
        fxd = np.zeros(maxv + 1, dtype=np.int64)
        fxu[1:] = up
        fxd[1:] = dn
        _fx_cache[maxv] = (fxu, fxd)
    return _fx_cache[maxv]


def estimate_pointer(prefix_len: int, prefix_ones: int) -> int:
    """Ceiled fixed-point over-approximation of the entropy (in bits) of a
    prefix with the given length and population; never underestimates the
    real value.  Zero for empty, all-zero, or all-one prefixes."""
    if prefix_ones < 0 or prefix_len < 0 or prefix_ones > prefix_len:
        raise ValueError(f"invalid prefix ({prefix_len} bits, {prefix_ones} ones)")
    if prefix_len == 0 or prefix_ones in (0, prefix_len):
        return 0
    fxu, fxd = fx_log_tables(max(4096, prefix_len))
    return get_kernels().fx_estimate(fxu, fxd, prefix_len, prefix_ones)


def _bitlen(a: np.ndarray) -> np.ndarray:
    """Element-wise bit length, exact for values below 2**53."""
    a = np.asarray(a, dtype=np.int64)
    out = np.zeros(len(a), dtype=np.int64)
    nz = a > 0
    out[nz] = np.frexp(a[nz].astype(np.float64))[1]
    return out


def _est_vec(fxu, fxd, big_n, big_m):
    ok = (big_m > 0) & (big_m < big_n)
    nn = np.where(ok, big_n, 1)
    mm = np.where(ok, big_m, 1)
    a = fxu[nn]
    v = mm * (a - fxd[mm]) + (nn - mm) * (a - fxd[nn - mm])
    return np.where(ok, -((-v) // FX_SCALE), 0)


class EspRankSelect(RankSelectDict):
    KIND = "esp"
    select0_native = True

    def __init__(self, positions, n, *, k=4096, l=256, s=32, slack=1,
                 table_cap=65536, backend=None):
        if k % l or l % s or s % 8 or not 8 <= s <= 64:
            raise ValueError(f"need s in [8,64] multiple of 8, s | l, l | k; "
                             f"got k={k}, l={l}, s={s}")
        if k > 1 << 20:
            raise ValueError("superblock size above 2**20 is not supported")
        if slack < 0:
            raise ValueError("slack must be >= 0")
        positions = np.asarray(positions, dtype=np.int64)
        self._kern = get_kernels(backend)
        self._n, self._kk, self._l, self._s = int(n), int(k), int(l), int(s)
        self._slack = int(slack)
        self._table_cap = int(table_cap)
        words = _pack.positions_to_words(positions, n)

        nbytes = (n + 7) // 8
        cum = _pack.byte_cumsum(words, n)
        self._m = int(cum[-1])
        nslb = (n + k - 1) // k if n else 0
        lb_per = k // l
        spb = l // s
        spslb = lb_per * spb
        nlb_v = nslb * lb_per
        nsb_v = nlb_v * spb
        nsb_real = (n + s - 1) // s if n else 0

        def cnt(bitpos):
            return cum[np.minimum(bitpos >> 3, nbytes)]

        rslb = cnt(np.arange(nslb + 1, dtype=np.int64) * k).astype(np.int64)
        rl_abs = cnt(np.arange(nlb_v + 1, dtype=np.int64) * l).astype(np.int64)
        rl_abs[nlb_v] = self._m  # virtual top boundary
        rs_abs = cnt(np.arange(nsb_v + 1, dtype=np.int64) * s).astype(np.int64)
        rs_abs[nsb_v] = self._m

        # packed block-level samples, one width per superblock
        dslb = np.diff(rslb)
        wl = _bitlen(dslb)
        rl_entries = (rl_abs[:nlb_v].reshape(nslb, lb_per)[:, 1:]
                      - rslb[:nslb, None]) if nslb else np.zeros((0, 0), np.int64)
        rl_bits_per = (lb_per - 1) * wl
        rlbase = np.concatenate([[0], np.cumsum(rl_bits_per)]).astype(np.int64)
        self._rl_bits = int(rlbase[-1]) if nslb else 0
        rlw = _pack.alloc_words(self._rl_bits)
        if nslb:
            ppos = (np.repeat(rlbase[:-1], lb_per - 1)
                    + np.tile(np.arange(lb_per - 1), nslb)
                    * np.repeat(wl, lb_per - 1))
            _pack.scatter_bits(rlw, ppos, np.repeat(wl, lb_per - 1), rl_entries.ravel())

        # packed chunk-level samples, one width per block
        dlb = np.diff(rl_abs)
        wlb = _bitlen(dlb)
        rs_entries = (rs_abs[:nsb_v].reshape(nlb_v, spb)[:, 1:]
                      - rl_abs[:nlb_v, None]) if nlb_v else np.zeros((0, 0), np.int64)
        rs_cum = np.concatenate([[0], np.cumsum((spb - 1) * wlb)]).astype(np.int64)
        rsbase = rs_cum[np.arange(nslb, dtype=np.int64) * lb_per] if nslb else rs_cum[:0]
        self._rs_bits = int(rs_cum[-1]) if nlb_v else 0
        rsw = _pack.alloc_words(self._rs_bits)
        if nlb_v:
            ppos = (np.repeat(rs_cum[:-1], spb - 1)
                    + np.tile(np.arange(spb - 1), nlb_v) * np.repeat(wlb, spb - 1))
            _pack.scatter_bits(rsw, ppos, np.repeat(wlb, spb - 1), rs_entries.ravel())

        # estimated placements
        fxu, fxd = fx_log_tables(k)
        lp = _est_vec(fxu, fxd,
                      (np.arange(nlb_v, dtype=np.int64) % lb_per) * l,
                      rl_abs[:nlb_v] - np.repeat(rslb[:-1], lb_per))
        sp = _est_vec(fxu, fxd,
                      (np.arange(nsb_v, dtype=np.int64) % spb) * s,
                      rs_abs[:nsb_v] - np.repeat(rl_abs[:nlb_v], spb))
        u = np.diff(rs_abs)
        lens = code_len_table(s)[u].astype(np.int64)
        base_local = np.repeat(lp, spb) + sp
        pos_local = base_local + self._slack * (np.arange(nsb_v, dtype=np.int64) % spslb)

        if nslb:
            def chain_ok(pos):
                # code words must not overlap; empty chunks carry no code and
                # their estimated positions are never dereferenced
                idx = np.flatnonzero(lens > 0)
                if len(idx) < 2:
                    return True
                same = (idx[1:] // spslb) == (idx[:-1] // spslb)
                gaps = pos[idx[1:]] - (pos[idx[:-1]] + lens[idx[:-1]])
                return bool(np.all(gaps[same] >= 0))

            if not chain_ok(pos_local):
                raise RuntimeError(
                    f"code placement overlap (slack={self._slack}); increase slack"
                )
            pmat = pos_local.reshape(nslb, spslb)
            lmat = lens.reshape(nslb, spslb)
            gaps = pmat[:, 1:] - (pmat[:, :-1] + lmat[:, :-1])
            self.strict_nonoverlap = bool(gaps.size == 0 or gaps.min() >= 0)
            if self._slack >= 1 and not self.strict_nonoverlap:
                raise RuntimeError(
                    f"adjacent placement estimates regressed at slack={self._slack}"
                )
            self.slack_zero_ok = chain_ok(base_local)
            ends = np.where(lens > 0, pos_local + lens, 0).reshape(nslb, spslb).max(axis=1)
            slp = np.concatenate([[0], np.cumsum(ends)]).astype(np.int64)
        else:
            self.strict_nonoverlap = True
            self.slack_zero_ok = True
            slp = np.zeros(1, dtype=np.int64)

        self._code_bits = int(slp[-1])
        code = _pack.alloc_words(self._code_bits)
        live = np.flatnonzero((u > 0) & (u < s))
        if len(live):
            gp = slp[live // spslb] + pos_local[live]
            blocks = _pack.gather_bits(words, live * s, s)
            offs = np.empty(len(live), dtype=np.uint64)
            self._kern.enum_encode_many(binom_table(), s, blocks, u[live], offs)
            _pack.scatter_bits(code, gp, lens[live], offs)

        self._code = code
        self._slp = slp.astype(np.uint64)
        self._rslb = rslb.astype(np.uint64)
        self._rlw, self._rlbase = rlw, rlbase[:-1].astype(np.uint64) if nslb else rlbase.astype(np.uint64)
        self._rsw, self._rsbase = rsw, rsbase.astype(np.uint64)
        self._fxu, self._fxd = fxu, fxd
        self._lentab = code_len_table(s)
        self._taboff, self._tabdat = decode_tables(s, table_cap)
        self._binom = binom_table()

    # ---- queries ----------------------------------------------------------
    @property
    def n(self):
        return self._n

    @property
    def m(self):
        return self._m

    def _args(self):
        return (self._code, self._slp, self._rslb, self._rlw, self._rlbase,
                self._rsw, self._rsbase, self._fxu, self._fxd,
                self._lentab, self._taboff, self._tabdat, self._binom,
                self._kk, self._l, self._s, self._slack, self._n)

    def rank1(self, x):
        self._check_rank_arg(x)
        return self._kern.esp_rank1(*self._args(), x)

    def select1(self, i):
        self._check_select_arg(i)
        return self._kern.esp_select1(*self._args(), i)

    def select0(self, i):
        if not 1 <= i <= self._n - self._m:
            raise ValueError(f"select0 rank {i} outside [1, {self._n - self._m}]")
        return self._kern.esp_select0(*self._args(), i)

    def rank1_many(self, xs):
        out = np.empty(len(xs), dtype=np.int64)
        self._kern.esp_rank1_many(*self._args(), np.asarray(xs, dtype=np.int64), out)
        return out

    def select1_many(self, qs):
        out = np.empty(len(qs), dtype=np.int64)
        self._kern.esp_select1_many(*self._args(), np.asarray(qs, dtype=np.int64), out)
        return out

    def select0_many(self, qs):
        out = np.empty(len(qs), dtype=np.int64)
        self._kern.esp_select0_many(*self._args(), np.asarray(qs, dtype=np.int64), out)
        return out

    # ---- sizes and serialization -------------------------------------------
    def _widths(self):
        return _pack.width_for(self._m), _pack.width_for(self._code_bits)

    def _size_parts(self):
        w_rslb, w_slp = self._widths()
        nslb = len(self._rslb) - 1
        return [
            ("rank_slb", (nslb + 1) * w_rslb, False),
            ("ptr_slb", (nslb + 1) * w_slp, False),
            ("rank_l", self._rl_bits, False),
            ("rank_s", self._rs_bits, False),
            ("code", self._code_bits, True),
        ]

    def _param_blob(self):
        w_rslb, w_slp = self._widths()
        return struct.pack("<QQIIIIQQQBBI", self._n, self._m, self._kk, self._l,
                           self._s, self._slack, self._code_bits, self._rl_bits,
                           self._rs_bits, w_rslb, w_slp, self._table_cap)

    def _sections(self):
        w_rslb, w_slp = self._widths()
        nslb = len(self._rslb) - 1
        return [
            ((nslb + 1) * w_rslb, _pack.pack_fixed(self._rslb, w_rslb)),
            ((nslb + 1) * w_slp, _pack.pack_fixed(self._slp, w_slp)),
            (self._rl_bits, self._rlw),
            (self._rs_bits, self._rsw),
            (self._code_bits, self._code),
        ]

    @classmethod
    def _deserialize(cls, params, sections, backend):
        (n, m, k, l, s, slack, code_bits, rl_bits, rs_bits,
         w_rslb, w_slp, cap) = struct.unpack("<QQIIIIQQQBBI", params)
        obj = cls.__new__(cls)
        obj._kern = get_kernels(backend)
        obj._n, obj._m = int(n), int(m)
        obj._kk, obj._l, obj._s, obj._slack = int(k), int(l), int(s), int(slack)
        obj._code_bits, obj._rl_bits, obj._rs_bits = int(code_bits), int(rl_bits), int(rs_bits)
        obj._table_cap = int(cap)
        nslb = (obj._n + k - 1) // k if obj._n else 0
        lb_per = k // l
        spb = l // s
        obj._rslb = _pack.unpack_fixed(sections[0][1], nslb + 1, w_rslb)
        obj._slp = _pack.unpack_fixed(sections[1][1], nslb + 1, w_slp)
        obj._rlw = sections[2][1]
        obj._rsw = sections[3][1]
        obj._code = sections[4][1]
        # derived base offsets for the adaptive-width streams
        dslb = np.diff(obj._rslb.astype(np.int64))
        wl = _bitlen(dslb)
        rlbase = np.concatenate([[0], np.cumsum((lb_per - 1) * wl)]).astype(np.int64)
        obj._rlbase = rlbase[:-1].astype(np.uint64) if nslb else rlbase.astype(np.uint64)
        # reconstruct per-block populations to size the chunk stream
        if nslb:
            rel = np.zeros((nslb, lb_per - 1), dtype=np.int64)
            for sig in range(nslb):
                wv = int(wl[sig])
                if wv:
                    pos = int(rlbase[sig]) + np.arange(lb_per - 1, dtype=np.int64) * wv
                    rel[sig] = _pack.gather_bits(obj._rlw, pos, wv).astype(np.int64)
            rl_abs = np.empty(nslb * lb_per + 1, dtype=np.int64)
            rl_abs[: nslb * lb_per] = (
                np.concatenate([np.zeros((nslb, 1), np.int64), rel], axis=1)
                + obj._rslb[:nslb, None].astype(np.int64)
            ).ravel()
            rl_abs[nslb * lb_per] = obj._m
            dlb = np.diff(rl_abs)
            wlb = _bitlen(dlb)
            rs_cum = np.concatenate([[0], np.cumsum((spb - 1) * wlb)]).astype(np.int64)
            obj._rsbase = rs_cum[np.arange(nslb, dtype=np.int64) * lb_per].astype(np.uint64)
        else:
            obj._rsbase = np.zeros(0, dtype=np.uint64)
        obj._fxu, obj._fxd = fx_log_tables(k)
        obj._lentab = code_len_table(obj._s)
        obj._taboff, obj._tabdat = decode_tables(obj._s, obj._table_cap)
        obj._binom = binom_table()
        return obj
