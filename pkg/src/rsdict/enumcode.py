"""Enumerative (combinatorial) block coding and the pointer-based ent
dictionary.

A block of t bits with u ones is stored as its rank in the combinatorial
number system: offset = sum over set-bit positions p_j (ascending, j = 1..u)
of C(p_j, j).  This is a bijection between the C(t, u) blocks of the class
and [0, C(t, u)), stored in ceil(lg C(t, u)) bits.  Decoding walks the block
from the top bit with the same table, or hits a per-class lookup table when
the class is small enough to precompute.
"""
from __future__ import annotations

import math
import struct

import numpy as np

from rsdict import _pack
from rsdict._backend import get_kernels
from rsdict.api import RankSelectDict

CMAX = 64  # largest codable block; C(64, 32) still fits a 64-bit word

_binom = None
_len_tables: dict[int, np.ndarray] = {}
_decode_tables: dict[tuple[int, int], tuple[np.ndarray, np.ndarray]] = {}


def binom_table() -> np.ndarray:
    """C[t, u] for 0 <= u, t <= 64 (0 where u > t), as uint64."""
    global _binom
    if _binom is None:
        c = np.zeros((CMAX + 1, CMAX + 1), dtype=np.uint64)
        for t in range(CMAX + 1):
            for u in range(t + 1):
                c[t, u] = math.comb(t, u)
        _binom = c
    return _binom


def code_len_table(t: int) -> np.ndarray:
    """LEN[u] = ceil(lg C(t, u)) for u = 0..t."""
    if t not in _len_tables:
        _len_tables[t] = np.array(
            [(math.comb(t, u) - 1).bit_length() for u in range(t + 1)], dtype=np.uint8
        )
    return _len_tables[t]


def decode_tables(t: int, cap: int = 65536) -> tuple[np.ndarray, np.ndarray]:
    """Per-class decode lookup: taboff[u] indexes tabdat, or -1 for classes
    decoded by the binomial walk.  Only classes with C(t, u) <= cap get a
    table, which bounds memory while covering the common sparse classes."""
    key = (t, cap)
    if key not in _decode_tables:
        taboff = np.full(t + 1, -1, dtype=np.int64)
        chunks = []
        total = 0
        for u in range(1, t):
            c = math.comb(t, u)
            if c > cap:
                continue
            tab = np.empty(c, dtype=np.uint64)
            x = (1 << u) - 1
            for off in range(c):
                tab[off] = x
                low = x & -x
                r = x + low
                x = (((r ^ x) >> 2) // low) | r
            taboff[u] = total
            total += c
            chunks.append(tab)
        tabdat = np.concatenate(chunks) if chunks else np.zeros(1, dtype=np.uint64)
        _decode_tables[key] = (taboff, tabdat)
    return _decode_tables[key]


def enum_encode(block: int, t: int, u: int) -> int:
    """Offset of the block within its (t, u) class; block must have u ones."""
    if not 0 <= u <= t <= CMAX:
        raise ValueError(f"invalid class (t={t}, u={u})")
    block = int(block)
    if block >> t:
        raise ValueError("block has bits above position t")
    if block.bit_count() != u:
        raise ValueError(f"block popcount {block.bit_count()} != u={u}")
    return get_kernels().enum_encode(binom_table(), t, u, block)


def enum_decode(offset: int, t: int, u: int) -> int:
    """Inverse of enum_encode for the (t, u) class."""
    if not 0 <= u <= t <= CMAX:
        raise ValueError(f"invalid class (t={t}, u={u})")
    if not 0 <= offset < math.comb(t, u):
        raise ValueError(f"offset {offset} outside [0, C({t},{u}))")
    return get_kernels().enum_decode(binom_table(), t, u, offset)


def entropy_bits(n, m) -> float:
    """Real-valued zero-order entropy of an n-bit vector with m ones, in bits.

    m may be fractional (used for analytic density columns); 0 at the
    degenerate densities."""
    if n < 0 or m < 0 or m > n:
        raise ValueError(f"invalid (n={n}, m={m})")
    if n == 0 or m == 0 or m == n:
        return 0.0
    n = float(n)
    m = float(m)
    return m * math.log2(n / m) + (n - m) * math.log2(n / (n - m))


def bbound_bits(n: int, m: int) -> int:
    """ceil(lg C(n, m)): the information-theoretic minimum for an m-subset."""
    if n < 0 or m < 0 or m > n:
        raise ValueError(f"invalid (n={n}, m={m})")
    return (math.comb(n, m) - 1).bit_length()


# --------------------------------------------------------------------------
# shared directory construction (also used by esp)

def rank_directories(words: np.ndarray, n: int, l: int, s: int):
    """Two-level rank samples: absolute counts at l-boundaries, counts
    relative to the enclosing l-block at s-boundaries."""
    nbytes = (n + 7) // 8
    cum = _pack.byte_cumsum(words, n)
    nlb = (n + l - 1) // l if n else 0
    nsb = (n + s - 1) // s if n else 0
    lb_idx = np.minimum(np.arange(nlb + 1, dtype=np.int64) * (l // 8), nbytes)
    rl = cum[lb_idx].astype(np.uint64)
    sb_idx = np.minimum(np.arange(nsb, dtype=np.int64) * (s // 8), nbytes)
    rs = (cum[sb_idx] - cum[lb_idx[np.arange(nsb) // (l // s)]]).astype(np.uint32)
    return rl, rs, cum


def _check_geometry(l: int, s: int) -> None:
    if s < 8 or s > CMAX or s % 8:
        raise ValueError(f"s must be a multiple of 8 in [8, {CMAX}], got {s}")
    if l < s or l % s:
        raise ValueError(f"l must be a positive multiple of s, got l={l}, s={s}")


class EntRankSelect(RankSelectDict):
    """Entropy-coded dictionary with explicit code pointers.

    Same directories as the plain structure; the bits themselves are replaced
    by per-small-block enumerative code words, located by an explicit bit
    pointer per large block plus a relative pointer per small block.
    """

    KIND = "ent"
    select0_native = True

    def __init__(self, positions, n, *, l=256, s=32, table_cap=65536, backend=None):
        _check_geometry(l, s)
        positions = np.asarray(positions, dtype=np.int64)
        self._k = get_kernels(backend)
        self._n = int(n)
        self._l = int(l)
        self._s = int(s)
        self._table_cap = int(table_cap)
        words = _pack.positions_to_words(positions, n)
        rl, rs, cum = rank_directories(words, n, l, s)
        self._m = int(cum[-1])
        self._rl, self._rs = rl, rs
        nlb = len(rl) - 1
        nsb = len(rs)
        nbytes = (n + 7) // 8
        sb_bnd = np.minimum(np.arange(nsb + 1, dtype=np.int64) * (s // 8), nbytes)
        u = np.diff(cum[sb_bnd])
        lens = code_len_table(s)[u].astype(np.int64)
        g = np.concatenate([[0], np.cumsum(lens)])
        self._lptr = g[np.arange(nlb, dtype=np.int64) * (l // s)].astype(np.uint64)
        self._sptr = (g[:nsb] - self._lptr[np.arange(nsb) // (l // s)]).astype(np.uint32)
        self._code_bits = int(g[nsb]) if nsb else 0
        code = _pack.alloc_words(self._code_bits)
        live = np.flatnonzero((u > 0) & (u < s))
        if len(live):
            blocks = _pack.gather_bits(words, live * s, s)
            offs = np.empty(len(live), dtype=np.uint64)
            self._k.enum_encode_many(binom_table(), s, blocks, u[live], offs)
            _pack.scatter_bits(code, g[live], lens[live], offs)
        self._code = code
        self._lentab = code_len_table(s)
        self._taboff, self._tabdat = decode_tables(s, self._table_cap)
        self._binom = binom_table()

    # ---- queries ---------------------------------------------------------
    @property
    def n(self):
        return self._n

    @property
    def m(self):
        return self._m

    def _args(self):
        return (self._code, self._rl, self._rs, self._lptr, self._sptr,
                self._lentab, self._taboff, self._tabdat, self._binom,
                self._l, self._s, self._n, self._m)

    def rank1(self, x):
        self._check_rank_arg(x)
        return self._k.ent_rank1(*self._args(), x)

    def select1(self, i):
        self._check_select_arg(i)
        return self._k.ent_select1(*self._args(), i)

    def select0(self, i):
        if not 1 <= i <= self._n - self._m:
            raise ValueError(f"select0 rank {i} outside [1, {self._n - self._m}]")
        return self._k.ent_select0(*self._args(), i)

    def rank1_many(self, xs):
        out = np.empty(len(xs), dtype=np.int64)
        self._k.ent_rank1_many(*self._args(), np.asarray(xs, dtype=np.int64), out)
        return out

    def select1_many(self, qs):
        out = np.empty(len(qs), dtype=np.int64)
        self._k.ent_select1_many(*self._args(), np.asarray(qs, dtype=np.int64), out)
        return out

    def select0_many(self, qs):
        out = np.empty(len(qs), dtype=np.int64)
        self._k.ent_select0_many(*self._args(), np.asarray(qs, dtype=np.int64), out)
        return out

    # ---- sizes and serialization ------------------------------------------
    def _widths(self):
        nlb = len(self._rl) - 1
        w_rl = _pack.width_for(self._m)
        w_rs = _pack.width_for(self._l - 1)
        w_lp = _pack.width_for(self._code_bits)
        w_sp = _pack.width_for(int(self._sptr.max()) if len(self._sptr) else 0)
        return w_rl, w_rs, w_lp, w_sp

    def _size_parts(self):
        w_rl, w_rs, w_lp, w_sp = self._widths()
        nlb = len(self._rl) - 1
        nsb = len(self._rs)
        return [
            ("rank_l", (nlb + 1) * w_rl, False),
            ("rank_s", nsb * w_rs, False),
            ("ptr_l", nlb * w_lp, False),
            ("ptr_s", nsb * w_sp, False),
            ("code", self._code_bits, True),
        ]

    def _param_blob(self):
        w_rl, w_rs, w_lp, w_sp = self._widths()
        return struct.pack("<QQIIQBBBBI", self._n, self._m, self._l, self._s,
                           self._code_bits, w_rl, w_rs, w_lp, w_sp, self._table_cap)

    def _sections(self):
        w_rl, w_rs, w_lp, w_sp = self._widths()
        nlb = len(self._rl) - 1
        nsb = len(self._rs)
        return [
            ((nlb + 1) * w_rl, _pack.pack_fixed(self._rl, w_rl)),
            (nsb * w_rs, _pack.pack_fixed(self._rs, w_rs)),
            (nlb * w_lp, _pack.pack_fixed(self._lptr, w_lp)),
            (nsb * w_sp, _pack.pack_fixed(self._sptr, w_sp)),
            (self._code_bits, self._code),
        ]

    @classmethod
    def _deserialize(cls, params, sections, backend):
        n, m, l, s, code_bits, w_rl, w_rs, w_lp, w_sp, cap = struct.unpack(
            "<QQIIQBBBBI", params
        )
        obj = cls.__new__(cls)
        obj._k = get_kernels(backend)
        obj._n, obj._m, obj._l, obj._s = int(n), int(m), int(l), int(s)
        obj._code_bits = int(code_bits)
        obj._table_cap = int(cap)
        nlb = (obj._n + l - 1) // l if obj._n else 0
        nsb = (obj._n + s - 1) // s if obj._n else 0
        obj._rl = _pack.unpack_fixed(sections[0][1], nlb + 1, w_rl).astype(np.uint64)
        obj._rs = _pack.unpack_fixed(sections[1][1], nsb, w_rs).astype(np.uint32)
        obj._lptr = _pack.unpack_fixed(sections[2][1], nlb, w_lp).astype(np.uint64)
        obj._sptr = _pack.unpack_fixed(sections[3][1], nsb, w_sp).astype(np.uint32)
        obj._code = sections[4][1]
        obj._lentab = code_len_table(obj._s)
        obj._taboff, obj._tabdat = decode_tables(obj._s, obj._table_cap)
        obj._binom = binom_table()
        return obj
