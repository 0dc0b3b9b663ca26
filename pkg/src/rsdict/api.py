"""Unified dictionary interface, builders, and the container format.

Conventions (shared by every structure in this package):
  rank1(x):   number of set bits at positions <= x (inclusive), 0 <= x < n
  select1(i): position of the i-th set bit, 1-based, 1 <= i <= m
  rank0/select0: the same over zeros; rank0(x) = x + 1 - rank1(x)

Out-of-range rank positions raise IndexError; select ranks outside their
domain raise ValueError.  Built dictionaries are immutable and safe to share
across threads.

Container format (all integers little-endian):
  magic "RSDICT01" (8 bytes), u16 version, u8 structure tag, u32 param-block
  length, param block, u64 payload bit-length, payload as 64-bit words, and an
  8-byte checksum (leading 8 bytes of SHA-256 over everything preceding it).
The payload is a sequence of sections, each a u64 bit-length followed by the
section's words; section order and widths are fixed per structure.
"""
from __future__ import annotations

import hashlib
import struct
from abc import ABC, abstractmethod
from dataclasses import dataclass, field

import numpy as np

from rsdict import _pack
from rsdict.bitcore import RawBitVector

MAGIC = b"RSDICT01"
VERSION = 1

KINDS = ("plain", "ent", "esp", "recrank", "vcode", "sarray", "darray")
_TAGS = {kind: i + 1 for i, kind in enumerate(KINDS)}


class RankSelectDict(ABC):
    """Interface every dictionary implements; see module docstring for the
    rank/select conventions."""

    KIND = ""
    select0_native = False

    @property
    @abstractmethod
    def n(self) -> int: ...

    @property
    @abstractmethod
    def m(self) -> int: ...

    @abstractmethod
    def rank1(self, x: int) -> int: ...

    @abstractmethod
    def select1(self, i: int) -> int: ...

    def rank0(self, x: int) -> int:
        return x + 1 - self.rank1(x)

    def select0(self, i: int) -> int:
        """Binary search over rank0; overridden by structures with native
        zero-side support."""
        z = self.n - self.m
        if not 1 <= i <= z:
            raise ValueError(f"select0 rank {i} outside [1, {z}]")
        lo, hi = 0, self.n - 1
        while lo < hi:
            mid = (lo + hi) >> 1
            if self.rank0(mid) < i:
                lo = mid + 1
            else:
                hi = mid
        return lo

    # batch entry points; subclasses route these to kernel loops
    def rank1_many(self, xs) -> np.ndarray:
        return np.fromiter((self.rank1(int(x)) for x in xs), count=len(xs), dtype=np.int64)

    def select1_many(self, qs) -> np.ndarray:
        return np.fromiter((self.select1(int(q)) for q in qs), count=len(qs), dtype=np.int64)

    def select0_many(self, qs) -> np.ndarray:
        return np.fromiter((self.select0(int(q)) for q in qs), count=len(qs), dtype=np.int64)

    def _check_rank_arg(self, x: int) -> None:
        if not 0 <= x < self.n:
            raise IndexError(f"rank position {x} outside [0, {self.n})")

    def _check_select_arg(self, i: int) -> None:
        if not 1 <= i <= self.m:
            raise ValueError(f"select rank {i} outside [1, {self.m}]")

    # ---- size accounting ------------------------------------------------
    @abstractmethod
    def _size_parts(self) -> list[tuple[str, int, bool]]:
        """(name, bits, is_payload) triples; bits are serialized widths."""

    def size_in_bits(self) -> int:
        return sum(bits for _, bits, _ in self._size_parts())

    # ---- serialization --------------------------------------------------
    @abstractmethod
    def _param_blob(self) -> bytes: ...

    @abstractmethod
    def _sections(self) -> list[tuple[int, np.ndarray]]:
        """(bit_length, guarded word buffer) pairs in fixed order."""

    def serialize(self) -> bytes:
        params = self._param_blob()
        chunks = []
        for bits, words in self._sections():
            chunks.append(struct.pack("<Q", bits))
            chunks.append(_pack.trim_words(words, bits).astype("<u8").tobytes())
        payload = b"".join(chunks)
        head = MAGIC + struct.pack("<HBI", VERSION, _TAGS[self.KIND], len(params))
        body = head + params + struct.pack("<Q", len(payload) * 8) + payload
        return body + hashlib.sha256(body).digest()[:8]


def _parse_container(data: bytes):
    if len(data) < len(MAGIC) + 7 + 8 + 8:
        raise ValueError("container too short")
    if data[:8] != MAGIC:
        raise ValueError("bad magic; not an rsdict container")
    if hashlib.sha256(data[:-8]).digest()[:8] != data[-8:]:
        raise ValueError("checksum mismatch; container is corrupt")
    version, tag, plen = struct.unpack_from("<HBI", data, 8)
    if version != VERSION:
        raise ValueError(f"unsupported container version {version}")
    off = 8 + 7
    params = data[off : off + plen]
    off += plen
    (payload_bits,) = struct.unpack_from("<Q", data, off)
    off += 8
    payload = data[off : off + payload_bits // 8]
    if len(payload) * 8 != payload_bits or off + len(payload) + 8 != len(data):
        raise ValueError("container payload length mismatch")
    sections = []
    pos = 0
    while pos < len(payload):
        (bits,) = struct.unpack_from("<Q", payload, pos)
        pos += 8
        nwords = (bits + 63) // 64
        if pos + nwords * 8 > len(payload):
            raise ValueError("truncated section")
        arr = np.frombuffer(payload, dtype="<u8", offset=pos, count=nwords).astype(np.uint64)
        sections.append((bits, _pack.with_guard(arr)))
        pos += nwords * 8
    kind = KINDS[tag - 1] if 1 <= tag <= len(KINDS) else None
    if kind is None:
        raise ValueError(f"unknown structure tag {tag}")
    return kind, params, sections


@dataclass
class SizeReport:
    kind: str
    n: int
    m: int
    payload_bits: int
    directory_bits: int
    total_bits: int
    pct_of_n: float
    pct_of_nh0: float | None
    parts: dict = field(default_factory=dict)

    def as_row(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "m": self.m,
            "payload_bits": self.payload_bits,
            "directory_bits": self.directory_bits,
            "total_bits": self.total_bits,
            "pct_of_n": self.pct_of_n,
            "pct_of_nh0": self.pct_of_nh0,
        }


def size_report(d: RankSelectDict) -> SizeReport:
    from rsdict.enumcode import entropy_bits

    parts = d._size_parts()
    payload = sum(b for _, b, is_p in parts if is_p)
    directory = sum(b for _, b, is_p in parts if not is_p)
    total = payload + directory
    nh0 = entropy_bits(d.n, d.m)
    return SizeReport(
        kind=d.KIND,
        n=d.n,
        m=d.m,
        payload_bits=payload,
        directory_bits=directory,
        total_bits=total,
        pct_of_n=100.0 * total / d.n if d.n else 0.0,
        pct_of_nh0=100.0 * total / nh0 if nh0 > 0 else None,
        parts={name: bits for name, bits, _ in parts},
    )


def _registry():
    from rsdict.enumcode import EntRankSelect
    from rsdict.esp import EspRankSelect
    from rsdict.plainrs import PlainRankSelect
    from rsdict.recrank import RecRank
    from rsdict.sdarray import DArray, SArray
    from rsdict.vcode import VerticalCode

    return {
        "plain": PlainRankSelect,
        "ent": EntRankSelect,
        "esp": EspRankSelect,
        "recrank": RecRank,
        "vcode": VerticalCode,
        "sarray": SArray,
        "darray": DArray,
    }


def build(kind: str, source, n: int | None = None, *, backend=None, **params) -> RankSelectDict:
    """Build a dictionary of the given kind.

    source is either a RawBitVector or a strictly increasing position list
    (then n is required).  Structure parameters are passed as keyword
    arguments (e.g. l, s, k, slack, p, L, L2, L3, offset_mode).
    """
    registry = _registry()
    if kind not in registry:
        raise ValueError(f"unknown structure kind {kind!r}; expected one of {KINDS}")
    if isinstance(source, RawBitVector):
        positions = source.positions()
        n = source.n
    else:
        if n is None:
            raise ValueError("n is required when building from a position list")
        positions = np.asarray(source, dtype=np.int64)
        if len(positions):
            if positions[0] < 0 or positions[-1] >= n:
                raise ValueError("positions out of range")
            if np.any(np.diff(positions) <= 0):
                raise ValueError("positions must be strictly increasing (no duplicates)")
    return registry[kind](positions, int(n), backend=backend, **params)


def load(data: bytes, *, backend=None) -> RankSelectDict:
    """Reconstruct a dictionary from container bytes."""
    kind, params, sections = _parse_container(data)
    return _registry()[kind]._deserialize(params, sections, backend)
