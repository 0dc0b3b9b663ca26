"""Word-packed static bit vector: the universe representation.

Bit i lives in word i >> 6 at in-word offset i & 63 (LSB first).  Bits at
indices >= n in the last word are zero.  Instances are immutable after
construction and safe for concurrent readers.
"""
from __future__ import annotations

import struct

import numpy as np

from rsdict import _pack
from rsdict._backend import get_kernels


class RawBitVector:
    __slots__ = ("words", "n")

    def __init__(self, n: int, words: np.ndarray | None = None):
        if n < 0:
            raise ValueError("n must be >= 0")
        self.n = int(n)
        if words is None:
            words = _pack.alloc_words(self.n)
        else:
            words = np.ascontiguousarray(words, dtype=np.uint64)
            need = (self.n + 63) // 64
            if len(words) < need:
                raise ValueError("word buffer too short for n bits")
            if len(words) == need:
                words = _pack.with_guard(words)
            self._mask_tail(words)
        self.words = words

    def _mask_tail(self, words: np.ndarray) -> None:
        need = (self.n + 63) // 64
        tail = self.n & 63
        if need and tail:
            words[need - 1] &= np.uint64((1 << tail) - 1)
        words[need:] = 0

    @classmethod
    def from_positions(cls, positions, n: int) -> "RawBitVector":
        positions = np.asarray(positions, dtype=np.int64)
        if len(positions):
            if positions[0] < 0 or positions[-1] >= n:
                raise ValueError("positions out of range")
            if np.any(np.diff(positions) <= 0):
                raise ValueError("positions must be strictly increasing")
        return cls(n, _pack.positions_to_words(positions, n))

    @classmethod
    def from_bits(cls, bits) -> "RawBitVector":
        bits = np.asarray(bits, dtype=np.uint8)
        return cls(len(bits), _pack.bits_to_words(bits))

    def get(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise IndexError(f"bit index {i} out of range [0, {self.n})")
        return get_kernels().get_bit(self.words, i)

    def popcount_range(self, start: int, length: int) -> int:
        if start < 0 or length < 0 or start + length > self.n:
            raise IndexError(
                f"range [{start}, {start}+{length}) outside [0, {self.n})"
            )
        return get_kernels().popcount_range(self.words, start, length)

    def count(self) -> int:
        return self.popcount_range(0, self.n)

    def positions(self) -> np.ndarray:
        """Sorted indices of the set bits."""
        return np.flatnonzero(_pack.words_to_bits(self.words, self.n)).astype(np.int64)

    def bits(self) -> np.ndarray:
        return _pack.words_to_bits(self.words, self.n)

    # serialized as: u64 n, then ceil(n/64) little-endian 64-bit words
    def to_bytes(self) -> bytes:
        body = _pack.trim_words(self.words, self.n)
        return struct.pack("<Q", self.n) + body.astype("<u8").tobytes()

    @classmethod
    def from_bytes(cls, data: bytes) -> "RawBitVector":
        if len(data) < 8:
            raise ValueError("truncated bit vector")
        (n,) = struct.unpack_from("<Q", data, 0)
        need = (n + 63) // 64
        if len(data) != 8 + 8 * need:
            raise ValueError("bit vector length mismatch")
        words = np.frombuffer(data, dtype="<u8", offset=8, count=need).astype(np.uint64)
        return cls(n, words)

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other) -> bool:
        if not isinstance(other, RawBitVector):
            return NotImplemented
        a = _pack.trim_words(self.words, self.n)
        b = _pack.trim_words(other.words, other.n)
        return self.n == other.n and bool(np.array_equal(a, b))

    def __repr__(self) -> str:
        return f"RawBitVector(n={self.n})"
