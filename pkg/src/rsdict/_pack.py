"""Bit-packing helpers shared by builders and the serialization layer.

All packed streams are little-endian within 64-bit words: bit i of the stream
lives in word i >> 6 at in-word offset i & 63.  Word buffers carry one extra
zero guard word so vectorized two-word gathers never index out of bounds; the
guard is never serialized.
"""
from __future__ import annotations

import numpy as np

WORD = 64

POP8 = np.array([bin(i).count("1") for i in range(256)], dtype=np.uint8)

_U64 = np.uint64
_FULL = _U64(0xFFFFFFFFFFFFFFFF)


def alloc_words(nbits: int) -> np.ndarray:
    """Zeroed u64 buffer for nbits of stream plus one guard word."""
    return np.zeros((max(0, nbits) + 63) // 64 + 1, dtype=np.uint64)


def trim_words(words: np.ndarray, nbits: int) -> np.ndarray:
    """Drop the guard: exactly ceil(nbits/64) words."""
    return words[: (nbits + 63) // 64]


def with_guard(words: np.ndarray) -> np.ndarray:
    out = np.zeros(len(words) + 1, dtype=np.uint64)
    out[: len(words)] = words
    return out


def width_for(maxval: int) -> int:
    """Bits needed to store values in [0, maxval]."""
    return int(maxval).bit_length()


def scatter_bits(words: np.ndarray, positions, widths, values) -> None:
    """OR variable-width values into a word buffer at the given bit positions.

    positions/widths/values are broadcastable 1-d arrays; widths <= 64 and
    values must fit their widths.  Entries with width 0 are skipped.
    """
    positions = np.asarray(positions, dtype=np.int64)
    widths = np.broadcast_to(np.asarray(widths, dtype=np.int64), positions.shape)
    values = np.asarray(values, dtype=np.uint64)
    keep = widths > 0
    if not keep.all():
        positions, widths, values = positions[keep], widths[keep], values[keep]
    if len(positions) == 0:
        return
    mask = np.where(widths >= 64, _FULL, (_U64(1) << widths.astype(np.uint64)) - _U64(1))
    values = values & mask
    w0 = positions >> 6
    sh = (positions & 63).astype(np.uint64)
    np.bitwise_or.at(words, w0, values << sh)
    spill = (positions & 63) + widths > 64
    if spill.any():
        # sh >= 1 whenever a value spills, so the shift below stays in range
        np.bitwise_or.at(
            words, w0[spill] + 1, values[spill] >> (_U64(64) - sh[spill])
        )


def pack_fixed(values, width: int) -> np.ndarray:
    """Pack values at a fixed width; returns a guarded word buffer."""
    values = np.asarray(values)
    words = alloc_words(len(values) * width)
    if width and len(values):
        scatter_bits(words, np.arange(len(values), dtype=np.int64) * width, width, values)
    return words


def gather_bits(words: np.ndarray, positions, width: int) -> np.ndarray:
    """Read a fixed-width field at each bit position (guarded buffer)."""
    positions = np.asarray(positions, dtype=np.int64)
    if width == 0 or len(positions) == 0:
        return np.zeros(len(positions), dtype=np.uint64)
    w0 = positions >> 6
    sh = (positions & 63).astype(np.uint64)
    lo = words[w0] >> sh
    spill = (positions & 63) + width > 64
    if spill.any():
        lo[spill] |= words[w0[spill] + 1] << (_U64(64) - sh[spill])
    if width >= 64:
        return lo
    return lo & ((_U64(1) << _U64(width)) - _U64(1))


def unpack_fixed(words: np.ndarray, count: int, width: int) -> np.ndarray:
    """Inverse of pack_fixed; requires the guarded buffer."""
    return gather_bits(words, np.arange(count, dtype=np.int64) * width, width)


def bits_to_words(bits: np.ndarray) -> np.ndarray:
    """Pack a 0/1 uint8 array into a guarded u64 word buffer."""
    by = np.packbits(bits.astype(np.uint8), bitorder="little")
    pad = (-len(by)) % 8
    if pad:
        by = np.concatenate([by, np.zeros(pad, dtype=np.uint8)])
    out = np.zeros(len(by) // 8 + 1, dtype=np.uint64)
    if len(by):
        out[:-1] = by.view(np.uint64)
    return out


def words_to_bits(words: np.ndarray, n: int) -> np.ndarray:
    """Unpack n bits of a word buffer into a 0/1 uint8 array."""
    by = words.view(np.uint8)[: (n + 7) // 8]
    return np.unpackbits(by, count=n, bitorder="little")


def positions_to_words(positions: np.ndarray, n: int) -> np.ndarray:
    words = alloc_words(n)
    if len(positions):
        pos = np.asarray(positions, dtype=np.int64)
        np.bitwise_or.at(words, pos >> 6, _U64(1) << (pos & 63).astype(np.uint64))
    return words


def byte_cumsum(words: np.ndarray, n: int) -> np.ndarray:
    """cum[k] = number of set bits among the first k bytes (bits [0, 8k))."""
    nbytes = (n + 7) // 8
    cum = np.zeros(nbytes + 1, dtype=np.int64)
    if nbytes:
        np.cumsum(POP8[words.view(np.uint8)[:nbytes]], out=cum[1:], dtype=np.int64)
    return cum
