"""Entropy-compressed rank/select dictionaries over static bit vectors.

Seven interchangeable structures behind one interface: a verbatim baseline
(plain), enumerative-coded blocks with explicit pointers (ent) or estimated
pointers (esp), recursive sparse reduction (recrank), gap bit planes (vcode),
and the dense/sparse select pair (darray / sarray).  Queries run on a
compiled kernel extension when it is available, with a pure-Python fallback
selected at import (RSDICT_PURE=1 forces it).
"""
from rsdict._backend import BACKEND, available_backends, get_kernels
from rsdict.api import KINDS, RankSelectDict, SizeReport, build, load, size_report
from rsdict.bitcore import RawBitVector
from rsdict.enumcode import (
    bbound_bits,
    entropy_bits,
    enum_decode,
    enum_encode,
)
from rsdict.esp import estimate_pointer
from rsdict.recrank import choose_block_size, rr_size_bound

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "KINDS",
    "RankSelectDict",
    "RawBitVector",
    "SizeReport",
    "available_backends",
    "bbound_bits",
    "build",
    "choose_block_size",
    "entropy_bits",
    "enum_decode",
    "enum_encode",
    "estimate_pointer",
    "get_kernels",
    "load",
    "rr_size_bound",
    "size_report",
    "__version__",
]
