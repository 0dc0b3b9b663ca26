"""Dataset generation, brute-force verification, and query timing.

Vectors are generated with numpy's PCG64 generator: bit i is set when the
i-th draw of Generator(PCG64(seed)).random(n) falls below the density, so a
(n, density, seed) triple always produces the identical vector.  The oracle
is the sorted position list itself: rank by binary search, select by direct
indexing.  Timings are medians over repeated batch runs and are reported for
information only; sizes are exact bit counts.
"""
from __future__ import annotations

import csv
import io
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from rsdict import api
from rsdict.bitcore import RawBitVector
from rsdict.enumcode import entropy_bits

CSV_HEADER = ["structure", "n", "density", "seed", "op",
              "ns_per_op", "size_bits", "pct_of_n", "pct_of_nH0"]

EXHAUSTIVE_LIMIT = 1 << 14


def generate(n: int, density: float, seed: int, exact_m: bool = False) -> RawBitVector:
    """Deterministic random vector; per-bit Bernoulli by default, or exactly
    round(density * n) ones with exact_m."""
    if not 0.0 <= density <= 1.0:
        raise ValueError(f"density must be in [0, 1], got {density}")
    rng = np.random.Generator(np.random.PCG64(seed))
    if exact_m:
        m = round(density * n)
        positions = np.sort(rng.choice(n, size=m, replace=False)).astype(np.int64)
    else:
        positions = np.flatnonzero(rng.random(n) < density).astype(np.int64)
    return RawBitVector.from_positions(positions, n)


def adversarial_vectors(n: int = 4100) -> list[tuple[str, np.ndarray, int]]:
    """Degenerate and structured vectors; n is deliberately not a multiple of
    the word size."""
    out = [
        ("all_zero", np.zeros(0, dtype=np.int64), n),
        ("all_one", np.arange(n, dtype=np.int64), n),
        ("single_first", np.array([0], dtype=np.int64), n),
        ("single_last", np.array([n - 1], dtype=np.int64), n),
        ("periodic_17", np.arange(0, n, 17, dtype=np.int64), n),
        ("half_run", np.arange(n // 2, dtype=np.int64), n),
        ("edge_pair", np.array([0, n - 1], dtype=np.int64), n),
    ]
    runs = []
    pos = 3
    width = 1
    while pos + width < n:
        runs.extend(range(pos, min(pos + width, n)))
        pos += 2 * width + 1
        width = width * 2 + 1
    out.append(("runs", np.array(sorted(set(runs)), dtype=np.int64), n))
    return out


class Oracle:
    """Linear-scan ground truth over the sorted position list."""

    def __init__(self, positions: np.ndarray, n: int):
        self.positions = np.asarray(positions, dtype=np.int64)
        self.n = int(n)
        self.m = len(self.positions)

    def rank1_many(self, xs) -> np.ndarray:
        return np.searchsorted(self.positions, np.asarray(xs), side="right").astype(np.int64)

    def select1_many(self, qs) -> np.ndarray:
        return self.positions[np.asarray(qs) - 1]

    def zeros(self) -> np.ndarray:
        mask = np.ones(self.n, dtype=bool)
        mask[self.positions] = False
        return np.flatnonzero(mask).astype(np.int64)


@dataclass
class CaseResult:
    structure: str
    n: int
    density: float | str
    seed: int
    op: str
    queries: int
    ok: bool
    detail: str = ""


@dataclass
class VerifyReport:
    cases: list[CaseResult] = field(default_factory=list)
    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.cases)

    def first_failure(self):
        return next((c for c in self.cases if not c.ok), None)


def _query_sets(oracle: Oracle, n: int, ops: int, seed: int):
    """(op name, queries, expected) triples for one vector."""
    rng = np.random.Generator(np.random.PCG64(seed ^ 0x5EED))
    zeros = oracle.zeros()
    out = []
    if n <= EXHAUSTIVE_LIMIT:
        xs = np.arange(n, dtype=np.int64)
        sel = np.arange(1, oracle.m + 1, dtype=np.int64)
        sel0 = np.arange(1, n - oracle.m + 1, dtype=np.int64)
    else:
        xs = rng.integers(0, n, size=ops, dtype=np.int64)
        sel = (rng.integers(0, oracle.m, size=ops, dtype=np.int64) + 1
               if oracle.m else np.zeros(0, dtype=np.int64))
        z = n - oracle.m
        sel0 = (rng.integers(0, z, size=ops, dtype=np.int64) + 1
                if z else np.zeros(0, dtype=np.int64))
    out.append(("rank", xs, oracle.rank1_many(xs)))
    out.append(("rank0", xs, xs + 1 - oracle.rank1_many(xs)))
    if len(sel):
        out.append(("select", sel, oracle.select1_many(sel)))
    if len(sel0):
        out.append(("select0", sel0, zeros[sel0 - 1]))
    return out


def _run_ops(d, op, queries):
    if op == "rank":
        return d.rank1_many(queries)
    if op == "rank0":
        return queries + 1 - d.rank1_many(queries)
    if op == "select":
        return d.select1_many(queries)
    if op == "select0":
        return d.select0_many(queries)
    raise ValueError(f"unknown op {op}")


def _verify_one(structure, positions, n, density, seed, ops, params, backend):
    out = []
    oracle = Oracle(positions, n)
    try:
        d = api.build(structure, positions, n, backend=backend,
                      **params.get(structure, {}))
    except Exception as exc:  # build failure is a verification failure
        return [CaseResult(structure, n, density, seed, "build", 0, False, repr(exc))]
    for op, queries, expected in _query_sets(oracle, n, ops, seed):
        got = _run_ops(d, op, queries)
        if np.array_equal(got, expected):
            out.append(CaseResult(structure, n, density, seed, op, len(queries), True))
        else:
            bad = int(np.flatnonzero(got != expected)[0])
            out.append(CaseResult(
                structure, n, density, seed, op, len(queries), False,
                f"query {int(queries[bad])} -> {int(got[bad])}, "
                f"expected {int(expected[bad])}"))
    return out


def verify(structures, n, densities, seed, ops=100_000, params=None,
           backend=None, exact_m=False, include_adversarial=True) -> VerifyReport:
    """Build every structure on every workload and compare against the oracle."""
    params = params or {}
    jobs = []
    for density in densities:
        vec = generate(n, density, seed, exact_m=exact_m)
        positions = vec.positions()
        for structure in structures:
            jobs.append((structure, positions, n, density, seed))
    if include_adversarial:
        for name, positions, an in adversarial_vectors():
            for structure in structures:
                jobs.append((structure, positions, an, name, seed))
    report = VerifyReport()
    threads = int(os.environ.get("RSDICT_THREADS", "1"))
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            futures = [pool.submit(_verify_one, st, pos, nn, dens, seed, ops,
                                   params, backend)
                       for st, pos, nn, dens, seed in jobs]
            for fut in futures:
                report.cases.extend(fut.result())
    else:
        for st, pos, nn, dens, sd in jobs:
            report.cases.extend(_verify_one(st, pos, nn, dens, sd, ops, params, backend))
    return report


def measure(structures, n, densities, seed, ops=20_000, reps=5, params=None,
            backend=None, exact_m=False) -> list[dict]:
    """Median per-op wall-clock timings plus exact size columns."""
    params = params or {}
    rows = []
    rng = np.random.Generator(np.random.PCG64(seed ^ 0xBE))
    for density in densities:
        vec = generate(n, density, seed, exact_m=exact_m)
        positions = vec.positions()
        nh0 = entropy_bits(n, len(positions))
        for structure in structures:
            d = api.build(structure, positions, n, backend=backend,
                          **params.get(structure, {}))
            rep = api.size_report(d)
            for op in ("rank", "select", "select0"):
                if op == "select" and d.m == 0:
                    continue
                if op == "select0" and d.m == d.n:
                    continue
                count = ops if (op == "rank" or d.select0_native or op == "select") \
                    else max(1, ops // 10)
                if op == "rank":
                    queries = rng.integers(0, n, size=count, dtype=np.int64)
                elif op == "select":
                    queries = rng.integers(0, d.m, size=count, dtype=np.int64) + 1
                else:
                    queries = rng.integers(0, d.n - d.m, size=count, dtype=np.int64) + 1
                sink = _run_ops(d, op, queries)  # warmup; also defeats dead code
                times = []
                for _ in range(reps):
                    t0 = time.perf_counter_ns()
                    sink = _run_ops(d, op, queries)
                    times.append((time.perf_counter_ns() - t0) / len(queries))
                assert int(sink.sum()) >= 0
                rows.append({
                    "structure": structure, "n": n, "density": density,
                    "seed": seed, "op": op,
                    "ns_per_op": round(float(np.median(times)), 2),
                    "size_bits": rep.total_bits,
                    "pct_of_n": round(rep.pct_of_n, 4),
                    "pct_of_nH0": (round(rep.pct_of_nh0, 4)
                                   if rep.pct_of_nh0 is not None else ""),
                })
    return rows


def rows_to_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_HEADER)
    writer.writeheader()
    for row in rows:
        writer.writerow({k: row.get(k, "") for k in CSV_HEADER})
    return buf.getvalue()
