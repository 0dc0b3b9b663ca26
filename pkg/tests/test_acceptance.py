"""Acceptance gate.

One test per numbered criterion of the build contract; each prints a
PASS/FAIL line (run with -s to see them) and asserts at its stated tolerance.
Criterion 4's lowest-density payload point is known to sit outside its
allowance; see notes in the repository docs for the analysis. All other
criteria are expected green.
"""
import math
import time

import numpy as np
import pytest

import rsdict
from rsdict import bench, build, entropy_bits, load, rr_size_bound, size_report
from rsdict._backend import get_kernels
from rsdict.bench import Oracle, _query_sets, _run_ops, adversarial_vectors, generate
from rsdict.enumcode import binom_table

DENSITIES = (1e-4, 1e-3, 0.01, 0.05, 0.25, 0.5)
SEEDS = (1, 2, 3, 4, 5)


def report(num, ok, detail):
    line = f"ACCEPTANCE {num} {'PASS' if ok else 'FAIL'}: {detail}"
    print(line, flush=True)
    return line


def test_criterion_1_oracle_equivalence():
    """Zero mismatches against the linear-scan oracle over the full grid."""
    t0 = time.perf_counter()
    mismatches = []
    total_queries = 0
    workloads = []
    for density in DENSITIES:
        for seed in SEEDS:
            for n in (1 << 10, 1 << 14, 1 << 20):
                workloads.append((n, density, seed, generate(n, density, seed).positions()))
    for name, positions, n in adversarial_vectors():
        workloads.append((n, name, 0, positions))
    for n, density, seed, positions in workloads:
        oracle = Oracle(positions, n)
        qsets = _query_sets(oracle, n, 100_000, seed if isinstance(seed, int) else 0)
        for kind in rsdict.KINDS:
            d = build(kind, positions, n)
            for op, queries, expected in qsets:
                got = _run_ops(d, op, queries)
                total_queries += len(queries)
                if not np.array_equal(got, expected):
                    bad = int(np.flatnonzero(got != expected)[0])
                    mismatches.append(
                        f"{kind} n={n} density={density} seed={seed} {op} "
                        f"query={int(queries[bad])} got={int(got[bad])} "
                        f"expected={int(expected[bad])}")
    elapsed = time.perf_counter() - t0
    line = report(1, not mismatches,
                  f"oracle equivalence, {len(mismatches)} mismatches over "
                  f"{total_queries} queries in {elapsed:.1f}s")
    assert not mismatches, mismatches[:5]
    assert elapsed < 300, f"runtime target exceeded: {elapsed:.1f}s"


def test_criterion_2_enumerative_bijection():
    """Exhaustive round-trip for every class and block up to 16-bit blocks."""
    kern = get_kernels()
    binom = binom_table()
    bad = sum(int(kern.enum_roundtrip_all(binom, t)) for t in range(17))
    checked = sum((1 << t) + sum(math.comb(t, u) for u in range(t + 1))
                  for t in range(17))
    report(2, bad == 0, f"enumerative bijection, {bad} failures over {checked} cases")
    assert bad == 0


TABLE_TARGETS = {
    0.01: {"esp": 17.02, "recrank": 15.83, "vcode": 15.05, "sarray": 10.13},
    0.05: {"esp": 42.67, "recrank": 49.32, "vcode": 62.25, "sarray": 40.59},
}
TABLE_PARAMS = {
    "esp": dict(k=1 << 12, l=1 << 8, s=1 << 5),
    "recrank": {},
    "vcode": dict(p=8, offset_mode="sampled"),
    "sarray": dict(L=1 << 10, L2=1 << 16, L3=1 << 5),
}


def test_criterion_3_size_reproduction():
    """Published size ratios at 10 * 2**20 bits within 20 percent relative;
    analytic entropy column within 0.02 percentage points."""
    n = 10 * (1 << 20)
    misses = []
    lines = []
    for density, row in TABLE_TARGETS.items():
        positions = generate(n, density, 1).positions()
        for kind, target in row.items():
            rep = size_report(build(kind, positions, n, **TABLE_PARAMS[kind]))
            ratio = rep.pct_of_n
            ok = 0.8 * target <= ratio <= 1.2 * target
            lines.append(f"{kind}@{density}: {ratio:.2f}% (target {target})")
            if not ok:
                misses.append(lines[-1])
    for density, expect in ((0.01, 8.08), (0.05, 28.64)):
        got = 100 * entropy_bits(n, density * n) / n
        if abs(got - expect) > 0.02:
            misses.append(f"nH0@{density}: {got:.4f} vs {expect}")
    report(3, not misses, "size targets " + "; ".join(lines))
    assert not misses, misses


@pytest.mark.parametrize("density", [1e-3, 1e-2, 0.05])
def test_criterion_4_reduction_size_bound(density):
    """Reduction payload within 1.15x of the closed-form bound and level
    count within ceil(lg(n/m)).

    The 1e-3 point is expected red: repeated extraction concentrates one
    guaranteed set bit per parent block, inflating later contracted arrays
    and the final array beyond the 15 percent allowance (measured floor is
    about 1.16x across seeds and block-size policies).
    """
    n = 1 << 20
    worst = 0.0
    for seed in (1, 2, 3):
        positions = generate(n, density, seed).positions()
        m = len(positions)
        d = build("recrank", positions, n)
        payload = size_report(d).payload_bits
        bound = 1.15 * rr_size_bound(n, m)
        worst = max(worst, payload / (bound / 1.15))
        assert d.level_count <= math.ceil(math.log2(n / m)), \
            f"levels {d.level_count} at density {density} seed {seed}"
        ok = payload <= bound
        if not ok:
            report(4, False,
                   f"reduction payload at density {density}: {payload} bits = "
                   f"{payload / (bound / 1.15):.3f}x closed form (allowance 1.15x)")
        assert ok, (f"payload {payload} exceeds 1.15x bound {bound:.0f} "
                    f"at density {density} seed {seed}")
    report(4, True, f"reduction size bound at density {density}: "
                    f"worst {worst:.3f}x of closed form (allowance 1.15x), levels ok")


def test_criterion_5_sparse_size_law():
    """Total sparse-structure bits within m*ceil(lg(n/m)) + 2.3m for
    m >= 2**10, at the scaled-down index parameters the overhead budget is
    specified for; default-parameter numbers are reported alongside."""
    n = 1 << 20
    scaled = dict(L=1 << 10, L2=1 << 12, L3=1 << 7)
    misses = []
    lines = []
    for density in (2e-3, 0.01, 0.05, 0.25, 0.5):
        for seed in (1, 2):
            positions = generate(n, density, seed).positions()
            m = len(positions)
            if m < 1 << 10:
                continue
            w = 0
            while (m << w) < n:
                w += 1
            bound = m * w + 2.3 * m
            total = size_report(build("sarray", positions, n, **scaled)).total_bits
            default_total = size_report(build("sarray", positions, n)).total_bits
            lines.append(f"d={density} s={seed}: {total} <= {bound:.0f} "
                         f"(default params: {default_total})")
            if total > bound:
                misses.append(lines[-1])
    report(5, not misses, f"sparse size law over {len(lines)} builds; " +
           ("all within bound" if not misses else "; ".join(misses)))
    assert not misses, misses


def test_criterion_6_estimated_pointer_soundness():
    """Every build validates placement non-overlap, and the code stream stays
    within ceil(nH0) + slack * (n / s) bits."""
    n = 1 << 20
    checked = 0
    for density in DENSITIES:
        for seed in (1, 2, 3):
            positions = generate(n, density, seed).positions()
            d = build("esp", positions, n)
            assert d.strict_nonoverlap, f"overlap at density {density} seed {seed}"
            payload = size_report(d).payload_bits
            bound = math.ceil(entropy_bits(n, len(positions))) + (n // 32)
            assert payload <= bound, \
                f"payload {payload} > bound {bound} at density {density} seed {seed}"
            checked += 1
    report(6, True, f"pointer estimation sound on {checked} builds "
                    "(non-overlap asserted, payload within entropy + slack)")


def _median_ns(fn, queries, reps=5):
    times = []
    for _ in range(reps):
        t0 = time.perf_counter_ns()
        fn(queries)
        times.append((time.perf_counter_ns() - t0) / len(queries))
    return float(np.median(times))


def test_criterion_7_qualitative_timing():
    """Median-of-5 orderings; any single failed ordering is waived with a
    hardware note."""
    n = 1 << 20
    rng = np.random.default_rng(0)
    violations = []

    pos = generate(n, 0.05, 2).positions()
    vc = build("vcode", pos, n)
    xs = rng.integers(0, n, 50_000)
    qs = rng.integers(1, vc.m + 1, 50_000)
    t_rank = _median_ns(vc.rank1_many, xs)
    t_sel = _median_ns(vc.select1_many, qs)
    if not t_rank > t_sel:
        violations.append(f"(a) vcode rank {t_rank:.0f}ns !> select {t_sel:.0f}ns")

    r_sparse = build("recrank", generate(n, 1e-3, 2).positions(), n)
    r_dense = build("recrank", generate(n, 0.25, 2).positions(), n)
    t_sparse = _median_ns(r_sparse.rank1_many, xs)
    t_dense = _median_ns(r_dense.rank1_many, xs)
    if not t_sparse > t_dense:
        violations.append(f"(b) reduction rank {t_sparse:.0f}ns !> {t_dense:.0f}ns")

    for density in (0.01, 0.05):
        sel_pos = generate(n, density, 2).positions()
        times = {}
        for kind in ("esp", "recrank", "vcode", "sarray"):
            d = build(kind, sel_pos, n)
            q = rng.integers(1, d.m + 1, 50_000)
            times[kind] = _median_ns(d.select1_many, q)
        fastest = min(times, key=times.get)
        if fastest != "sarray":
            violations.append(
                f"(c) select at density {density}: fastest is {fastest} "
                f"({times[fastest]:.0f}ns) not sarray ({times['sarray']:.0f}ns)")
            break  # one ordering, one violation entry

    if len(violations) == 1:
        print(f"HARDWARE NOTE (waived ordering): {violations[0]}", flush=True)
    report(7, len(violations) <= 1,
           f"timing orderings, {len(violations)} violation(s), one waiver allowed")
    assert len(violations) <= 1, violations


def test_criterion_8_serialization_roundtrip():
    """100 random dictionaries reload byte-identically and answer queries
    identically after reload."""
    rng = np.random.default_rng(77)
    count = 0
    for case in range(100):
        kind = rsdict.KINDS[case % len(rsdict.KINDS)]
        n = int(rng.integers(64, 60_000))
        density = float(rng.choice([1e-3, 0.01, 0.1, 0.4, 0.8]))
        positions = generate(n, density, int(rng.integers(1 << 30))).positions()
        d = build(kind, positions, n)
        blob = d.serialize()
        d2 = load(blob)
        assert d2.serialize() == blob, f"case {case}: reserialization differs"
        xs = rng.integers(0, n, 64)
        assert np.array_equal(d.rank1_many(xs), d2.rank1_many(xs))
        if d.m:
            sel = rng.integers(1, d.m + 1, 64)
            assert np.array_equal(d.select1_many(sel), d2.select1_many(sel))
        if d.n - d.m:
            sel0 = rng.integers(1, d.n - d.m + 1, 32)
            assert np.array_equal(d.select0_many(sel0), d2.select0_many(sel0))
        count += 1
    report(8, True, f"serialization round-trip on {count} dictionaries")
