import numpy as np
import pytest

import rsdict


def random_positions(n, density, seed):
    rng = np.random.Generator(np.random.PCG64(seed))
    return np.flatnonzero(rng.random(n) < density).astype(np.int64)


class RefDict:
    """Linear-scan reference for rank/select answers."""

    def __init__(self, positions, n):
        self.positions = np.asarray(positions, dtype=np.int64)
        self.n = int(n)
        self.m = len(self.positions)
        mask = np.ones(self.n, dtype=bool)
        mask[self.positions] = False
        self.zero_positions = np.flatnonzero(mask).astype(np.int64)

    def rank1(self, x):
        return int(np.searchsorted(self.positions, x, side="right"))

    def select1(self, i):
        return int(self.positions[i - 1])

    def rank0(self, x):
        return x + 1 - self.rank1(x)

    def select0(self, i):
        return int(self.zero_positions[i - 1])


def assert_matches_reference(d, ref, rng=None, samples=400):
    """Exhaustive comparison for small n, sampled otherwise."""
    n, m = ref.n, ref.m
    if n <= 4096:
        xs = np.arange(n, dtype=np.int64)
    else:
        xs = (rng or np.random.default_rng(0)).integers(0, n, samples)
    got = d.rank1_many(xs)
    exp = np.searchsorted(ref.positions, xs, side="right")
    assert np.array_equal(got, exp), f"rank1 diverges at x={xs[got != exp][0]}"
    if m:
        qs = np.arange(1, m + 1, dtype=np.int64) if m <= 4096 else \
            (rng or np.random.default_rng(1)).integers(1, m + 1, samples)
        got = d.select1_many(qs)
        exp = ref.positions[qs - 1]
        assert np.array_equal(got, exp), f"select1 diverges at i={qs[got != exp][0]}"
    z = n - m
    if z:
        qs = np.arange(1, z + 1, dtype=np.int64) if z <= 4096 else \
            (rng or np.random.default_rng(2)).integers(1, z + 1, samples)
        got = d.select0_many(qs)
        exp = ref.zero_positions[qs - 1]
        assert np.array_equal(got, exp), f"select0 diverges at i={qs[got != exp][0]}"


@pytest.fixture(params=rsdict.available_backends())
def backend(request):
    return request.param
