"""Reproducible random generation: sample matrices and Dirichlet draws.

Every generator is derived from a :class:`SeedSpec` through
``numpy.random.SeedSequence(master_seed, spawn_key=(stream_id, *substream))``,
so replication ``r`` of a study can use ``stream_id = r`` and produce the
same numbers regardless of execution order.
"""

from dataclasses import dataclass, field

import numpy as np

from .bitlattice import check_dim
from .core import ProbabilityTable
from .errors import DomainError


@dataclass(frozen=True)
class SeedSpec:
    master_seed: int = 1234
    stream_id: int = 0
    substream: tuple = field(default=())

    def __post_init__(self):
        if not 0 <= self.master_seed < 2**64:
            raise DomainError(f"master_seed must be a 64-bit unsigned integer, got {self.master_seed}")
        if self.stream_id < 0:
            raise DomainError(f"stream_id must be non-negative, got {self.stream_id}")

    def child(self, index):
        """An independent sub-stream of this stream."""
        return SeedSpec(self.master_seed, self.stream_id, self.substream + (int(index),))

    def generator(self):
        seq = np.random.SeedSequence(self.master_seed, spawn_key=(self.stream_id, *self.substream))
        return np.random.Generator(np.random.PCG64(seq))


def _as_seed(seed):
    if seed is None:
        return SeedSpec()
    if isinstance(seed, SeedSpec):
        return seed
    return SeedSpec(int(seed))


class SampleMatrix:
    """``m`` observed binary patterns over ``n`` variables, one row per observation."""

    __slots__ = ("rows", "names")

    def __init__(self, rows, names=None):
        arr = np.asarray(rows)
        if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
            raise DomainError(f"sample matrix must be a non-empty 2-d array, got shape {arr.shape}")
        if not np.all((arr == 0) | (arr == 1)):
            raise DomainError("sample matrix cells must be 0 or 1")
        arr = arr.astype(np.uint8)
        check_dim(arr.shape[1])
        arr.flags.writeable = False
        if names is None:
            names = tuple(f"X{k}" for k in range(1, arr.shape[1] + 1))
        names = tuple(names)
        if len(names) != arr.shape[1]:
            raise DomainError(f"expected {arr.shape[1]} column names, got {len(names)}")
        self.rows = arr
        self.names = names

    @property
    def m(self):
        return self.rows.shape[0]

    @property
    def n(self):
        return self.rows.shape[1]

    def ranks(self):
        """0-based rank of every row (pattern read as a big-endian integer)."""
        weights = 1 << np.arange(self.n - 1, -1, -1, dtype=np.int64)
        return self.rows.astype(np.int64) @ weights

    def select(self, columns):
        """Sub-matrix with the given 1-based columns, in the order given."""
        idx = [int(c) - 1 for c in columns]
        return SampleMatrix(self.rows[:, idx], [self.names[i] for i in idx])

    def __len__(self):
        return self.m

    def __repr__(self):
        return f"SampleMatrix(m={self.m}, n={self.n}, names={self.names!r})"


def simulate(table, m, seed=None):
    """Draw ``m`` independent patterns from ``table`` by inverse-CDF over its cells."""
    if m < 1:
        raise DomainError(f"sample size must be at least 1, got {m}")
    rng = _as_seed(seed).generator()
    cdf = np.cumsum(table.p)
    cdf /= cdf[-1]
    u = rng.random(m)
    ranks = np.searchsorted(cdf, u, side="right")
    np.minimum(ranks, table.p.size - 1, out=ranks)
    n = table.n
    shifts = np.arange(n - 1, -1, -1)
    rows = (ranks[:, None] >> shifts) & 1
    return SampleMatrix(rows, table.names)


def dirichlet_draws(alphas, size, seed=None):
    """``size`` Dirichlet vectors as rows, built from normalised gamma variates."""
    alphas = np.asarray(alphas, dtype=np.float64)
    if alphas.ndim != 1 or alphas.size < 2:
        raise DomainError("need at least two concentration parameters")
    if not np.all(alphas > 0) or not np.all(np.isfinite(alphas)):
        raise DomainError("every concentration parameter must be positive and finite")
    rng = _as_seed(seed).generator()
    g = rng.standard_gamma(alphas, size=(size, alphas.size))
    total = g.sum(axis=1, keepdims=True)
    # rows where every variate underflowed (tiny alphas) put all mass on the largest alpha
    empty = total[:, 0] == 0
    if np.any(empty):
        g[empty, np.argmax(alphas)] = 1.0
        total[empty] = 1.0
    return g / total


def dirichlet_draw(alphas, seed=None):
    return dirichlet_draws(alphas, 1, seed)[0]


def empirical_table(sample):
    """Relative pattern frequencies of ``sample`` as a :class:`ProbabilityTable`."""
    counts = np.bincount(sample.ranks(), minlength=1 << sample.n)
    return ProbabilityTable(counts / sample.m, n=sample.n, names=sample.names)
