"""Indexing between binary patterns, pattern ranks and subset masks.

Conventions
-----------
Variable 1 is always the most significant bit.  A pattern ``(i1, ..., in)``
has rank ``r = 1 + int("i1...in", 2)`` so that ranks ``1..2**n`` enumerate
``000, 001, ..., 111`` in that order.  A subset ``A`` of ``{1, ..., n}`` is
encoded as the integer whose bit for variable ``k`` is ``1 << (n - k)``.
With this convention a 0-based position in a probability vector *is* the
pattern read as a bit mask, and both transforms below act on it directly.
"""

from itertools import combinations

import numpy as np

from .errors import DomainError

MAX_DIM = 24


def check_dim(n):
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool):
        raise DomainError(f"dimension must be an integer, got {n!r}")
    if not 1 <= n <= MAX_DIM:
        raise DomainError(f"dimension must lie in [1, {MAX_DIM}], got {n}")
    return int(n)


def pattern_of_rank(n, r):
    """Return the n-bit pattern of rank ``r`` (1-based), variable 1 first.

    >>> pattern_of_rank(3, 4)
    (0, 1, 1)
    """
    n = check_dim(n)
    if not 1 <= r <= 1 << n:
        raise DomainError(f"rank {r} outside [1, {1 << n}] for n={n}")
    x = r - 1
    return tuple((x >> (n - 1 - k)) & 1 for k in range(n))


def rank_of_pattern(pattern):
    """Inverse of :func:`pattern_of_rank`.

    >>> rank_of_pattern((0, 1, 0))
    3
    """
    bits = tuple(int(b) for b in pattern)
    check_dim(len(bits))
    x = 0
    for b in bits:
        if b not in (0, 1):
            raise DomainError(f"pattern entries must be 0 or 1, got {pattern!r}")
        x = (x << 1) | b
    return x + 1


def mask_of_subset(n, members):
    """Encode 1-based variable indices as a subset mask."""
    n = check_dim(n)
    mask = 0
    for k in members:
        k = int(k)
        if not 1 <= k <= n:
            raise DomainError(f"variable index {k} outside [1, {n}]")
        mask |= 1 << (n - k)
    return mask


def subset_of_mask(n, mask):
    """Decode a subset mask into the sorted tuple of 1-based indices."""
    n = check_dim(n)
    if not 0 <= mask < 1 << n:
        raise DomainError(f"mask {mask} outside [0, {(1 << n) - 1}] for n={n}")
    return tuple(k for k in range(1, n + 1) if mask >> (n - k) & 1)


def as_mask(n, subset):
    """Accept either an integer mask or an iterable of 1-based indices."""
    if isinstance(subset, (int, np.integer)) and not isinstance(subset, bool):
        subset_of_mask(n, int(subset))
        return int(subset)
    return mask_of_subset(n, subset)


def popcounts(n):
    """Cardinality of every mask ``0 .. 2**n - 1`` as an int array."""
    size = 1 << check_dim(n)
    out = np.zeros(size, dtype=np.int64)
    for j in range(n):
        out += (np.arange(size) >> j) & 1
    return out


def format_subset(n, mask):
    return "{" + ",".join(str(k) for k in subset_of_mask(n, mask)) + "}"


def report_order(n, min_size=1):
    """Masks in report order: largest subsets first, then colex within a size.

    Colex on the member tuples gives ``{1,2}, {1,3}, {2,3}, {1,4}, ...``,
    the row order used by published dependence tables.
    """
    n = check_dim(n)
    order = []
    for size in range(n, min_size - 1, -1):
        subsets = sorted(combinations(range(1, n + 1), size), key=lambda s: s[::-1])
        order.extend(mask_of_subset(n, s) for s in subsets)
    return order


def _transform(values, n, sign, out):
    arr = np.asarray(values, dtype=np.float64)
    n = check_dim(n)
    size = 1 << n
    if arr.shape[-1:] != (size,):
        raise DomainError(f"expected a trailing axis of length {size}, got shape {arr.shape}")
    if out is None:
        out = arr.copy()
    else:
        if out.shape != arr.shape or out.dtype != np.float64 or not out.flags.c_contiguous:
            raise DomainError("output buffer must be a C-contiguous float64 array of the input shape")
        if out is not arr:
            np.copyto(out, arr)
    lead = out.shape[:-1]
    # Passes run from the lowest bit upwards; the order is fixed for reproducibility.
    for j in range(n):
        view = out.reshape(lead + (size >> (j + 1), 2, 1 << j))
        if sign > 0:
            view[..., 1, :] += view[..., 0, :]
        else:
            view[..., 1, :] -= view[..., 0, :]
    return out


def zeta_subset_sum(n, f, out=None):
    """Subset-sum (zeta) transform over the last axis.

    Returns ``g`` with ``g[T] = sum(f[m] for m subset of T)`` using ``n * 2**(n-1)``
    additions.  Pass ``out=f`` (a float64 array) to transform in place.
    """
    return _transform(f, n, +1, out)


def mobius_invert(n, g, out=None):
    """Inverse of :func:`zeta_subset_sum` (Moebius inversion on the Boolean lattice)."""
    return _transform(g, n, -1, out)
