"""Probability tables, subcopula parameters and dependence measures.

A multivariate Bernoulli law on ``n`` variables is stored as its ``2**n``
point probabilities in rank order (see :mod:`mvbern.bitlattice`).  The
subcopula of the law is determined by the dependence parameters

    theta[A] = P(X_a = 0 for every a in A),

one per subset ``A``; ``theta[{k}]`` are the marginal parameters.  Every
``theta[A]`` is a sum of point probabilities over a sub-cube, so the whole
lattice is one subset-sum transform of the table and the table is recovered
by Moebius inversion.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import isclose

import numpy as np

from .bitlattice import (
    as_mask,
    check_dim,
    format_subset,
    mobius_invert,
    pattern_of_rank,
    popcounts,
    rank_of_pattern,
    report_order,
    subset_of_mask,
    zeta_subset_sum,
)
from .errors import DomainError, IncompatibilityError, ValidationError

SUM_TOL = 1e-9
CLAMP_TOL = 1e-9
DEGENERATE_TOL = 1e-12


def _default_names(n):
    return tuple(f"X{k}" for k in range(1, n + 1))


class ProbabilityTable:
    """Joint pmf of ``n`` binary variables, ``p[r - 1] = P(X = pattern_of_rank(n, r))``.

    Entries must lie in ``[0, 1]`` and sum to one within ``1e-9``.  Negative
    float noise down to ``-1e-12`` is clamped to zero.
    """

    __slots__ = ("n", "p", "names")

    def __init__(self, p, n=None, names=None):
        arr = np.array(p, dtype=np.float64).ravel()
        size = arr.size
        if n is None:
            n = size.bit_length() - 1
            if size < 2 or 1 << n != size:
                raise ValidationError(f"table length {size} is not a power of two >= 2")
        n = check_dim(n)
        if size != 1 << n:
            raise ValidationError(f"table for n={n} needs {1 << n} entries, got {size}")
        if not np.all(np.isfinite(arr)):
            bad = np.flatnonzero(~np.isfinite(arr))
            raise ValidationError(f"non-finite entries at indices {bad.tolist()}", bad)
        bad = np.flatnonzero((arr < -1e-12) | (arr > 1 + 1e-12))
        if bad.size:
            raise ValidationError(
                f"entries outside [0, 1] at indices {bad.tolist()}: {arr[bad].tolist()}", bad
            )
        arr = np.clip(arr, 0.0, 1.0)
        total = float(arr.sum())
        if abs(total - 1.0) > SUM_TOL:
            raise ValidationError(f"entries sum to {total!r}, expected 1 within {SUM_TOL}")
        arr.flags.writeable = False
        if names is None:
            names = _default_names(n)
        names = tuple(str(x) for x in names)
        if len(names) != n:
            raise ValidationError(f"expected {n} variable names, got {len(names)}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "p", arr)
        object.__setattr__(self, "names", names)

    def __setattr__(self, key, value):
        raise AttributeError("ProbabilityTable is immutable")

    def __repr__(self):
        return f"ProbabilityTable(n={self.n}, p={self.p.tolist()!r})"

    def __eq__(self, other):
        if not isinstance(other, ProbabilityTable):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.p, other.p)

    __hash__ = None

    def prob(self, pattern):
        return float(self.p[rank_of_pattern(pattern) - 1])

    def patterns(self):
        return [pattern_of_rank(self.n, r) for r in range(1, (1 << self.n) + 1)]

    def as_array(self):
        """The pmf as an ``n``-dimensional ``(2, ..., 2)`` array, axis ``k - 1`` for ``X_k``."""
        return self.p.reshape((2,) * self.n)


def new_table(n, p, names=None):
    return ProbabilityTable(p, n=n, names=names)


class ThetaLattice:
    """Dependence parameters ``theta[A]`` for every subset mask ``A`` (``theta[0] == 1``)."""

    __slots__ = ("n", "values")

    def __init__(self, n, values):
        n = check_dim(n)
        arr = np.array(values, dtype=np.float64).ravel()
        if arr.size != 1 << n:
            raise ValidationError(f"theta lattice for n={n} needs {1 << n} entries, got {arr.size}")
        if not isclose(arr[0], 1.0, abs_tol=1e-12):
            raise ValidationError(f"theta of the empty set must be 1, got {arr[0]!r}")
        bad = np.flatnonzero(~np.isfinite(arr) | (arr < -1e-12) | (arr > 1 + 1e-12))
        if bad.size:
            raise ValidationError(f"theta values outside [0, 1] at masks {bad.tolist()}", bad)
        arr = np.clip(arr, 0.0, 1.0)
        arr[0] = 1.0
        arr.flags.writeable = False
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "values", arr)

    def __setattr__(self, key, value):
        raise AttributeError("ThetaLattice is immutable")

    @classmethod
    def from_subsets(cls, n, mapping):
        """Build from ``{(1, 2): 0.3, (1,): 0.6, ...}``; every non-empty subset is required."""
        values = np.full(1 << n, np.nan)
        values[0] = 1.0
        for subset, value in mapping.items():
            values[as_mask(n, subset)] = value
        missing = np.flatnonzero(np.isnan(values))
        if missing.size:
            names = [format_subset(n, int(m)) for m in missing]
            raise ValidationError(f"missing theta values for {names}", missing)
        return cls(n, values)

    def __getitem__(self, subset):
        return float(self.values[as_mask(self.n, subset)])

    @property
    def singletons(self):
        """Marginal parameters ``P(X_k = 0)`` for ``k = 1..n``."""
        return np.array([self.values[1 << (self.n - k)] for k in range(1, self.n + 1)])

    def rows(self):
        """``(mask, theta)`` for every non-empty subset in report order."""
        return [(m, float(self.values[m])) for m in report_order(self.n, 1)]

    def __repr__(self):
        return f"ThetaLattice(n={self.n}, values={self.values.tolist()!r})"


class MuLattice:
    """Dependence measures ``mu[A]`` for every subset with at least two members."""

    __slots__ = ("n", "values")

    def __init__(self, n, values):
        arr = np.array(values, dtype=np.float64)
        arr.flags.writeable = False
        object.__setattr__(self, "n", check_dim(n))
        object.__setattr__(self, "values", arr)

    def __setattr__(self, key, value):
        raise AttributeError("MuLattice is immutable")

    def __getitem__(self, subset):
        mask = as_mask(self.n, subset)
        if bin(mask).count("1") < 2:
            raise DomainError("mu is defined only for subsets with at least two members")
        return float(self.values[mask])

    def masks(self):
        """Masks with ``|A| >= 2`` in increasing order."""
        return [m for m in range(1 << self.n) if bin(m).count("1") >= 2]

    def items(self):
        return [(m, float(self.values[m])) for m in self.masks()]

    def rows(self):
        return [(m, float(self.values[m])) for m in report_order(self.n, 2)]

    def __len__(self):
        return (1 << self.n) - self.n - 1

    def __repr__(self):
        return f"MuLattice(n={self.n}, {len(self)} measures)"


@dataclass(frozen=True)
class FrechetBounds:
    lower: float
    upper: float

    def __post_init__(self):
        if not (0.0 <= self.lower <= self.upper <= 1.0):
            raise IncompatibilityError(f"empty or invalid interval [{self.lower}, {self.upper}]")

    def contains(self, x, tol=1e-12):
        return self.lower - tol <= x <= self.upper + tol

    def __iter__(self):
        return iter((self.lower, self.upper))

    def __str__(self):
        return f"[{self.lower:.10g}, {self.upper:.10g}]"


# --------------------------------------------------------------------------
# theta lattice <-> table


def theta_lattice(table):
    """All dependence parameters of ``table``.

    ``theta[A]`` sums the cells whose pattern is zero on ``A``, i.e. the
    patterns that are subsets of the complement of ``A``; that is the
    subset-sum transform evaluated at ``full ^ A``, a plain reversal.
    """
    g = zeta_subset_sum(table.n, table.p)
    return ThetaLattice(table.n, g[::-1])


def table_from_theta(theta, names=None):
    """Recover the unique pmf whose dependence parameters are ``theta``.

    Raises :class:`IncompatibilityError` naming the offending pattern when the
    lattice is not realised by any distribution.
    """
    n = theta.n
    p = mobius_invert(n, theta.values[::-1])
    _check_cells(n, p)
    return ProbabilityTable(np.clip(p, 0.0, 1.0), n=n, names=names)


def _check_cells(n, p):
    bad = np.flatnonzero((p < -CLAMP_TOL) | (p > 1 + CLAMP_TOL))
    if bad.size:
        i = int(bad[0])
        pat = "".join(map(str, pattern_of_rank(n, i + 1)))
        raise IncompatibilityError(
            f"incompatible parameters: p{pat} = {p[i]:.6g} lies outside [0, 1]", bad
        )


# --------------------------------------------------------------------------
# bounds and measures


def _singleton_vector(n, singletons):
    if isinstance(singletons, dict):
        return np.array([float(singletons[k]) for k in range(1, n + 1)])
    return np.asarray(singletons, dtype=np.float64)


def frechet_bounds(singletons, subset):
    """Frechet-Hoeffding interval ``[max(sum - |A| + 1, 0), min]`` for ``theta[A]``.

    ``singletons`` is a sequence ``theta_1..theta_n`` or a mapping ``{k: theta_k}``
    with 1-based keys; ``subset`` is a mask or an iterable of variable indices.
    """
    if isinstance(singletons, dict):
        n = max(singletons)
    else:
        n = len(singletons)
    values = _singleton_vector(n, singletons)
    if np.any((values < 0) | (values > 1)):
        raise DomainError(f"marginal parameters must lie in [0, 1], got {values.tolist()}")
    mask = as_mask(n, subset)
    members = subset_of_mask(n, mask)
    if not members:
        raise DomainError("Frechet bounds need a non-empty subset")
    chosen = [values[k - 1] for k in members]
    lower = max(sum(chosen) - len(chosen) + 1.0, 0.0)
    upper = min(chosen)
    return FrechetBounds(min(lower, upper), upper)


def mu_value(theta_a, margins):
    """Dependence measure of a subset from its parameter and its marginal parameters.

    Positive values are scaled by the distance from independence to the upper
    Frechet-Hoeffding corner, negative ones by the distance to the lower one.
    Degenerate denominators (below 1e-12) give 0.
    """
    margins = [float(t) for t in margins]
    if len(margins) < 2:
        raise DomainError("mu needs at least two variables")
    prod = float(np.prod(margins))
    diff = theta_a - prod
    if diff >= 0:
        den = min(margins) - prod
    else:
        den = prod - max(sum(margins) - len(margins) + 1.0, 0.0)
    if den < DEGENERATE_TOL:
        return 0.0
    return min(1.0, max(-1.0, diff / den))


def mu(theta, subset):
    mask = as_mask(theta.n, subset)
    members = subset_of_mask(theta.n, mask)
    if len(members) < 2:
        raise DomainError(f"mu needs |A| >= 2, got {format_subset(theta.n, mask)}")
    singles = theta.singletons
    return mu_value(float(theta.values[mask]), [singles[k - 1] for k in members])


def mu_array(n, theta_values):
    """Vectorised dependence measures over the last axis (``NaN`` where ``|A| < 2``).

    ``theta_values`` has shape ``(..., 2**n)``; leading axes are independent
    lattices (e.g. posterior draws).  Products, sums and minima of the
    marginal parameters over every mask are built one bit at a time.
    """
    t = np.asarray(theta_values, dtype=np.float64)
    size = 1 << n
    lead = t.shape[:-1]
    prod = np.ones(t.shape)
    total = np.zeros(t.shape)
    low = np.full(t.shape, np.inf)
    for j in range(n):
        single = t[..., 1 << j][..., None, None]
        shape = lead + (size >> (j + 1), 2, 1 << j)
        for arr, op in ((prod, np.multiply), (total, np.add), (low, np.minimum)):
            view = arr.reshape(shape)
            view[..., 1, :] = op(view[..., 0, :], single)
    card = popcounts(n)
    lower = np.maximum(total - card + 1.0, 0.0)
    diff = t - prod
    den = np.where(diff >= 0, low - prod, prod - lower)
    with np.errstate(divide="ignore", invalid="ignore"):
        out = np.where(den < DEGENERATE_TOL, 0.0, diff / den)
    out = np.clip(out, -1.0, 1.0)
    out[..., card < 2] = np.nan
    return out


def mu_lattice(theta):
    return MuLattice(theta.n, mu_array(theta.n, theta.values))


def subcopula_eval(theta, u):
    """Evaluate the subcopula on its grid ``{0, theta_1, 1} x ... x {0, theta_n, 1}``."""
    n = theta.n
    if len(u) != n:
        raise DomainError(f"grid point needs {n} coordinates, got {len(u)}")
    singles = theta.singletons
    mask = 0
    zero = False
    for k, (x, t) in enumerate(zip(u, singles), start=1):
        if isclose(x, 0.0, abs_tol=1e-15):
            zero = True
        elif isclose(x, t, rel_tol=1e-12, abs_tol=1e-15):
            mask |= 1 << (n - k)
        elif isclose(x, 1.0, abs_tol=1e-15):
            continue
        else:
            raise DomainError(f"coordinate {k} = {x!r} is not one of 0, theta_{k} = {t!r}, 1")
    return 0.0 if zero else float(theta.values[mask])


# --------------------------------------------------------------------------
# bivariate case


def _open_unit(name, x):
    if not 0.0 < x < 1.0:
        raise DomainError(f"{name} must lie in (0, 1), got {x!r}")


def _bivariate_grid(theta1, theta2):
    return [(u, v) for u in (0.0, theta1, 1.0) for v in (0.0, theta2, 1.0)]


def _sup_distance(values, grid):
    """d = sup(S - Pi) - sup(Pi - S) over a finite grid."""
    above = max(s - u * v for s, (u, v) in zip(values, grid))
    below = max(u * v - s for s, (u, v) in zip(values, grid))
    return above - below


def d_bivariate(theta1, theta2, theta12):
    """Sup-based distance from independence, by enumeration of the 3x3 subcopula grid."""
    _open_unit("theta1", theta1)
    _open_unit("theta2", theta2)
    bounds = bivariate_admissible_interval(theta1, theta2)
    if not bounds.contains(theta12):
        raise DomainError(f"theta12 = {theta12!r} outside admissible interval {bounds}")
    lattice = ThetaLattice(2, [1.0, theta2, theta1, theta12])
    grid = _bivariate_grid(theta1, theta2)
    return _sup_distance([subcopula_eval(lattice, g) for g in grid], grid)


def mu_sup_bivariate(theta1, theta2, theta12):
    """Dependence measure built from sup-distances to the Frechet-Hoeffding subcopulas.

    Independent of :func:`mu_value`; both must agree on admissible inputs.
    """
    grid = _bivariate_grid(theta1, theta2)
    d_s = d_bivariate(theta1, theta2, theta12)
    d_m = _sup_distance([min(u, v) for u, v in grid], grid)
    d_w = _sup_distance([max(u + v - 1.0, 0.0) for u, v in grid], grid)
    if d_s >= 0 and abs(d_m) > DEGENERATE_TOL:
        return d_s / d_m
    if d_s <= 0 and abs(d_w) > DEGENERATE_TOL:
        return -d_s / d_w
    return 0.0


def bivariate_admissible_interval(theta1, theta2):
    _open_unit("theta1", theta1)
    _open_unit("theta2", theta2)
    return FrechetBounds(max(theta1 + theta2 - 1.0, 0.0), min(theta1, theta2))


def bivariate_admissible_region_contains(theta12, theta1, theta2, tol=1e-12):
    """Whether ``(theta1, theta2)`` is compatible with a fixed ``theta12``."""
    for name, x in (("theta12", theta12), ("theta1", theta1), ("theta2", theta2)):
        _open_unit(name, x)
    return (
        theta1 >= theta12 - tol
        and theta2 >= theta12 - tol
        and theta2 <= min(1.0, 1.0 + theta12 - theta1) + tol
    )


def bivariate_region_vertices(theta12):
    """Corners of the triangle of marginal pairs compatible with ``theta12``."""
    _open_unit("theta12", theta12)
    return [(theta12, theta12), (theta12, 1.0), (1.0, theta12)]


def theta_from_mu(margins, mu_a):
    """Invert :func:`mu_value` for the parameter of a subset given its marginals."""
    margins = [float(t) for t in margins]
    if not -1.0 <= mu_a <= 1.0:
        raise DomainError(f"mu must lie in [-1, 1], got {mu_a!r}")
    prod = float(np.prod(margins))
    if mu_a >= 0:
        return prod + mu_a * (min(margins) - prod)
    lower = max(sum(margins) - len(margins) + 1.0, 0.0)
    return prod + mu_a * (prod - lower)


def theta_from_mu_bivariate(theta1, theta2, mu12):
    _open_unit("theta1", theta1)
    _open_unit("theta2", theta2)
    return theta_from_mu([theta1, theta2], mu12)


# --------------------------------------------------------------------------
# trivariate case


_TRIVARIATE_LABELS = ("000", "001", "010", "011", "100", "101", "110", "111")


def trivariate_table(theta1, theta2, theta3, theta12, theta13, theta23, theta123, names=None):
    """Trivariate pmf from its seven dependence parameters (closed form)."""
    p = [
        theta123,
        theta12 - theta123,
        theta13 - theta123,
        theta1 - theta12 - theta13 + theta123,
        theta23 - theta123,
        theta2 - theta12 - theta23 + theta123,
        theta3 - theta13 - theta23 + theta123,
        1.0 - theta1 - theta2 - theta3 + theta12 + theta13 + theta23 - theta123,
    ]
    for label, value in zip(_TRIVARIATE_LABELS, p):
        if value < -CLAMP_TOL or value > 1 + CLAMP_TOL:
            raise IncompatibilityError(f"incompatible parameters: p{label} = {value:.6g} outside [0, 1]")
    return ProbabilityTable(np.clip(p, 0.0, 1.0), n=3, names=names)


def theta123_admissible_interval(theta1, theta2, theta3, theta12, theta13, theta23):
    """Values of ``theta123`` for which all eight trivariate cells lie in ``[0, 1]``.

    Each cell is ``c + s * theta123`` with ``s = +-1``; the eight constraints
    are intersected in exact rational arithmetic on the float inputs.
    """
    margins = (theta1, theta2, theta3)
    for k, t in enumerate(margins, start=1):
        _open_unit(f"theta{k}", t)
    for (r, t), v in zip(((1, 2), (1, 3), (2, 3)), (theta12, theta13, theta23)):
        if not bivariate_admissible_interval(margins[r - 1], margins[t - 1]).contains(v):
            raise DomainError(f"theta{r}{t} = {v!r} violates its bivariate bounds")
    t1, t2, t3, t12, t13, t23 = (Fraction(x) for x in (theta1, theta2, theta3, theta12, theta13, theta23))
    cells = [
        (Fraction(0), 1),
        (t12, -1),
        (t13, -1),
        (t1 - t12 - t13, 1),
        (t23, -1),
        (t2 - t12 - t23, 1),
        (t3 - t13 - t23, 1),
        (1 - t1 - t2 - t3 + t12 + t13 + t23, -1),
    ]
    lo, hi = Fraction(0), Fraction(1)
    for c, s in cells:
        # 0 <= c + s*t <= 1
        if s > 0:
            lo, hi = max(lo, -c), min(hi, 1 - c)
        else:
            lo, hi = max(lo, c - 1), min(hi, c)
    if lo > hi:
        raise IncompatibilityError(
            f"no admissible theta123: constraints give [{float(lo):.6g}, {float(hi):.6g}]"
        )
    return FrechetBounds(float(lo), float(hi))


def trivariate_from_margins_pairwise_mu(theta1, theta2, theta3, mu12, mu13, mu23, mu123, names=None):
    """Trivariate table with given marginals and dependence measures of every order."""
    margins = (theta1, theta2, theta3)
    for k, t in enumerate(margins, start=1):
        _open_unit(f"theta{k}", t)
    theta12 = theta_from_mu([theta1, theta2], mu12)
    theta13 = theta_from_mu([theta1, theta3], mu13)
    theta23 = theta_from_mu([theta2, theta3], mu23)
    theta123 = theta_from_mu(margins, mu123)
    return trivariate_table(theta1, theta2, theta3, theta12, theta13, theta23, theta123, names=names)


# --------------------------------------------------------------------------
# builders and derived tables


def _layer_patterns(n, k):
    return [r for r in range(1, (1 << n) + 1) if sum(pattern_of_rank(n, r)) == k]


def _pattern_key(n, key):
    if isinstance(key, str):
        key = tuple(int(c) for c in key.strip())
    pattern = tuple(int(b) for b in key)
    if len(pattern) != n:
        raise DomainError(f"pattern {key!r} does not have {n} entries")
    return rank_of_pattern(pattern)


def build_layered(n, layers, names=None):
    """Assign probabilities layer by layer, by number of ones in the pattern.

    ``layers[k]`` holds the cells with exactly ``k`` ones, either as a sequence
    in ascending rank order or as a mapping from pattern (tuple or ``"011"``)
    to probability; unassigned cells are 0.  At most ``n`` layers
    (``k = 0..n-1``) are accepted; the all-ones cell receives the remaining mass.

    Returns ``(table, theta_lattice)``.
    """
    n = check_dim(n)
    if len(layers) > n:
        raise DomainError(f"at most {n} layers (k = 0..{n - 1}) may be given, got {len(layers)}")
    p = np.zeros(1 << n)
    running = 0.0
    for k, layer in enumerate(layers):
        allowed = _layer_patterns(n, k)
        if isinstance(layer, dict):
            items = []
            for key, value in layer.items():
                r = _pattern_key(n, key)
                if r not in allowed:
                    raise DomainError(
                        f"layer {k} may only assign patterns with {k} ones, got {key!r}"
                    )
                items.append((r, value))
        else:
            values = list(layer)
            if len(values) != len(allowed):
                raise DomainError(f"layer {k} needs {len(allowed)} values, got {len(values)}")
            items = list(zip(allowed, values))
        for r, value in items:
            value = float(value)
            if not 0.0 <= value <= 1.0:
                raise DomainError(f"layer {k}: probability {value!r} outside [0, 1]")
            p[r - 1] = value
            running += value
        if running > 1.0 + 1e-12:
            raise IncompatibilityError(f"cumulative mass {running!r} exceeds 1 at layer {k}")
    p[-1] = max(1.0 - running, 0.0)
    table = ProbabilityTable(p, n=n, names=names)
    return table, theta_lattice(table)


def marginalize(table, keep):
    """Marginal table of the variables in ``keep`` (kept in increasing index order)."""
    n = table.n
    mask = as_mask(n, keep)
    members = subset_of_mask(n, mask)
    if not members:
        raise DomainError("marginalize needs at least one variable to keep")
    drop = tuple(k - 1 for k in range(1, n + 1) if k not in members)
    p = table.as_array().sum(axis=drop) if drop else table.as_array()
    names = [table.names[k - 1] for k in members]
    return ProbabilityTable(np.ravel(p), n=len(members), names=names)


def condition(table, targets, given, values):
    """Conditional table of ``targets`` given ``X_g = v`` for ``g`` in ``given``.

    ``values`` lists the conditioning values in increasing order of the
    ``given`` indices.
    """
    n = table.n
    tmask, gmask = as_mask(n, targets), as_mask(n, given)
    tset, gset = subset_of_mask(n, tmask), subset_of_mask(n, gmask)
    if not tset or not gset:
        raise DomainError("condition needs non-empty targets and a non-empty conditioning set")
    if tmask & gmask:
        raise DomainError("targets and conditioning variables must be disjoint")
    values = tuple(int(v) for v in values)
    if len(values) != len(gset) or any(v not in (0, 1) for v in values):
        raise DomainError(f"need {len(gset)} binary conditioning values, got {values!r}")
    arr = table.as_array()
    index = [slice(None)] * n
    for k, v in zip(gset, values):
        index[k - 1] = v
    sub = arr[tuple(index)]
    # remaining axes correspond to the non-given variables in increasing order
    rest = [k for k in range(1, n + 1) if k not in gset]
    drop = tuple(i for i, k in enumerate(rest) if k not in tset)
    joint = sub.sum(axis=drop) if drop else sub
    mass = float(np.sum(joint))
    if mass <= 0.0:
        raise DomainError(f"conditioning event {dict(zip(gset, values))} has probability zero")
    names = [table.names[k - 1] for k in tset]
    return ProbabilityTable(np.ravel(joint) / mass, n=len(tset), names=names)


def conditional_prob_one(table, target, given=(), values=()):
    """``P(X_target = 1 | X_given = values)``; unconditional when ``given`` is empty."""
    if not tuple(given):
        return float(marginalize(table, [target]).p[1])
    return float(condition(table, [target], given, values).p[1])


def independence_table(margins, names=None):
    """Product table with ``P(X_k = 0) = margins[k - 1]``."""
    p = np.array([1.0])
    for t in margins:
        p = np.outer(p, [t, 1.0 - t]).ravel()
    return ProbabilityTable(p, n=len(margins), names=names)


def dependence_rows(table):
    """Parameters and measures of ``table`` in report order: ``(theta_rows, mu_rows)``."""
    theta = theta_lattice(table)
    mus = mu_lattice(theta)
    return theta.rows(), mus.rows()
