"""Conjugate Bayesian estimation of a multivariate Bernoulli law.

With cell counts ``n_r`` and a Dirichlet prior ``alpha_r`` the posterior of
the pmf is Dirichlet(``alpha_r + n_r``).  Posterior summaries of the
dependence parameters and measures are obtained by pushing independent
posterior draws through the theta and mu maps; no MCMC is needed.
"""

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .bitlattice import format_subset, pattern_of_rank, popcounts, report_order, zeta_subset_sum
from .core import (
    ProbabilityTable,
    conditional_prob_one,
    marginalize,
    mu_array,
    mu_lattice,
    theta_lattice,
    trivariate_from_margins_pairwise_mu,
)
from .errors import DomainError
from .sampling import SeedSpec, _as_seed, dirichlet_draws, simulate

DEFAULT_PRIOR = 0.5
DEFAULT_NSIM = 10_000
DEFAULT_PROBINT = 0.95


@dataclass(frozen=True)
class CountVector:
    n: int
    counts: np.ndarray

    @property
    def m(self):
        return int(self.counts.sum())

    def __add__(self, other):
        if self.n != other.n:
            raise DomainError("cannot add counts of different dimensions")
        return CountVector(self.n, self.counts + other.counts)


@dataclass(frozen=True)
class DirichletPosterior:
    n: int
    alphas: np.ndarray
    names: tuple = ()

    def __post_init__(self):
        if self.alphas.shape != (1 << self.n,) or not np.all(self.alphas > 0):
            raise DomainError("posterior needs 2**n positive concentration parameters")

    def mean(self):
        return self.alphas / self.alphas.sum()


@dataclass(frozen=True)
class EstimateRow:
    label: int
    name: str
    lower: float
    median: float
    upper: float

    def contains(self, value):
        return self.lower <= value <= self.upper


@dataclass(frozen=True)
class InferenceReport:
    n: int
    probs: list
    dparam: list
    dmeas: list
    probint: float
    nsim: int
    names: tuple = ()


@dataclass(frozen=True)
class PointEstimates:
    table: ProbabilityTable
    theta: object
    mu: object

    @property
    def p(self):
        return self.table.p


def counts(data):
    """Histogram of pattern ranks (index ``r - 1`` holds ``n_r``)."""
    return CountVector(data.n, np.bincount(data.ranks(), minlength=1 << data.n).astype(np.int64))


def posterior(c, prior=DEFAULT_PRIOR, names=()):
    """Dirichlet posterior ``alpha_r + n_r``; a scalar prior is broadcast to every cell."""
    size = 1 << c.n
    alpha = np.asarray(prior, dtype=np.float64)
    if alpha.ndim == 0:
        alpha = np.full(size, float(alpha))
    if alpha.shape != (size,):
        raise DomainError(f"prior vector must have {size} entries, got {alpha.shape}")
    if not np.all(alpha > 0):
        raise DomainError("prior concentration parameters must be positive")
    return DirichletPosterior(c.n, alpha + c.counts, tuple(names))


def point_estimates(d):
    """Posterior mean table with its dependence parameters and measures."""
    names = d.names or None
    table = ProbabilityTable(d.mean(), n=d.n, names=names)
    theta = theta_lattice(table)
    return PointEstimates(table, theta, mu_lattice(theta))


def fit(data, prior=DEFAULT_PRIOR):
    """Point estimates straight from data (the fast path for large ``n``)."""
    return point_estimates(posterior(counts(data), prior, data.names))


def _quantile_rows(values, labels, names, levels):
    q = np.quantile(values, levels, axis=0, method="linear")
    return [
        EstimateRow(int(lab), name, float(q[0, i]), float(q[1, i]), float(q[2, i]))
        for i, (lab, name) in enumerate(zip(labels, names))
    ]


def _check_interval_args(nsim, probint):
    if not 0.0 < probint < 1.0:
        raise DomainError(f"probint must lie in (0, 1), got {probint!r}")
    if nsim < 1000:
        raise DomainError(f"nsim must be at least 1000, got {nsim}")


def infer_posterior(d, nsim=DEFAULT_NSIM, probint=DEFAULT_PROBINT, seed=None):
    """Quantile summaries of ``p``, ``theta`` and ``mu`` under posterior ``d``."""
    _check_interval_args(nsim, probint)
    n = d.n
    tail = (1.0 - probint) / 2.0
    levels = [tail, 0.5, 1.0 - tail]
    draws = dirichlet_draws(d.alphas, nsim, _as_seed(seed))

    ranks = range(1, (1 << n) + 1)
    probs = _quantile_rows(
        draws,
        list(ranks),
        ["(" + ",".join(map(str, pattern_of_rank(n, r))) + ")" for r in ranks],
        levels,
    )

    zeta_subset_sum(n, draws, out=draws)
    theta = draws[:, ::-1]
    order1 = report_order(n, 1)
    dparam = _quantile_rows(theta[:, order1], order1, [format_subset(n, m) for m in order1], levels)

    order2 = report_order(n, 2)
    mus = mu_array(n, theta)[:, order2]
    dmeas = _quantile_rows(mus, order2, [format_subset(n, m) for m in order2], levels)
    return InferenceReport(n, probs, dparam, dmeas, probint, nsim, d.names)


def infer(data, prior=DEFAULT_PRIOR, nsim=DEFAULT_NSIM, probint=DEFAULT_PROBINT, seed=None):
    """Posterior point and interval estimates from an observed sample."""
    _check_interval_args(nsim, probint)
    return infer_posterior(posterior(counts(data), prior, data.names), nsim, probint, seed)


@dataclass
class CoverageResult:
    reps: int
    probint: float
    probs: dict = field(default_factory=dict)
    dparam: dict = field(default_factory=dict)
    dmeas: dict = field(default_factory=dict)

    def all_rates(self):
        return {**self.probs, **self.dparam, **self.dmeas}


def coverage_study(truth, m, reps=500, probint=0.99, nsim=DEFAULT_NSIM, seed=None, prior=DEFAULT_PRIOR):
    """Fraction of replications whose interval contains each true quantity.

    Replication ``r`` simulates from stream ``r`` (sub-stream 0) and draws
    posterior samples from sub-stream 1, so results do not depend on the
    order in which replications are run.
    """
    if reps < 1:
        raise DomainError(f"need at least one replication, got {reps}")
    seed = _as_seed(seed)
    n = truth.n
    theta = theta_lattice(truth)
    true_mu = mu_lattice(theta)
    true_p = truth.p
    hits_p = np.zeros(1 << n)
    hits_t = np.zeros((1 << n) - 1)
    hits_m = np.zeros((1 << n) - n - 1)
    for r in range(reps):
        stream = SeedSpec(seed.master_seed, r)
        data = simulate(truth, m, stream.child(0))
        rep = infer(data, prior, nsim, probint, stream.child(1))
        hits_p += [row.contains(true_p[row.label - 1]) for row in rep.probs]
        hits_t += [row.contains(theta.values[row.label]) for row in rep.dparam]
        hits_m += [row.contains(true_mu.values[row.label]) for row in rep.dmeas]
    probs = {row.name: hits_p[i] / reps for i, row in enumerate(rep.probs)}
    dparam = {"theta" + row.name: hits_t[i] / reps for i, row in enumerate(rep.dparam)}
    dmeas = {"mu" + row.name: hits_m[i] / reps for i, row in enumerate(rep.dmeas)}
    return CoverageResult(reps, probint, probs, dparam, dmeas)


# --------------------------------------------------------------------------
# prediction rules


def _group_rule(table, data, target, given):
    if table.n != data.n:
        raise DomainError(f"model has {table.n} variables but data has {data.n}")
    given = tuple(int(g) for g in given)
    if target in given:
        raise DomainError("the target cannot be one of the conditioning variables")
    rows = data.rows
    y = rows[:, target - 1].astype(np.int64)
    if given:
        sub = rows[:, [g - 1 for g in given]].astype(np.int64)
        weights = 1 << np.arange(len(given) - 1, -1, -1)
        key = sub @ weights
    else:
        key = np.zeros(data.m, dtype=np.int64)
    groups = np.unique(key)
    q = np.empty(groups.size)
    n_g = np.empty(groups.size, dtype=np.int64)
    k_g = np.empty(groups.size, dtype=np.int64)
    for i, g in enumerate(groups):
        values = [(int(g) >> (len(given) - 1 - j)) & 1 for j in range(len(given))]
        q[i] = conditional_prob_one(table, target, given, values)
        sel = key == g
        n_g[i] = sel.sum()
        k_g[i] = y[sel].sum()
    return q, n_g, k_g


def rule_accuracies(table, data, target, given=(), nsim=1000, seed=None):
    """Per-repetition accuracy of randomised prediction of ``X_target``.

    Each repetition predicts every row with a Bernoulli draw of the model's
    ``P(X_target = 1 | given values of that row)`` and records the fraction
    of rows predicted correctly.  Within a group of rows sharing the same
    conditioning pattern the number of correct predictions is a sum of two
    binomials, which is sampled directly.
    """
    if nsim < 1:
        raise DomainError(f"nsim must be positive, got {nsim}")
    q, n_g, k_g = _group_rule(table, data, target, given)
    rng = _as_seed(seed).generator()
    hits_one = rng.binomial(k_g, q, size=(nsim, q.size))
    hits_zero = rng.binomial(n_g - k_g, 1.0 - q, size=(nsim, q.size))
    return (hits_one + hits_zero).sum(axis=1) / data.m


def rule_accuracy(table, data, target, given=(), nsim=1000, seed=None):
    return float(rule_accuracies(table, data, target, given, nsim, seed).mean())


def expected_rule_accuracy(table, data, target, given=()):
    """Exact expectation of :func:`rule_accuracy` for fixed data."""
    q, n_g, k_g = _group_rule(table, data, target, given)
    return float(np.sum(k_g * q + (n_g - k_g) * (1.0 - q)) / data.m)


def model_rule_accuracy(table, target, given=()):
    """Expected accuracy when the data themselves follow ``table``: sum_g P(g)(q^2 + (1-q)^2)."""
    given = tuple(int(g) for g in given)
    if not given:
        q = conditional_prob_one(table, target)
        return q * q + (1 - q) * (1 - q)
    marg = marginalize(table, given)
    total = 0.0
    for r, pg in enumerate(marg.p, start=1):
        if pg <= 0:
            continue
        q = conditional_prob_one(table, target, given, pattern_of_rank(len(given), r))
        total += pg * (q * q + (1 - q) * (1 - q))
    return total


def zero_top_order_model(table):
    """Trivariate table with the same margins and pairwise measures but ``mu123 = 0``."""
    if table.n != 3:
        raise DomainError("the zero trivariate-dependence construction needs n = 3")
    theta = theta_lattice(table)
    mus = mu_lattice(theta)
    t1, t2, t3 = theta.singletons
    return trivariate_from_margins_pairwise_mu(
        t1, t2, t3, mus[(1, 2)], mus[(1, 3)], mus[(2, 3)], 0.0, names=table.names
    )


@dataclass(frozen=True)
class RuleResult:
    rule: int
    description: str
    given: tuple
    accuracy: float
    stderr: float
    expected: float


def prediction_rules(data, target, given, model=None, nsim=1000, seed=None, prior=DEFAULT_PRIOR):
    """Accuracy of prediction rules conditioning on every subset of ``given``.

    Rules are numbered by conditioning set: the empty set first, then larger
    sets.  For trivariate data one more rule uses the full conditioning set
    under the model with the trivariate dependence removed.
    ``model`` defaults to the posterior-mean fit of ``data``.
    """
    seed = _as_seed(seed)
    if model is None:
        model = fit(data, prior).table
    given = tuple(int(g) for g in given)
    subsets = [c for size in range(len(given) + 1) for c in combinations(given, size)]
    names = data.names
    cases = [(s, model, "none" if not s else "given " + " & ".join(names[g - 1] for g in s)) for s in subsets]
    if data.n == 3 and len(given) == 2:
        cases.append((given, zero_top_order_model(model), f"given {' & '.join(names[g - 1] for g in given)}, zero trivariate dependence"))
    results = []
    for i, (subset, table, desc) in enumerate(cases, start=1):
        acc = rule_accuracies(table, data, target, subset, nsim, seed.child(i))
        results.append(
            RuleResult(
                i,
                desc,
                subset,
                float(acc.mean()),
                float(acc.std(ddof=1) / np.sqrt(nsim)) if nsim > 1 else float("nan"),
                expected_rule_accuracy(table, data, target, subset),
            )
        )
    return results


def top_measures(mus, include=None, k=20):
    """The ``k`` largest measures, optionally only over subsets containing ``include``."""
    n = mus.n
    vals = np.array(mus.values, copy=True)
    card = popcounts(n)
    ok = card >= 2
    if include is not None:
        ok &= (np.arange(1 << n) >> (n - include)) & 1 == 1
    idx = np.flatnonzero(ok)
    order = idx[np.argsort(-vals[idx], kind="stable")][:k]
    return [(int(m), float(vals[m])) for m in order]
