import numpy as np
import pytest

from mvbern.core import ProbabilityTable, independence_table, mu_lattice, theta_lattice
from mvbern.errors import DomainError
from mvbern.inference import (
    CountVector,
    coverage_study,
    counts,
    expected_rule_accuracy,
    fit,
    infer,
    infer_posterior,
    model_rule_accuracy,
    point_estimates,
    posterior,
    prediction_rules,
    rule_accuracies,
    rule_accuracy,
    top_measures,
    zero_top_order_model,
)
from mvbern.sampling import SampleMatrix, SeedSpec, simulate


@pytest.fixture
def small_data():
    return SampleMatrix([[0, 0], [0, 1], [0, 1]])


@pytest.fixture(scope="module")
def data():
    t = ProbabilityTable([0.1, 0.2, 0.1, 0.2, 0.05, 0.15, 0.1, 0.1], n=3)
    return simulate(t, 3000, SeedSpec(1234))


@pytest.fixture(scope="module")
def setup():
    t = ProbabilityTable([0.1, 0.2, 0.1, 0.2, 0.05, 0.15, 0.1, 0.1], n=3)
    return t, simulate(t, 5000, SeedSpec(21))


class TestCounts:
    def test_hand_count(self, small_data):
        assert counts(small_data).counts.tolist() == [1, 2, 0, 0]

    def test_all_ones(self):
        c = counts(SampleMatrix(np.ones((7, 3), dtype=int)))
        assert c.counts[-1] == 7 and c.m == 7

    def test_total(self, table62):
        assert counts(simulate(table62, 123, SeedSpec(0))).m == 123


class TestPosterior:
    def test_update(self, small_data):
        d = posterior(counts(small_data), 0.5)
        assert d.alphas.tolist() == [1.5, 2.5, 0.5, 0.5]
        np.testing.assert_allclose(d.mean(), [0.3, 0.5, 0.1, 0.1])

    def test_no_data_is_prior(self):
        d = posterior(CountVector(2, np.zeros(4, dtype=np.int64)), 1.0)
        assert d.alphas.tolist() == [1.0] * 4
        np.testing.assert_allclose(point_estimates(d).p, [0.25] * 4)

    def test_vector_prior(self, small_data):
        d = posterior(counts(small_data), [1, 2, 3, 4])
        assert d.alphas.tolist() == [2, 4, 3, 4]

    def test_invalid_prior(self, small_data):
        with pytest.raises(DomainError):
            posterior(counts(small_data), 0.0)
        with pytest.raises(DomainError):
            posterior(counts(small_data), [1.0, 1.0])

    def test_conjugacy(self, table62):
        a = simulate(table62, 200, SeedSpec(1))
        b = simulate(table62, 300, SeedSpec(2))
        both = SampleMatrix(np.vstack([a.rows, b.rows]))
        sequential = posterior(counts(a) + counts(b), 0.5)
        joint = posterior(counts(both), 0.5)
        np.testing.assert_array_equal(sequential.alphas, joint.alphas)
        # posterior of data1 used as prior for data2
        chained = posterior(counts(b), posterior(counts(a), 0.5).alphas)
        np.testing.assert_array_equal(chained.alphas, joint.alphas)

    def test_fit_is_valid_table(self, table62):
        est = fit(simulate(table62, 500, SeedSpec(3)))
        assert est.p.sum() == pytest.approx(1.0)
        assert len(est.mu) == 4


class TestInfer:
    def test_row_counts(self, data):
        rep = infer(data, nsim=1000, seed=SeedSpec(5))
        assert (len(rep.probs), len(rep.dparam), len(rep.dmeas)) == (8, 7, 4)
        assert [r.name for r in rep.dmeas] == ["{1,2,3}", "{1,2}", "{1,3}", "{2,3}"]

    def test_ordering_and_range(self, data):
        rep = infer(data, nsim=2000, probint=0.99, seed=SeedSpec(5))
        for row in rep.probs + rep.dparam + rep.dmeas:
            assert row.lower <= row.median <= row.upper
        for row in rep.dmeas:
            assert -1 <= row.lower and row.upper <= 1

    def test_reproducible(self, data):
        a = infer(data, nsim=1000, seed=SeedSpec(9))
        b = infer(data, nsim=1000, seed=SeedSpec(9))
        assert a == b

    def test_monotone_in_probint(self, data):
        widths = []
        for level in (0.5, 0.9, 0.99):
            rep = infer(data, nsim=2000, probint=level, seed=SeedSpec(9))
            widths.append([(r.lower, r.upper) for r in rep.probs + rep.dparam + rep.dmeas])
        for narrow, wide in zip(widths, widths[1:]):
            for (l1, u1), (l2, u2) in zip(narrow, wide):
                assert l2 <= l1 and u1 <= u2

    def test_medians_near_posterior_mean(self, data):
        d = posterior(counts(data))
        rep = infer_posterior(d, nsim=5000, seed=SeedSpec(1))
        np.testing.assert_allclose([r.median for r in rep.probs], d.mean(), atol=5e-3)

    def test_theta_draws_consistent(self, data):
        # theta quantiles derived from the draws agree with the point estimates
        rep = infer(data, nsim=5000, seed=SeedSpec(2))
        est = fit(data)
        for row in rep.dparam:
            assert row.median == pytest.approx(est.theta.values[row.label], abs=5e-3)

    def test_argument_checks(self, data):
        with pytest.raises(DomainError):
            infer(data, nsim=999)
        with pytest.raises(DomainError):
            infer(data, probint=1.0)


class TestCoverage:
    def test_single_replication(self, table62):
        res = coverage_study(table62, 300, reps=1, nsim=1000, seed=SeedSpec(3))
        assert set(res.all_rates().values()) <= {0.0, 1.0}
        assert len(res.all_rates()) == 8 + 7 + 4

    def test_half_intervals(self, table62):
        res = coverage_study(table62, 500, reps=100, probint=0.5, nsim=1000, seed=SeedSpec(4))
        rates = np.array(list(res.probs.values()) + list(res.dparam.values()))
        # nominal 0.5; 100 replications give a standard error of 0.05
        assert np.all(np.abs(rates - 0.5) <= 0.2)
        assert abs(rates.mean() - 0.5) <= 0.07

    def test_reps_validation(self, table62):
        with pytest.raises(DomainError):
            coverage_study(table62, 100, reps=0)


class TestRules:
    def test_unconditional_closed_form(self, setup):
        t, data = setup
        q = 1 - theta_lattice(t)[(3,)]
        k = data.rows[:, 2].sum()
        expected = (k * q + (data.m - k) * (1 - q)) / data.m
        assert expected_rule_accuracy(t, data, 3) == pytest.approx(expected)
        assert model_rule_accuracy(t, 3) == pytest.approx(q * q + (1 - q) ** 2)

    @pytest.mark.parametrize("given", [(), (1,), (2,), (1, 2)])
    def test_monte_carlo_within_three_se(self, setup, given):
        t, data = setup
        acc = rule_accuracies(t, data, 3, given, nsim=2000, seed=SeedSpec(7))
        se = acc.std(ddof=1) / np.sqrt(acc.size)
        assert abs(acc.mean() - expected_rule_accuracy(t, data, 3, given)) <= 3 * se
        assert np.all((acc >= 0) & (acc <= 1))

    def test_brute_force_row_prediction(self, setup):
        # per-row Bernoulli predictions give the same expectation
        t, data = setup
        rng = np.random.default_rng(0)
        x = data.rows
        q = np.empty(data.m)
        for i, row in enumerate(x):
            same = t.as_array()[row[0], row[1], :]
            q[i] = same[1] / same.sum()
        hits = [np.mean((rng.random(data.m) < q) == x[:, 2]) for _ in range(400)]
        acc = rule_accuracy(t, data, 3, (1, 2), nsim=400, seed=SeedSpec(1))
        assert abs(np.mean(hits) - acc) < 4 * np.std(hits) / np.sqrt(200)

    def test_independent_target(self):
        t = independence_table([0.3, 0.6, 0.8])
        data = simulate(t, 20_000, SeedSpec(2))
        assert model_rule_accuracy(t, 3, (1, 2)) == pytest.approx(model_rule_accuracy(t, 3))
        a = expected_rule_accuracy(t, data, 3, (1, 2))
        assert a == pytest.approx(expected_rule_accuracy(t, data, 3), abs=1e-12)

    def test_target_in_given(self, setup):
        t, data = setup
        with pytest.raises(DomainError):
            rule_accuracy(t, data, 3, (3,))

    def test_zero_probability_pattern(self):
        t = ProbabilityTable([0.5, 0.5, 0.0, 0.0])
        data = SampleMatrix([[1, 0], [0, 1]])
        with pytest.raises(DomainError):
            rule_accuracy(t, data, 2, (1,))

    def test_zero_top_order_model(self, setup):
        t, _ = setup
        z = zero_top_order_model(t)
        mt, mz = mu_lattice(theta_lattice(t)), mu_lattice(theta_lattice(z))
        for pair in [(1, 2), (1, 3), (2, 3)]:
            assert mz[pair] == pytest.approx(mt[pair], abs=1e-12)
        assert mz[(1, 2, 3)] == pytest.approx(0.0, abs=1e-12)
        np.testing.assert_allclose(theta_lattice(z).singletons, theta_lattice(t).singletons)

    def test_prediction_rules_listing(self, setup):
        t, data = setup
        res = prediction_rules(data, 3, (1, 2), model=t, nsim=200, seed=SeedSpec(3))
        assert [r.given for r in res] == [(), (1,), (2,), (1, 2), (1, 2)]
        assert res[0].description == "none"
        assert "zero trivariate" in res[4].description


def test_top_measures():
    t = ProbabilityTable(np.random.default_rng(1).dirichlet(np.ones(16)), n=4)
    mus = mu_lattice(theta_lattice(t))
    top = top_measures(mus, k=3)
    vals = [v for _, v in top]
    assert vals == sorted(vals, reverse=True)
    assert max(v for _, v in mus.items()) == vals[0]
    only4 = top_measures(mus, include=4, k=20)
    assert len(only4) == 7
    assert all(m & 1 for m, _ in only4)
