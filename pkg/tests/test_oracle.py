import math
from fractions import Fraction

import numpy as np
import pytest
from numpy.testing import assert_allclose

from pysdtest.exceptions import SdtestBudgetException
from pysdtest.montecarlo import MonteCarloService
from pysdtest.objects.partition_scheme import PartitionScheme
from pysdtest.objects.simulation_plan import SimulationPlan
from pysdtest.objects.statistic_kind import StatisticKind
from pysdtest.objects.two_sample import TwoSample
from pysdtest.oracle import Oracle
from pysdtest.statistics import Statistics

HALF_T = StatisticKind.t(PartitionScheme.explicit([0.5]))


class TestExactNull:
    def test_ks_two_points(self):
        distribution = Oracle.exact_null(StatisticKind.ks(), 1, 1)

        assert_allclose(distribution.values, [0.0, math.sqrt(0.5)])
        assert distribution.probabilities == [Fraction(1, 2), Fraction(1, 2)]

    def test_t_two_points(self):
        distribution = Oracle.exact_null(HALF_T, 1, 1)

        assert_allclose(distribution.values, [-math.sqrt(2.0), math.sqrt(2.0)])
        assert distribution.probabilities == [Fraction(1, 2), Fraction(1, 2)]

    def test_enumeration_count(self):
        assert Oracle.x_rank_sets(1, 1).shape == (2, 2)
        assert Oracle.x_rank_sets(5, 7).shape == (792, 12)

    @pytest.mark.parametrize(
        'statistic',
        [
            StatisticKind.ks(),
            StatisticKind.tstar(),
            StatisticKind.tpow(1.0 / 3.0),
            StatisticKind.w(),
        ],
        ids=lambda statistic: statistic.name,
    )
    @pytest.mark.parametrize('sizes', [(4, 4), (5, 7), (6, 6)])
    def test_atoms_are_a_distribution(self, statistic, sizes):
        distribution = Oracle.exact_null(statistic, *sizes)
        values = distribution.values

        assert sum(distribution.probabilities) == 1
        assert all(b - a > Oracle.MERGE_TOLERANCE for (a, b) in zip(values, values[1:]))

    def test_scheme_override(self):
        distribution = Oracle.exact_null(
            StatisticKind.tstar(), 1, 1, PartitionScheme.explicit([0.5])
        )

        assert_allclose(distribution.values, [-math.sqrt(2.0), math.sqrt(2.0)])

    @pytest.mark.parametrize(
        'statistic',
        [StatisticKind.ks(), StatisticKind.tstar(), StatisticKind.w()],
        ids=lambda statistic: statistic.name,
    )
    def test_planted_uniforms(self, statistic):
        (m, n) = (4, 5)
        generator = np.random.default_rng(21)
        is_x = Oracle.x_rank_sets(m, n)
        planted = []

        for row in is_x:
            pooled = np.sort(generator.random(m + n))
            planted.append(Statistics.statistic(statistic, TwoSample(pooled[row], pooled[~row])))

        distribution = Oracle.exact_null(statistic, m, n)
        total = is_x.shape[0]
        expanded = np.repeat(
            distribution.values,
            [int(probability * total) for probability in distribution.probabilities],
        )

        assert_allclose(Statistics.evaluate_indicators(statistic, is_x, m), planted, atol=1e-12)
        assert_allclose(np.sort(planted), expanded, atol=1e-11)

    def test_budget(self):
        with pytest.raises(SdtestBudgetException) as raised:
            Oracle.exact_null(StatisticKind.ks(), 9, 8)

        assert raised.value.size == 17
        assert raised.value.budget == Oracle.MAXIMUM_SIZE


class TestTail:
    def setup_method(self):
        self.distribution = Oracle.exact_null(StatisticKind.ks(), 1, 1)

    def test_below_minimum(self):
        assert Oracle.exact_tail(self.distribution, -1.0) == 1

    def test_above_maximum(self):
        assert Oracle.exact_tail(self.distribution, 10.0) == 0

    def test_at_zero(self):
        assert Oracle.exact_tail(self.distribution, 0.0) == Fraction(1, 2)
        assert Oracle.exact_cdf(self.distribution, 0.0) == Fraction(1, 2)

    def test_critical_value(self):
        distribution = Oracle.exact_null(StatisticKind.ks(), 5, 5)
        critical = Oracle.exact_critical_value(distribution, 0.1)

        assert Oracle.exact_tail(distribution, critical) <= Fraction(1, 10)

        below = [value for value in distribution.values if value < critical]
        assert Oracle.exact_tail(distribution, below[-1]) > Fraction(1, 10)

    def test_dkw_epsilon(self):
        assert_allclose(Oracle.dkw_epsilon(10 ** 5, 0.01), math.sqrt(math.log(200.0) / 2e5))


class TestMonteCarloAgreement:
    @pytest.mark.parametrize(
        'statistic',
        [StatisticKind.ks(), StatisticKind.tpow(1.0 / 3.0), StatisticKind.w()],
        ids=lambda statistic: statistic.name,
    )
    def test_within_dkw_band(self, statistic):
        replicates = 20000
        values = MonteCarloService(chunk_size=2048).simulate(
            SimulationPlan(statistic, 4, 4, replicates, 20240101)
        )
        distribution = Oracle.exact_null(statistic, 4, 4)

        assert Oracle.sup_distance(distribution, values) <= Oracle.dkw_epsilon(replicates, 0.01)

    @pytest.mark.slow
    @pytest.mark.parametrize(
        'statistic',
        [StatisticKind.ks(), StatisticKind.tpow(1.0 / 3.0), StatisticKind.w()],
        ids=lambda statistic: statistic.name,
    )
    @pytest.mark.parametrize('sizes', [(4, 4), (5, 5), (6, 6), (5, 7)])
    def test_within_dkw_band_at_scale(self, statistic, sizes):
        replicates = 10 ** 5
        values = MonteCarloService(threads=4, chunk_size=4096).simulate(
            SimulationPlan(statistic, sizes[0], sizes[1], replicates, 7)
        )
        distribution = Oracle.exact_null(statistic, *sizes)

        assert Oracle.sup_distance(distribution, values) <= Oracle.dkw_epsilon(replicates, 0.01)

    @pytest.mark.slow
    def test_critical_value_matches_exact(self):
        service = MonteCarloService(chunk_size=4096)
        entry = service.critical_value(SimulationPlan(StatisticKind.ks(), 5, 5, 10 ** 5, 3), 0.1)
        exact = Oracle.exact_critical_value(Oracle.exact_null(StatisticKind.ks(), 5, 5), 0.1)

        assert_allclose(entry.critical_value, exact, atol=1e-12)
