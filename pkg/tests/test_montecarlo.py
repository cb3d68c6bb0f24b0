import math

import numpy as np
import pytest
from numpy.testing import assert_allclose
from numpy.testing import assert_array_equal

from pysdtest.alternatives import Alternatives
from pysdtest.efficiency import Efficiency
from pysdtest.enumerations import StreamPurpose
from pysdtest.exceptions import SdtestConfigurationException
from pysdtest.exceptions import SdtestDomainException
from pysdtest.exceptions import SdtestInsufficientReplicatesException
from pysdtest.montecarlo import MonteCarloService
from pysdtest.objects.alternative_pair import AlternativePair
from pysdtest.objects.contamination_path import ContaminationPath
from pysdtest.objects.continuous_distribution import ContinuousDistribution
from pysdtest.objects.simulation_plan import SimulationPlan
from pysdtest.objects.statistic_kind import StatisticKind

STATISTICS = [StatisticKind.ks(), StatisticKind.tstar(), StatisticKind.tcirc(), StatisticKind.w()]


def combined_standard_error(first, second):
    return math.sqrt(first.standard_error ** 2 + second.standard_error ** 2)


class TestService:
    @pytest.mark.parametrize('argument', ['threads', 'chunk_size', 'power_replicates'])
    def test_positive_integers(self, argument):
        with pytest.raises(ValueError):
            MonteCarloService(**{argument: 0})
        with pytest.raises(TypeError):
            MonteCarloService(**{argument: 2.5})

    def test_streams_are_counter_based(self):
        first = MonteCarloService.generator(5, StreamPurpose.NULL, 3).random(4)
        again = MonteCarloService.generator(5, StreamPurpose.NULL, 3).random(4)
        other = MonteCarloService.generator(5, StreamPurpose.ALTERNATIVE, 3).random(4)

        assert_array_equal(first, again)
        assert not np.array_equal(first, other)


class TestSimulation:
    def test_thread_count_does_not_change_results(self):
        plan = SimulationPlan(StatisticKind.tstar(), 13, 17, 1000, 99)
        serial = MonteCarloService(threads=1, chunk_size=64).simulate_many(plan, STATISTICS)
        parallel = MonteCarloService(threads=4, chunk_size=7).simulate_many(plan, STATISTICS)

        for kind in STATISTICS:
            assert_array_equal(serial[kind.name], parallel[kind.name])

    def test_common_random_numbers(self):
        plan = SimulationPlan(StatisticKind.ks(), 10, 10, 300, 1)
        service = MonteCarloService()
        together = service.simulate_many(plan, [StatisticKind.ks(), StatisticKind.tstar()])

        assert_array_equal(together['ks'], service.simulate(plan))
        assert_array_equal(
            together['tstar'], service.simulate(plan.replace(statistic=StatisticKind.tstar()))
        )

    def test_distribution_free_critical_values(self):
        service = MonteCarloService(chunk_size=1024)
        plan = SimulationPlan(StatisticKind.ks(), 50, 50, 5000, 2024)
        normal_plan = plan.replace(null_distribution=ContinuousDistribution.normal())

        uniform_table = service.critical_values(plan, [0.01, 0.05], STATISTICS)
        normal_table = service.critical_values(normal_plan, [0.01, 0.05], STATISTICS)

        for (uniform_entry, normal_entry) in zip(uniform_table, normal_table):
            assert uniform_entry.key == normal_entry.key
            assert uniform_entry.critical_value == normal_entry.critical_value


class TestCriticalValues:
    def setup_method(self):
        self.service = MonteCarloService(chunk_size=1024)

    def test_order_statistic_index(self):
        assert MonteCarloService.order_statistic_index(0.05, 999) == 949
        assert MonteCarloService.order_statistic_index(1e-4, 100) == 99

    def test_insufficient_replicates(self):
        with pytest.raises(SdtestInsufficientReplicatesException) as raised:
            self.service.critical_value(SimulationPlan(StatisticKind.ks(), 5, 5, 100, 0), 0.01)

        assert raised.value.replicates == 100

    def test_alternative_is_rejected(self):
        plan = SimulationPlan(
            StatisticKind.ks(), 5, 5, 5000, 0, Alternatives.preset_pair('pareto')
        )

        with pytest.raises(SdtestConfigurationException):
            self.service.critical_value(plan, 0.05)

    def test_nonincreasing_in_alpha(self):
        plan = SimulationPlan(StatisticKind.tcirc(), 40, 60, 10000, 5)
        table = self.service.critical_value_table(plan, [0.01, 0.05, 0.1])
        values = [
            table.lookup('tcirc', 40, 60, alpha).critical_value for alpha in (0.01, 0.05, 0.1)
        ]

        assert values[0] >= values[1] >= values[2]

    def test_entry_records_provenance(self):
        plan = SimulationPlan(StatisticKind.ks(), 8, 9, 2000, 42)
        entry = self.service.critical_value(plan, 0.05)

        assert entry.key == ('ks', 8, 9, 0.05)
        assert entry.replicates == 2000
        assert entry.seed == 42

    def test_size_at_fresh_seed(self):
        replicates = 20000
        plan = SimulationPlan(StatisticKind.tstar(), 50, 50, replicates, 11)

        for alpha in (0.01, 0.05):
            entry = self.service.critical_value(plan, alpha)
            rate = self.service.rejection_rate(plan, entry.critical_value, 12)

            assert rate.estimate <= alpha + 3.0 * math.sqrt(alpha * (1.0 - alpha) / replicates)


class TestPower:
    def setup_method(self):
        self.service = MonteCarloService(chunk_size=512)
        self.plan = SimulationPlan(
            StatisticKind.ks(), 30, 30, 500, 8, Alternatives.preset_pair('lognormal')
        )

    def test_infinite_critical_values(self):
        assert self.service.power(self.plan, -math.inf).estimate == 1.0
        assert self.service.power(self.plan, math.inf).estimate == 0.0

    def test_interval(self):
        estimate = self.service.power(self.plan, 0.8)

        assert estimate.interval_low <= estimate.estimate <= estimate.interval_high
        assert (estimate.interval_high - estimate.interval_low) / 2.0 <= 1.96 * math.sqrt(
            0.25 / estimate.replicates
        )

    def test_needs_an_alternative(self):
        with pytest.raises(SdtestConfigurationException):
            self.service.power(self.plan.replace(alternative=None), 1.0)

    def test_null_model_forced_past_validation(self):
        uniform = ContinuousDistribution.uniform_01()
        null_pair = AlternativePair(uniform, uniform, validate=False)
        replicates = 5000
        plan = SimulationPlan(StatisticKind.tcirc(), 40, 40, replicates, 21)
        critical = self.service.critical_value(plan, 0.05).critical_value
        estimate = self.service.power(plan.replace(alternative=null_pair), critical)

        assert estimate.estimate <= 0.05 + 3.0 * math.sqrt(0.05 * 0.95 / replicates)

    def test_contamination_path(self):
        path = ContaminationPath(Alternatives.preset_pair('lognormal'), q=0.25)
        plan = SimulationPlan(StatisticKind.tstar(), 50, 50, 400, 3, path)
        critical = self.service.critical_value(
            SimulationPlan(StatisticKind.tstar(), 50, 50, 2000, 3), 0.05
        ).critical_value

        assert 0.0 <= self.service.power(plan, critical).estimate <= 1.0


class TestScaledKolmogorovSmirnov:
    def setup_method(self):
        self.service = MonteCarloService(chunk_size=512, critical_replicates=2000)

    def test_scaled_sizes(self):
        assert MonteCarloService.scaled_sizes(100, 100, 1.016) == (101, 101)
        assert MonteCarloService.scaled_sizes(100, 300, 4.0) == (400, 1200)

    def test_unit_efficiency_is_plain_ks(self):
        pair = Alternatives.preset_pair('pareto')
        plan = SimulationPlan(StatisticKind.tstar(), 20, 25, 400, 77, pair)
        scaled = self.service.power_scaled_ks(plan, 1.0, 0.05)
        critical = self.service.critical_value(
            SimulationPlan(StatisticKind.ks(), 20, 25, 2000, 77), 0.05
        ).critical_value
        plain = self.service.power(plan.replace(statistic=StatisticKind.ks()), critical)

        assert scaled.estimate == plain.estimate
        assert scaled.critical_value == plain.critical_value

    def test_efficiency_below_one(self):
        with pytest.raises(SdtestDomainException):
            self.service.power_scaled_ks(
                SimulationPlan(StatisticKind.ks(), 5, 5, 10, 0, Alternatives.preset_pair('mu')),
                0.9,
                0.05,
            )


class TestSampleRatio:
    def setup_method(self):
        self.service = MonteCarloService(chunk_size=512, critical_replicates=2000)

    def test_self_comparison(self):
        pair = AlternativePair(
            ContinuousDistribution.normal(0.0, 1.0), ContinuousDistribution.normal(-0.5, 1.0)
        )
        path = ContaminationPath(pair, theta=0.9)
        estimate = self.service.empirical_sample_ratio(
            StatisticKind.ks(), StatisticKind.ks(), path, 60, 0.05, 400, seed=4
        )

        assert not estimate.degenerate
        assert estimate.challenger_power.interval_high > 0.05
        assert 0.5 <= estimate.ratio <= 1.0
        assert not estimate.unbounded
        assert estimate.benchmark_power.estimate >= estimate.challenger_power.estimate

    def test_no_detectable_power_is_degenerate(self):
        path = ContaminationPath(Alternatives.preset_pair('lognormal'), theta=0.5)
        estimate = self.service.empirical_sample_ratio(
            StatisticKind.ks(), StatisticKind.ks(), path, 60, 0.05, 400, seed=4
        )

        assert estimate.challenger_power.interval_high <= 0.05
        assert estimate.degenerate
        assert math.isnan(estimate.ratio)
        assert estimate.benchmark_size == 60
        assert not estimate.saturated
        assert not estimate.unbounded

    def test_saturation_flag(self):
        pair = AlternativePair(
            ContinuousDistribution.normal(0.0, 1.0), ContinuousDistribution.normal(-3.0, 1.0)
        )
        path = ContaminationPath(pair, theta=0.99)
        estimate = self.service.empirical_sample_ratio(
            StatisticKind.ks(), StatisticKind.tstar(), path, 100, 0.05, 500, seed=5
        )

        assert estimate.saturated
        assert estimate.ratio <= 1.0

    def test_insufficient_replicates(self):
        path = ContaminationPath(Alternatives.preset_pair('lognormal'), theta=0.5)

        with pytest.raises(SdtestInsufficientReplicatesException):
            self.service.empirical_sample_ratio(
                StatisticKind.ks(), StatisticKind.tstar(), path, 60, 0.01, 100
            )

    @pytest.mark.slow
    def test_lognormal_ratio_tracks_efficiency(self):
        pair = Alternatives.preset_pair('lognormal', 0.5)
        path = ContaminationPath(pair, theta=0.9)
        estimate = MonteCarloService(threads=4, chunk_size=512).empirical_sample_ratio(
            StatisticKind.ks(),
            StatisticKind.tstar(),
            path,
            500,
            0.05,
            2000,
            seed=8,
            critical_replicates=20000,
        )

        e_tv = Efficiency.efficiency_tv(pair).e_tv

        assert not estimate.unbounded
        assert not estimate.saturated
        assert abs(estimate.ratio / e_tv - 1.0) <= 0.3


class TestModerateDeviations:
    def test_flagged_when_too_rare(self):
        estimates = MonteCarloService().mdev_slope(
            StatisticKind.ks(), [100], lambda size: 1.0, 200, seed=1
        )

        assert estimates[0].flagged
        assert estimates[0].slope is None
        assert estimates[0].exceedances < MonteCarloService.EXCEEDANCE_FLOOR

    def test_slope_definition(self):
        (estimate,) = MonteCarloService(chunk_size=1024).mdev_slope(
            StatisticKind.ks(), [100], lambda size: 0.5 * size ** -0.35, 4000, seed=2
        )

        assert not estimate.flagged
        assert_allclose(
            estimate.slope,
            -math.log(estimate.probability) / (100 * estimate.w ** 2),
        )
        assert_allclose(estimate.threshold, estimate.w * 10.0)

    @pytest.mark.slow
    def test_slopes_trend(self):
        service = MonteCarloService(threads=4, chunk_size=2048)
        sizes = [100, 400, 1600]

        def w_of_n(size):
            return 0.5 * size ** -0.35

        v_slopes = service.mdev_slope(StatisticKind.ks(), sizes, w_of_n, 20000, seed=3)
        t_slopes = service.mdev_slope(StatisticKind.tpow(0.25), sizes, w_of_n, 20000, seed=3)

        assert all(estimate.exceedances >= 50 for estimate in v_slopes + t_slopes)
        assert 1.0 <= v_slopes[-1].slope <= 2.6

        for (v_slope, t_slope) in zip(v_slopes, t_slopes):
            assert t_slope.slope < v_slope.slope


class TestPowerOrdering:
    @pytest.mark.slow
    @pytest.mark.parametrize('name', ['pareto', 'lognormal'])
    def test_scaled_ks_keeps_up_with_tstar(self, name):
        service = MonteCarloService(threads=4, chunk_size=500, critical_replicates=20000)
        pair = Alternatives.preset_pair(name, 0.5)
        plan = SimulationPlan(StatisticKind.tstar(), 200, 200, 2000, 1, pair)
        e_tv = Efficiency.efficiency_tv(pair).e_tv

        critical = service.critical_value(
            plan.replace(alternative=None, replicates=20000), 0.01
        ).critical_value
        tstar = service.power(plan, critical)
        scaled = service.power_scaled_ks(plan, e_tv, 0.01)

        assert scaled.estimate >= tstar.estimate - 3.0 * combined_standard_error(scaled, tstar)

    @pytest.mark.slow
    def test_tstar_beats_plain_ks_on_lognormal(self):
        service = MonteCarloService(threads=4, chunk_size=500)
        pair = Alternatives.preset_pair('lognormal', 0.5)
        plan = SimulationPlan(StatisticKind.tstar(), 200, 200, 2000, 1, pair)
        null_plan = plan.replace(alternative=None, replicates=20000)
        statistics = [StatisticKind.ks(), StatisticKind.tstar()]
        table = service.critical_values(null_plan, [0.01], statistics)
        powers = service.power_many(
            plan,
            {entry.statistic: entry.critical_value for entry in table},
            statistics,
        )

        assert powers['tstar'].estimate - powers['ks'].estimate >= 3.0 * combined_standard_error(
            powers['tstar'], powers['ks']
        )


class TestPowerCurveAlpha:
    def test_power_grows_with_alpha(self):
        service = MonteCarloService(chunk_size=512)
        plan = SimulationPlan(
            StatisticKind.tcirc(), 40, 40, 500, 6, Alternatives.preset_pair('singh_maddala')
        )
        curve = service.power_curve_alpha(plan, [0.005, 0.01, 0.05], critical_replicates=8000)
        powers = [estimate.estimate for (_, estimate) in curve]

        assert [alpha for (alpha, _) in curve] == [0.005, 0.01, 0.05]
        assert powers[0] <= powers[1] <= powers[2]
