import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from pysdtest.alternatives import Alternatives
from pysdtest.efficiency import Efficiency
from pysdtest.exceptions import SdtestDomainException
from pysdtest.exceptions import SdtestNotInAlternativeException
from pysdtest.objects.alternative_pair import AlternativePair
from pysdtest.objects.contamination_path import ContaminationPath
from pysdtest.objects.continuous_distribution import ContinuousDistribution
from pysdtest.objects.partition_scheme import PartitionScheme
from pysdtest.statistics import Statistics

COARSE_ETA_GRID = [0.05, 0.2, 0.35, 0.5, 0.65, 0.8, 0.95]


def maximum_efficiency(name, eta_grid=None):
    pair = Alternatives.preset_pair(name)

    return max(report.e_tv for report in Efficiency.efficiency_curve(pair, eta_grid))


class TestDeviationFunctions:
    def test_identical_distributions(self):
        normal = ContinuousDistribution.normal()
        pair = AlternativePair(normal, normal, 0.4, validate=False)
        t = np.linspace(0.01, 0.99, 50)

        assert_allclose(Efficiency.abar(pair, t), 0.0, atol=1e-12)
        assert_allclose(Efficiency.astar(pair, t), 0.0, atol=1e-12)

    def test_astar_at_half(self):
        pair = Alternatives.preset_pair('lognormal', 0.5)

        assert_allclose(Efficiency.astar(pair, 0.5), 2.0 * Efficiency.abar(pair, 0.5))

    @pytest.mark.parametrize('eta', [0.5, 0.9])
    @pytest.mark.parametrize('name', Alternatives.preset_pair_names())
    def test_astar_vanishes_at_endpoints(self, name, eta):
        pair = Alternatives.preset_pair(name, eta)
        smaller = min(eta, 1.0 - eta)

        # |G_1 - F_1| <= min(J_1, 1 - J_1) / min(eta, 1 - eta)
        for t in (1e-6, 1e-8, 1e-10):
            bound = 1.05 * math.sqrt(t / (1.0 - t)) / smaller

            assert abs(Efficiency.astar(pair, t)) <= bound
            assert abs(Efficiency.astar(pair, 1.0 - t)) <= bound

        report = Efficiency.efficiency_tv(pair)

        assert abs(Efficiency.astar(pair, 1e-10)) < 0.01 * report.sup_astar
        assert abs(Efficiency.astar(pair, 1.0 - 1e-10)) < 0.01 * report.sup_astar

    def test_domain(self):
        with pytest.raises(SdtestDomainException):
            Efficiency.abar(Alternatives.preset_pair('mu'), 1.0)

    def test_abar_is_the_distribution_difference(self):
        pair = Alternatives.preset_pair('pareto', 0.3)
        t = np.array([0.1, 0.4, 0.8])
        z = Alternatives.pooled_mixture_quantile(pair, t)

        assert_allclose(
            Efficiency.abar(pair, t),
            Alternatives.cdf(pair.g1, z) - Alternatives.cdf(pair.f1, z),
        )


class TestEfficiency:
    def test_mu_pair(self):
        assert abs(maximum_efficiency('mu') - 1.016) <= 0.005

    def test_laplace_pair_maximum(self):
        reports = Efficiency.efficiency_curve(Alternatives.preset_pair('laplace'))
        largest = max(reports, key=lambda report: report.e_tv)

        assert abs(largest.e_tv / 139.8 - 1.0) <= 0.02

    @pytest.mark.parametrize(
        ('pair', 'transformed'),
        [
            (
                AlternativePair(
                    ContinuousDistribution.singh_maddala(2.0, 1.0, 1.5),
                    ContinuousDistribution.singh_maddala(1.5, 1.0, 1.0),
                    0.3,
                ),
                # the cube of SM(a, b, c) is SM(a / 3, b^3, c)
                AlternativePair(
                    ContinuousDistribution.singh_maddala(2.0 / 3.0, 1.0, 1.5),
                    ContinuousDistribution.singh_maddala(0.5, 1.0, 1.0),
                    0.3,
                ),
            ),
            (
                AlternativePair(
                    ContinuousDistribution.normal(0.0, 1.0),
                    ContinuousDistribution.normal(1.0, 2.0),
                    0.6,
                ),
                AlternativePair(
                    ContinuousDistribution.log_normal(0.0, 1.0),
                    ContinuousDistribution.log_normal(1.0, 2.0),
                    0.6,
                ),
            ),
        ],
        ids=['cube', 'exp'],
    )
    def test_invariant_under_increasing_maps(self, pair, transformed):
        report = Efficiency.efficiency_tv(pair)
        other = Efficiency.efficiency_tv(transformed)

        assert_allclose(other.e_tv, report.e_tv, rtol=1e-6)
        assert_allclose(other.sup_abar, report.sup_abar, rtol=1e-6)
        assert_allclose(other.argmax_astar, report.argmax_astar, atol=1e-4)

    def test_lognormal_pair_range(self):
        pair = Alternatives.preset_pair('lognormal')

        for report in Efficiency.efficiency_curve(pair, np.linspace(0.1, 0.9, 9)):
            assert 3.5 <= report.e_tv <= 17.0

    @pytest.mark.parametrize('name', Alternatives.preset_pair_names())
    def test_lower_bound(self, name):
        pair = Alternatives.preset_pair(name)

        for report in Efficiency.efficiency_curve(pair, COARSE_ETA_GRID):
            assert report.e_tv >= 1.0 - 1e-9
            assert report.sup_abar > 0.0
            assert report.sup_astar >= 2.0 * report.sup_abar - 1e-12

    @pytest.mark.slow
    @pytest.mark.parametrize('name', Alternatives.preset_pair_names())
    def test_lower_bound_on_full_grid(self, name):
        pair = Alternatives.preset_pair(name)

        for report in Efficiency.efficiency_curve(pair):
            assert report.e_tv >= 1.0 - 1e-9

    def test_equality_when_peak_is_at_half(self):
        pair = AlternativePair(
            ContinuousDistribution.normal(0.0, 1.0), ContinuousDistribution.normal(-0.5, 1.0)
        )
        report = Efficiency.efficiency_tv(pair)

        assert_allclose(report.argmax_astar, 0.5, atol=1e-4)
        assert abs(report.e_tv - 1.0) <= 1e-6

    def test_report_is_consistent(self):
        report = Efficiency.efficiency_tv(Alternatives.preset_pair('singh_maddala', 0.3))

        assert_allclose(report.e_tv, (report.sup_astar / (2.0 * report.sup_abar)) ** 2)
        assert 0.0 < report.argmax_astar < 1.0
        assert report.eta == 0.3

    def test_not_in_alternative(self):
        uniform = ContinuousDistribution.uniform_01()

        with pytest.raises(SdtestNotInAlternativeException):
            Efficiency.efficiency_tv(AlternativePair(uniform, uniform, validate=False))

    def test_curve_is_ordered_and_thread_independent(self):
        pair = Alternatives.preset_pair('pareto')
        serial = Efficiency.efficiency_curve(pair, COARSE_ETA_GRID)
        parallel = Efficiency.efficiency_curve(pair, COARSE_ETA_GRID, threads=3)

        assert [report.eta for report in serial] == COARSE_ETA_GRID
        assert [report.e_tv for report in serial] == [report.e_tv for report in parallel]


class TestSampleSizes:
    def test_floor(self):
        assert Efficiency.sample_sizes(0.5, 401) == (200, 201)
        assert Efficiency.sample_sizes(0.3, 10) == (3, 7)

    def test_empty_sample(self):
        with pytest.raises(SdtestDomainException):
            Efficiency.sample_sizes(0.1, 5)


class TestCentering:
    def setup_method(self):
        self.pair = Alternatives.preset_pair('lognormal', 0.5)
        self.report = Efficiency.efficiency_tv(self.pair)

    def test_zero_contamination(self):
        assert Efficiency.centering_v_value(self.report.sup_abar, 0.0, 50, 50) == 0.0
        assert Efficiency.centering_t_value(self.pair, 0.0, 50, 50, [0.25, 0.5]) == 0.0

    def test_balanced_v(self):
        path = ContaminationPath(self.pair, theta=0.2)

        assert_allclose(
            Efficiency.centering_v(path, 400, self.report),
            math.sqrt(400) / 2.0 * 0.2 * self.report.sup_abar,
        )

    def test_v_is_linear_in_theta(self):
        low = Efficiency.centering_v(ContaminationPath(self.pair, theta=0.1), 400, self.report)
        high = Efficiency.centering_v(ContaminationPath(self.pair, theta=0.2), 400, self.report)

        assert_allclose(high, 2.0 * low)

    def test_single_point_t(self):
        path = ContaminationPath(self.pair, theta=0.3)
        expected = 0.3 * math.sqrt(200 * 200 / 400.0) * 2.0 * Efficiency.abar(self.pair, 0.5)

        assert_allclose(
            Efficiency.centering_t(path, 400, PartitionScheme.explicit([0.5])), expected
        )

    def test_t_grows_with_grid(self):
        path = ContaminationPath(self.pair, q=0.25)
        coarse = Efficiency.centering_t(path, 400, PartitionScheme.explicit([0.5]))
        fine = Efficiency.centering_t(path, 400, PartitionScheme.explicit([0.25, 0.5, 0.75]))

        assert fine >= coarse

    def test_t_never_exceeds_the_efficiency_scale(self):
        path = ContaminationPath(self.pair, q=0.25)
        (m, n) = Efficiency.sample_sizes(0.5, 4096)
        theta = Alternatives.theta(path, 4096)
        b_t = Efficiency.centering_t(path, 4096, PartitionScheme.dyadic_star())

        assert b_t <= theta * math.sqrt(m * n / 4096.0) * self.report.sup_astar * (1.0 + 1e-6)
        assert Statistics.grid(PartitionScheme.dyadic_star(), 4096).size == 4095

    def test_dense_t_approaches_the_efficiency_scale(self):
        pair = AlternativePair(
            ContinuousDistribution.normal(0.0, 1.0), ContinuousDistribution.normal(-0.5, 1.0), 0.3
        )
        path = ContaminationPath(pair, theta=0.4)
        report = Efficiency.efficiency_tv(pair)
        gaps = []

        for size in (100, 400, 1600):
            (m, n) = Efficiency.sample_sizes(0.3, size)
            scale = 0.4 * math.sqrt(m * n / float(size)) * report.sup_astar
            gaps.append(1.0 - Efficiency.centering_t(path, size, PartitionScheme.dense_o()) / scale)

        points = Statistics.grid(PartitionScheme.dense_o(), 100)

        assert points[0] < report.argmax_astar < points[-1]
        assert all(gap >= -1e-9 for gap in gaps)
        assert gaps[0] <= 1e-2
        assert gaps[-1] <= 1e-4
