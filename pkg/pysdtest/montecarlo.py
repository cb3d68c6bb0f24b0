"""
This module is home to the MonteCarloService class
"""
import logging
import math
import numbers
from collections import OrderedDict
from concurrent.futures import ThreadPoolExecutor

import numpy as np
from scipy import stats

from pysdtest.alternatives import Alternatives
from pysdtest.efficiency import Efficiency
from pysdtest.enumerations import Family
from pysdtest.enumerations import StreamPurpose
from pysdtest.exceptions import SdtestConfigurationException
from pysdtest.exceptions import SdtestDomainException
from pysdtest.exceptions import SdtestInsufficientReplicatesException
from pysdtest.objects.alternative_pair import AlternativePair
from pysdtest.objects.contamination_path import ContaminationPath
from pysdtest.objects.critical_value_table import CriticalValueEntry
from pysdtest.objects.critical_value_table import CriticalValueTable
from pysdtest.objects.power_estimate import PowerEstimate
from pysdtest.objects.sample_ratio_estimate import SampleRatioEstimate
from pysdtest.objects.simulation_plan import SimulationPlan
from pysdtest.objects.slope_estimate import SlopeEstimate
from pysdtest.objects.statistic_kind import StatisticKind
from pysdtest.sdtest_object import SdtestObject
from pysdtest.statistics import Statistics

logger = logging.getLogger(__name__)


class MonteCarloService(SdtestObject):
    """
    Reproducible parallel Monte Carlo engine.

    Replicate i of a run draws its m + n uniforms from a Philox stream
    seeded by SeedSequence(seed, spawn_key=(purpose, i)); the first m
    feed X. Replicates are grouped in chunks and spread over a thread
    pool, and every chunk writes to its own slice of the result, so
    outputs are bitwise identical whatever the thread count. All
    statistics requested in one call are evaluated on the same uniforms.
    """

    __slots__ = [
        '_threads',
        '_chunk_size',
        '_power_replicates',
        '_critical_replicates',
    ]

    MINIMUM_TAIL_REPLICATES = 20
    EXCEEDANCE_FLOOR = 10
    SAMPLE_RATIO_LIMIT = 64
    SAMPLE_RATIO_RESOLUTION = 0.02
    SATURATION_LEVEL = 0.99
    CONFIDENCE_LEVEL = 0.95

    attribute_name_map = {
        'threads': 'threads',
        'chunk_size': 'chunk_size',
        'power_replicates': 'power_replicates',
        'critical_replicates': 'critical_replicates',
    }

    attribute_type_map = {
        'threads': 'int',
        'chunk_size': 'int',
        'power_replicates': 'int',
        'critical_replicates': 'int',
    }

    def __init__(
        self, threads=1, chunk_size=256, power_replicates=5000, critical_replicates=100000
    ):
        """
        Construct a MonteCarloService instance

        :param threads: Worker threads
        :param chunk_size: Replicates per task
        :param power_replicates: Default replicate count for powers
        :param critical_replicates: Default replicate count for critical
        values
        :raises TypeError: If an argument is not an integer
        :raises ValueError: If an argument is below 1
        """
        for (name, value) in (
            ('threads', threads),
            ('chunk_size', chunk_size),
            ('power_replicates', power_replicates),
            ('critical_replicates', critical_replicates),
        ):
            if isinstance(value, bool) or not isinstance(value, numbers.Integral):
                raise TypeError('{0} must be an instance of {1}'.format(name, int))
            if value < 1:
                raise ValueError('{0} must be >= 1'.format(name))

        self._threads = int(threads)
        self._chunk_size = int(chunk_size)
        self._power_replicates = int(power_replicates)
        self._critical_replicates = int(critical_replicates)

    @classmethod
    def generator(cls, seed, purpose, replicate):
        """
        The counter-derived random stream of one replicate

        :rtype: numpy.random.Generator
        """
        return np.random.Generator(
            np.random.Philox(
                np.random.SeedSequence(seed, spawn_key=(purpose.value, replicate))
            )
        )

    @classmethod
    def data_model(cls, plan):
        """
        (distribution of X, distribution of Y) for a plan
        """
        alternative = plan.alternative

        if alternative is None:
            return (plan.null_distribution, plan.null_distribution)
        if isinstance(alternative, AlternativePair):
            return (alternative.f1, alternative.g1)

        return Alternatives.contaminated_pair(
            alternative,
            plan.path_index if plan.path_index is not None else plan.size,
        )

    def _simulate_chunk(self, plan, statistics, purpose, start, stop):
        (x_distribution, y_distribution) = self.data_model(plan)
        (m, size) = (plan.m, plan.size)
        values = np.empty((stop - start, size), dtype=np.float64)

        for replicate in range(start, stop):
            uniforms = self.generator(plan.seed, purpose, replicate).random(size)
            row = values[replicate - start]

            if x_distribution.family is Family.UNIFORM_01:
                row[:m] = uniforms[:m]
            else:
                row[:m] = Alternatives.from_uniforms(x_distribution, uniforms[:m])

            if y_distribution.family is Family.UNIFORM_01:
                row[m:] = uniforms[m:]
            else:
                row[m:] = Alternatives.from_uniforms(y_distribution, uniforms[m:])

        is_x = Statistics.indicators_from_values(values, m)

        return [Statistics.evaluate_indicators(kind, is_x, m) for kind in statistics]

    def simulate_many(self, plan, statistics, purpose=None):
        """
        Simulate every statistic on common random numbers

        :param plan: The simulation plan; its own statistic is ignored
        :param statistics: StatisticKind list
        :param purpose: Stream purpose; NULL without an alternative,
        ALTERNATIVE with one, unless given
        :return: Statistic name -> ndarray of R values
        :rtype: OrderedDict
        """
        if not isinstance(plan, SimulationPlan):
            raise TypeError('plan must be an instance of {0}'.format(SimulationPlan))

        statistics = list(statistics)

        if purpose is None:
            purpose = (
                StreamPurpose.NULL
                if plan.alternative is None
                else StreamPurpose.ALTERNATIVE
            )

        logger.debug(
            'Simulation\n'
            '[Plan]\n'
            '======\n%s\n\n'
            '[Statistics]\n'
            '============\n%s\n\n'
            '[Purpose]\n'
            '=========\n%s',
            plan.pretty_format(),
            ', '.join(kind.name for kind in statistics),
            purpose.name,
        )

        replicates = plan.replicates
        results = np.empty((len(statistics), replicates), dtype=np.float64)
        bounds = [
            (start, min(start + self._chunk_size, replicates))
            for start in range(0, replicates, self._chunk_size)
        ]

        def run(bound):
            (start, stop) = bound
            chunk = self._simulate_chunk(plan, statistics, purpose, start, stop)

            for (index, values) in enumerate(chunk):
                results[index, start:stop] = values

        try:
            if self._threads == 1 or len(bounds) == 1:
                for bound in bounds:
                    run(bound)
            else:
                with ThreadPoolExecutor(max_workers=self._threads) as executor:
                    for _ in executor.map(run, bounds):
                        pass
        except Exception:
            logger.exception('Simulation failed for plan %s', plan)

            raise

        return OrderedDict(
            (kind.name, results[index]) for (index, kind) in enumerate(statistics)
        )

    def simulate(self, plan, purpose=None):
        """
        R values of the plan's statistic

        :rtype: ndarray
        """
        return self.simulate_many(plan, [plan.statistic], purpose)[plan.statistic.name]

    @classmethod
    def _check_alpha(cls, alpha, replicates):
        if not 0.0 < alpha < 1.0:
            raise SdtestDomainException(
                'alpha must lie in (0, 1), got {0!r}'.format(alpha), alpha
            )
        if replicates * alpha < cls.MINIMUM_TAIL_REPLICATES:
            logger.error(
                'R * alpha = %d * %r is below %d',
                replicates,
                alpha,
                cls.MINIMUM_TAIL_REPLICATES,
            )

            raise SdtestInsufficientReplicatesException(
                'R * alpha must be >= {0}, got R={1}, alpha={2!r}'.format(
                    cls.MINIMUM_TAIL_REPLICATES, replicates, alpha
                ),
                replicates,
                alpha,
            )

    @classmethod
    def order_statistic_index(cls, alpha, replicates):
        """
        0-based index of the ceil((1 - alpha)(R + 1))-th order statistic,
        clamped to the R-th
        """
        rank = int(math.ceil(round((1.0 - alpha) * (replicates + 1), 9)))

        return min(max(rank, 1), replicates) - 1

    def critical_values(self, plan, alphas, statistics=None):
        """
        Conservative Monte Carlo critical values for several levels and
        statistics from one null simulation

        :param plan: A null plan (no alternative)
        :param alphas: Levels in (0, 1) with R * alpha >= 20
        :param statistics: StatisticKind list; the plan's own by default
        :rtype: CriticalValueTable
        :raises SdtestConfigurationException: If plan has an alternative
        :raises SdtestInsufficientReplicatesException: If R * alpha < 20
        """
        if plan.alternative is not None:
            raise SdtestConfigurationException(
                'Critical values are simulated under the null; plan has an alternative',
                'alternative',
            )

        alphas = list(alphas)
        for alpha in alphas:
            self._check_alpha(alpha, plan.replicates)

        statistics = [plan.statistic] if statistics is None else list(statistics)
        simulated = self.simulate_many(plan, statistics, StreamPurpose.NULL)
        table = CriticalValueTable()

        for (name, values) in simulated.items():
            ordered = np.sort(values)

            for alpha in alphas:
                table.add(
                    CriticalValueEntry(
                        name,
                        plan.m,
                        plan.n,
                        alpha,
                        float(ordered[self.order_statistic_index(alpha, plan.replicates)]),
                        plan.replicates,
                        plan.seed,
                    )
                )

        return table

    def critical_value(self, plan, alpha):
        """
        The conservative critical value of the plan's statistic at level
        alpha

        :rtype: CriticalValueEntry
        """
        return self.critical_values(plan, [alpha]).lookup(
            plan.statistic.name, plan.m, plan.n, alpha
        )

    def critical_value_table(self, plan, alphas):
        """
        Critical values of the plan's own statistic at every level

        :rtype: CriticalValueTable
        """
        return self.critical_values(plan, alphas)

    @classmethod
    def estimate(cls, rejections, replicates, critical_value, seed):
        """
        PowerEstimate with a 95% Wilson interval
        """
        interval = stats.binomtest(int(rejections), int(replicates)).proportion_ci(
            confidence_level=cls.CONFIDENCE_LEVEL, method='wilson'
        )

        return PowerEstimate(
            estimate=rejections / float(replicates),
            rejections=int(rejections),
            replicates=int(replicates),
            interval_low=float(interval.low),
            interval_high=float(interval.high),
            critical_value=critical_value,
            seed=seed,
        )

    def power_many(self, plan, critical_values, statistics, purpose=None):
        """
        Powers of several statistics on common random numbers

        :param plan: A plan with an alternative
        :param critical_values: Statistic name -> critical value
        :param statistics: StatisticKind list
        :return: Statistic name -> PowerEstimate
        :rtype: OrderedDict
        """
        if plan.alternative is None and purpose is None:
            raise SdtestConfigurationException(
                'Power requires a plan with an alternative', 'alternative'
            )

        simulated = self.simulate_many(plan, statistics, purpose)

        return OrderedDict(
            (
                name,
                self.estimate(
                    int(np.count_nonzero(values > critical_values[name])),
                    plan.replicates,
                    critical_values[name],
                    plan.seed,
                ),
            )
            for (name, values) in simulated.items()
        )

    def power(self, plan, critical):
        """
        Fraction of replicates under the plan's alternative whose
        statistic exceeds critical

        :rtype: PowerEstimate
        :raises SdtestConfigurationException: If plan has no alternative
        """
        return self.power_many(
            plan, {plan.statistic.name: critical}, [plan.statistic]
        )[plan.statistic.name]

    def rejection_rate(self, plan, critical, seed):
        """
        Size check: rejection rate of critical under the null with a
        fresh seed and its own stream purpose

        :rtype: PowerEstimate
        """
        null_plan = plan.replace(alternative=None, path_index=None, seed=seed)

        return self.power_many(
            null_plan,
            {plan.statistic.name: critical},
            [plan.statistic],
            StreamPurpose.SIZE_CHECK,
        )[plan.statistic.name]

    def power_curve_alpha(self, plan, alphas, critical_replicates=None):
        """
        Power of the plan's statistic against alpha at fixed sizes; one
        null and one alternative simulation serve every level

        :return: (alpha, PowerEstimate) pairs
        :rtype: list
        """
        null_plan = plan.replace(
            alternative=None,
            path_index=None,
            replicates=critical_replicates or self._critical_replicates,
        )
        table = self.critical_values(null_plan, alphas)
        values = self.simulate(plan)
        curve = []

        for alpha in alphas:
            critical = table.lookup(plan.statistic.name, plan.m, plan.n, alpha).critical_value
            curve.append(
                (
                    alpha,
                    self.estimate(
                        int(np.count_nonzero(values > critical)),
                        plan.replicates,
                        critical,
                        plan.seed,
                    ),
                )
            )

        return curve

    @classmethod
    def scaled_sizes(cls, m, n, e_tv):
        """
        (floor(m e_TV), floor(n e_TV))
        """
        return (
            int(math.floor(round(m * e_tv, 9))),
            int(math.floor(round(n * e_tv, 9))),
        )

    def power_scaled_ks(self, plan, e_tv, alpha, critical_replicates=None):
        """
        Power of V at the efficiency-scaled sizes, with its own critical
        value at level alpha from the plan's seed. A contamination path
        keeps theta at the plan's pooled size.

        :raises SdtestDomainException: If e_tv < 1 or a scaled size is
        below 1
        """
        if e_tv < 1.0:
            raise SdtestDomainException(
                'e_tv must be >= 1, got {0!r}'.format(e_tv), e_tv
            )

        (m, n) = self.scaled_sizes(plan.m, plan.n, e_tv)

        if m < 1 or n < 1:
            raise SdtestDomainException(
                'Scaled sizes ({0}, {1}) are below 1'.format(m, n), min(m, n)
            )

        path_index = plan.path_index
        if isinstance(plan.alternative, ContaminationPath) and path_index is None:
            path_index = plan.size

        ks_plan = plan.replace(
            statistic=StatisticKind.ks(), m=m, n=n, path_index=path_index
        )
        critical = self.critical_value(
            ks_plan.replace(
                alternative=None,
                path_index=None,
                replicates=critical_replicates or self._critical_replicates,
            ),
            alpha,
        )

        return self.power(ks_plan, critical.critical_value)

    def _power_at(self, statistic, path, size, m, n, alpha, replicates, critical_replicates, seed):
        null_plan = SimulationPlan(statistic, m, n, critical_replicates, seed)
        critical = self.critical_value(null_plan, alpha).critical_value

        return self.power(
            SimulationPlan(statistic, m, n, replicates, seed, path, path_index=size),
            critical,
        )

    def empirical_sample_ratio(
        self,
        benchmark,
        challenger,
        path,
        size,
        alpha,
        replicates,
        seed=0,
        critical_replicates=None,
    ):
        """
        Estimate M / N, M the smallest benchmark pooled size whose power
        at (floor(eta M), M - floor(eta M)) under theta_N reaches the
        challenger's power at N.

        M is searched by halving or doubling from N and then bisection on
        a geometric scale down to a 2% bracket; power is assumed
        nondecreasing in M.

        When the challenger's Wilson interval does not rise above alpha
        there is nothing to match; the estimate comes back degenerate
        with ratio nan and no search is made.

        :rtype: SampleRatioEstimate
        :raises SdtestInsufficientReplicatesException: If R * alpha < 20
        """
        if not isinstance(path, ContaminationPath):
            raise TypeError('path must be an instance of {0}'.format(ContaminationPath))

        self._check_alpha(alpha, replicates)

        critical_replicates = critical_replicates or self._critical_replicates
        eta = path.base.eta
        (m, n) = Efficiency.sample_sizes(eta, size)
        target = self._power_at(
            challenger, path, size, m, n, alpha, replicates, critical_replicates, seed
        )
        saturated = target.interval_low >= self.SATURATION_LEVEL

        if saturated:
            logger.warning(
                'Challenger power %.4f at N=%d is saturated', target.estimate, size
            )

        if target.interval_high <= alpha:
            logger.warning(
                'Challenger power %.4f at N=%d is not above alpha=%r, no search',
                target.estimate,
                size,
                alpha,
            )

            return SampleRatioEstimate(
                ratio=math.nan,
                size=size,
                benchmark_size=size,
                challenger_power=target,
                benchmark_power=target,
                half_width=(target.interval_high - target.interval_low) / 2.0,
                saturated=False,
                unbounded=False,
                degenerate=True,
            )

        cache = {}

        def benchmark_power(total):
            if total not in cache:
                (m_, n_) = Efficiency.sample_sizes(eta, total)
                cache[total] = self._power_at(
                    benchmark,
                    path,
                    size,
                    m_,
                    n_,
                    alpha,
                    replicates,
                    critical_replicates,
                    seed,
                )

            return cache[total]

        def reaches(total):
            # a candidate without a single rejection never ends the halving
            power = benchmark_power(total).estimate

            return power > 0.0 and power >= target.estimate

        smallest = 2
        while True:
            try:
                Efficiency.sample_sizes(eta, smallest)
                break
            except SdtestDomainException:
                smallest += 1

        limit = self.SAMPLE_RATIO_LIMIT * size
        unbounded = False

        if reaches(size):
            (low, high) = (None, size)

            while high > smallest:
                candidate = max(high // 2, smallest)
                if reaches(candidate):
                    high = candidate
                else:
                    low = candidate
                    break
        else:
            (low, high) = (size, None)

            while high is None:
                candidate = min(2 * low, limit)
                if reaches(candidate):
                    high = candidate
                elif candidate >= limit:
                    unbounded = True
                    break
                else:
                    low = candidate

        if not unbounded:
            while (
                low is not None
                and high - low > 1
                and high > low * (1.0 + self.SAMPLE_RATIO_RESOLUTION)
            ):
                candidate = int(round(math.sqrt(low * high)))
                candidate = min(max(candidate, low + 1), high - 1)

                if reaches(candidate):
                    high = candidate
                else:
                    low = candidate

        benchmark_size = limit if unbounded else high
        reached = benchmark_power(benchmark_size)

        estimate = SampleRatioEstimate(
            ratio=math.inf if unbounded else benchmark_size / float(size),
            size=size,
            benchmark_size=benchmark_size,
            challenger_power=target,
            benchmark_power=reached,
            half_width=max(
                (power.interval_high - power.interval_low) / 2.0
                for power in (target, reached)
            ),
            saturated=saturated,
            unbounded=unbounded,
        )

        logger.info(
            'Sample ratio %s/%s at N=%d: %r (M=%d, candidates=%d)',
            benchmark.name,
            challenger.name,
            size,
            estimate.ratio,
            benchmark_size,
            len(cache),
        )

        return estimate

    def mdev_slope(self, statistic, sizes, w_of_n, replicates, seed=0, eta=0.5):
        """
        Moderate-deviation slopes -log(P) / (N w_N^2), P the null
        probability that the statistic reaches w_N sqrt(N)

        :param statistic: The statistic
        :param sizes: Pooled sizes N
        :param w_of_n: Callable N -> w_N
        :param replicates: Replicates per N
        :return: One SlopeEstimate per N; N with fewer than 10
        exceedances are flagged and carry no slope
        :rtype: list
        """
        if not callable(w_of_n):
            raise TypeError('w_of_n must be callable')

        estimates = []

        for size in sizes:
            (m, n) = Efficiency.sample_sizes(eta, size)
            w = float(w_of_n(size))
            threshold = w * math.sqrt(size)
            values = self.simulate(SimulationPlan(statistic, m, n, replicates, seed))
            exceedances = int(np.count_nonzero(values >= threshold))
            probability = exceedances / float(replicates)
            flagged = exceedances < self.EXCEEDANCE_FLOOR

            if flagged:
                logger.warning(
                    '%s at N=%d: %d exceedances of %.4f, below the floor of %d',
                    statistic.name,
                    size,
                    exceedances,
                    threshold,
                    self.EXCEEDANCE_FLOOR,
                )

            estimates.append(
                SlopeEstimate(
                    size=size,
                    w=w,
                    threshold=threshold,
                    exceedances=exceedances,
                    replicates=replicates,
                    probability=probability,
                    slope=None if flagged else -math.log(probability) / (size * w * w),
                    flagged=flagged,
                )
            )

        return estimates

    @property
    def threads(self):
        """
        Gets the threads attribute of this MonteCarloService instance.

        :rtype: int
        """
        return self._threads

    @property
    def chunk_size(self):
        """
        Gets the chunk_size attribute of this MonteCarloService instance.

        :return: Replicates per worker task
        :rtype: int
        """
        return self._chunk_size

    @property
    def power_replicates(self):
        """
        Gets the power_replicates attribute of this MonteCarloService
        instance.

        :rtype: int
        """
        return self._power_replicates

    @property
    def critical_replicates(self):
        """
        Gets the critical_replicates attribute of this MonteCarloService
        instance.

        :rtype: int
        """
        return self._critical_replicates
