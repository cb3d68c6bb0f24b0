"""
This module is home to the Statistics class
"""
import logging
import math
import numbers

import numpy as np

from pysdtest.enumerations import SchemeKind
from pysdtest.enumerations import StatisticType
from pysdtest.enumerations import TiePolicy
from pysdtest.exceptions import SdtestDomainException
from pysdtest.exceptions import SdtestTieException
from pysdtest.objects.partition_scheme import PartitionScheme
from pysdtest.objects.rank_vector import RankVector
from pysdtest.objects.statistic_kind import StatisticKind
from pysdtest.objects.two_sample import TwoSample

logger = logging.getLogger(__name__)


class Statistics(object):
    """
    One-sided two-sample rank statistics.

    Everything is computed from the X-indicator of the sorted pooled
    sample: is_x[k] is True when the (k + 1)-th smallest pooled value
    belongs to the first sample. With cx[k] the number of X values among
    the k smallest, the integer

        h(k) = k m - cx[k] N

    equals m n (G_n - F_m)(Z_(k)), 
        V_N   = max_{0<=k<=N} h(k) / sqrt(m n N)
        -L_j  = h(ceil(N pi_j - 0.5)) / sqrt(m n N) / sqrt(pi_j (1 - pi_j))
        W_N   = max_j h(ceil(N pi_j)) / sqrt(m n N) / sqrt(pi_j (1 - pi_j))

    Integer arithmetic on h keeps every statistic exactly invariant
    under strictly increasing transformations of the data. The batched
    entry points take a 2-D indicator (one replicate per row) and are
    what the Monte Carlo engine and the oracle call.
    """

    __slots__ = []

    # Absorbs representation noise before ceil, e.g. N * 3/7
    _CEIL_DECIMALS = 9

    @classmethod
    def grid(cls, scheme, size):
        """
        The grid pi_1N < ... < pi_Delta(N)N of a scheme at pooled size N

        :param scheme: The partition scheme
        :param size: The pooled sample size N
        :return: Strictly increasing grid in (0, 1)
        :rtype: ndarray
        :raises SdtestDomainException: If Delta(N) < 1
        """
        if not isinstance(scheme, PartitionScheme):
            raise TypeError('scheme must be an instance of {0}'.format(PartitionScheme))
        if isinstance(size, bool) or not isinstance(size, numbers.Integral):
            raise TypeError('size must be an integer')

        kind = scheme.kind

        if kind is SchemeKind.EXPLICIT:
            return np.array(scheme.points, dtype=np.float64)

        if kind is SchemeKind.DENSE_O:
            margin = math.isqrt(size) if size > 0 else 0
            indices = np.arange(1 + margin, size - margin + 1, dtype=np.float64)
            points = indices / (size + 1.0)
        else:
            if kind is SchemeKind.DYADIC_STAR:
                delta = 2 ** (size.bit_length() - 1) - 1 if size > 0 else 0
            else:
                power = float(size) ** scheme.p if size > 0 else 0.0
                nearest = int(round(power))
                delta = nearest if abs(power - nearest) < 1e-9 else int(math.floor(power))

            points = np.arange(1, delta + 1, dtype=np.float64) / (delta + 1.0)

        if points.size < 1:
            raise SdtestDomainException(
                '{0} scheme has no grid points at N={1}'.format(scheme.label(), size),
                size,
            )

        return points

    @classmethod
    def score_ell(cls, pi, t):
        """
        The two-valued score
        l(t) = -sqrt((1 - pi) / pi) for t < pi, sqrt(pi / (1 - pi)) otherwise

        :raises SdtestDomainException: If pi is outside (0, 1)
        """
        if not 0.0 < pi < 1.0:
            raise SdtestDomainException(
                'pi must lie in (0, 1), got {0!r}'.format(pi), pi
            )

        t_array = np.asarray(t, dtype=np.float64)
        scores = np.where(
            t_array < pi, -math.sqrt((1.0 - pi) / pi), math.sqrt(pi / (1.0 - pi))
        )

        return float(scores) if np.ndim(t) == 0 else scores

    @classmethod
    def ranks(cls, sample, tie_policy=TiePolicy.ERROR, generator=None):
        """
        Pooled-sample ranks, X first

        :param sample: The two samples
        :param tie_policy: ERROR raises on ties, RANDOM_BREAK orders tied
        values uniformly at random using generator
        :param generator: A numpy Generator (RANDOM_BREAK only)
        :rtype: RankVector
        :raises SdtestTieException: If ties are present under ERROR
        """
        if not isinstance(sample, TwoSample):
            raise TypeError('sample must be an instance of {0}'.format(TwoSample))
        if not isinstance(tie_policy, TiePolicy):
            raise TypeError('tie_policy must be an instance of {0}'.format(TiePolicy))

        pooled = np.concatenate((sample.x, sample.y))
        order = np.argsort(pooled, kind='stable')
        sorted_pooled = pooled[order]
        tied = sorted_pooled[1:] == sorted_pooled[:-1]

        if np.any(tied):
            value = float(sorted_pooled[1:][tied][0])

            if tie_policy is TiePolicy.ERROR:
                logger.error('Tie in pooled sample at value %r', value)

                raise SdtestTieException(
                    'Pooled sample contains tied value {0!r}'.format(value), value
                )
            if generator is None:
                raise TypeError('RANDOM_BREAK requires a numpy Generator')

            order = np.lexsort((generator.random(pooled.size), pooled))

        ranks = np.empty(pooled.size, dtype=np.int64)
        ranks[order] = np.arange(1, pooled.size + 1)

        return RankVector(ranks, sample.m)

    @classmethod
    def indicator_from_ranks(cls, rank_vector):
        """
        X-indicator of the sorted pooled sample from a rank vector
        """
        is_x = np.zeros(rank_vector.size, dtype=bool)
        is_x[rank_vector.x_ranks - 1] = True

        return is_x

    @classmethod
    def indicators_from_values(cls, values, m):
        """
        Batched X-indicators: values has one replicate per row, the first
        m columns holding the X sample.
        """
        values = np.atleast_2d(values)

        return np.argsort(values, axis=1, kind='stable') < m

    @classmethod
    def _deviation_numerators(cls, is_x, m):
        """
        h(k) = k m - cx[k] N for k = 0..N, one row per replicate
        """
        is_x = np.atleast_2d(is_x)
        (replicates, size) = is_x.shape
        counts = np.zeros((replicates, size + 1), dtype=np.int64)
        np.cumsum(is_x, axis=1, out=counts[:, 1:])

        return np.arange(size + 1, dtype=np.int64) * m - counts * size

    @classmethod
    def _ceil(cls, values):
        return np.ceil(np.round(values, cls._CEIL_DECIMALS)).astype(np.int64)

    @classmethod
    def lower_indices(cls, points, size):
        """
        ceil(N pi - 0.5): the number of ranks r with (r - 0.5) / N < pi
        """
        return np.clip(cls._ceil(size * points - 0.5), 0, size)

    @classmethod
    def quantile_indices(cls, points, size):
        """
        ceil(N pi), guarded to [1, N], the index of J_N^{-1}(pi)
        """
        return np.clip(cls._ceil(size * points), 1, size)

    @classmethod
    def _normalized(cls, numerators, m, n, size):
        """
        h / sqrt(m n N), evaluated as sqrt(m n / N) h / (m n); 1 / sqrt(2)
        comes out correctly rounded
        """
        product = float(m) * n

        return math.sqrt(product / size) * numerators / product

    @classmethod
    def ks_from_indicators(cls, is_x, m):
        numerators = cls._deviation_numerators(is_x, m)
        size = numerators.shape[1] - 1
        n = size - m

        return cls._normalized(numerators.max(axis=1), m, n, size)

    @classmethod
    def linear_rank_stats_from_indicators(cls, is_x, m, points):
        """
        L_j for every grid point; shape (replicates, Delta)
        """
        numerators = cls._deviation_numerators(is_x, m)
        size = numerators.shape[1] - 1
        n = size - m
        spread = np.sqrt(points * (1.0 - points))

        return -cls._normalized(numerators[:, cls.lower_indices(points, size)], m, n, size) / spread

    @classmethod
    def t_from_indicators(cls, is_x, m, points):
        return (-cls.linear_rank_stats_from_indicators(is_x, m, points)).max(axis=1)

    @classmethod
    def w_from_indicators(cls, is_x, m, points):
        numerators = cls._deviation_numerators(is_x, m)
        size = numerators.shape[1] - 1
        n = size - m
        spread = np.sqrt(points * (1.0 - points))

        return (
            cls._normalized(numerators[:, cls.quantile_indices(points, size)], m, n, size) / spread
        ).max(axis=1)

    @classmethod
    def evaluate_indicators(cls, kind, is_x, m):
        """
        Batched evaluation of a StatisticKind; one value per row of is_x

        :rtype: ndarray
        """
        is_x = np.atleast_2d(is_x)

        if kind.statistic_type is StatisticType.KS:
            return cls.ks_from_indicators(is_x, m)

        points = cls.grid(kind.scheme, is_x.shape[1])

        if kind.statistic_type is StatisticType.T:
            return cls.t_from_indicators(is_x, m, points)

        return cls.w_from_indicators(is_x, m, points)

    @classmethod
    def _indicator(cls, sample, tie_policy, generator):
        return cls.indicator_from_ranks(cls.ranks(sample, tie_policy, generator))

    @classmethod
    def ks_one_sided(cls, sample, tie_policy=TiePolicy.ERROR, generator=None):
        """
        V_N = sqrt(m n / N) sup_z [G_n(z) - F_m(z)]

        :rtype: float
        """
        return float(
            cls.ks_from_indicators(cls._indicator(sample, tie_policy, generator), sample.m)[0]
        )

    @classmethod
    def ks_one_sided_from_ranks(cls, rank_vector):
        return float(
            cls.ks_from_indicators(cls.indicator_from_ranks(rank_vector), rank_vector.m)[0]
        )

    @classmethod
    def ks_one_sided_grid_form(cls, sample):
        """
        V_N as the maximum over j = 1..N of (G_n - F_m)(J_N^{-1}(j / N)),
        evaluated directly from the empirical distribution functions
        """
        z = np.sort(np.concatenate((sample.x, sample.y)))
        g_n = np.searchsorted(np.sort(sample.y), z, side='right') / sample.n
        f_m = np.searchsorted(np.sort(sample.x), z, side='right') / sample.m

        return math.sqrt(sample.m * sample.n / sample.size) * float(np.max(g_n - f_m))

    @classmethod
    def linear_rank_stat(cls, sample, scheme, j, tie_policy=TiePolicy.ERROR, generator=None):
        """
        L_j in counting form for the j-th (1-based) grid point of scheme

        :rtype: float
        """
        return cls.linear_rank_stat_from_ranks(
            cls.ranks(sample, tie_policy, generator), scheme, j
        )

    @classmethod
    def linear_rank_stat_from_ranks(cls, rank_vector, scheme, j):
        points = cls.grid(scheme, rank_vector.size)

        if not 1 <= j <= points.size:
            raise SdtestDomainException(
                'j must lie in [1, {0}], got {1}'.format(points.size, j), j
            )

        return float(
            cls.linear_rank_stats_from_indicators(
                cls.indicator_from_ranks(rank_vector), rank_vector.m, points[j - 1 : j]
            )[0, 0]
        )

    @classmethod
    def linear_rank_stat_scores(cls, sample, scheme, j):
        """
        L_j = sum_i c_Ni l_j((R_i - 0.5) / N) evaluated term by term, with
        c_Ni = -sqrt(m n / N) / m for X and sqrt(m n / N) / n for Y
        """
        rank_vector = cls.ranks(sample)
        points = cls.grid(scheme, rank_vector.size)
        pi = float(points[j - 1])
        (m, n, size) = (rank_vector.m, rank_vector.n, rank_vector.size)

        coefficients = np.concatenate((np.full(m, -1.0 / m), np.full(n, 1.0 / n)))
        scores = cls.score_ell(pi, (rank_vector.ranks - 0.5) / size)

        return math.sqrt(m * n / size) * float(np.dot(coefficients, scores))

    @classmethod
    def t_stat(cls, sample, scheme, tie_policy=TiePolicy.ERROR, generator=None):
        """
        T_N = max_j -L_j

        :rtype: float
        """
        return cls.t_stat_from_ranks(cls.ranks(sample, tie_policy, generator), scheme)

    @classmethod
    def t_stat_from_ranks(cls, rank_vector, scheme):
        points = cls.grid(scheme, rank_vector.size)

        return float(
            cls.t_from_indicators(
                cls.indicator_from_ranks(rank_vector), rank_vector.m, points
            )[0]
        )

    @classmethod
    def w_stat(cls, sample, scheme, tie_policy=TiePolicy.ERROR, generator=None):
        """
        W_N, the weighted difference at the pooled order statistics
        Z_(ceil(N pi_j))

        :rtype: float
        """
        return cls.w_stat_from_ranks(cls.ranks(sample, tie_policy, generator), scheme)

    @classmethod
    def w_stat_from_ranks(cls, rank_vector, scheme):
        points = cls.grid(scheme, rank_vector.size)

        return float(
            cls.w_from_indicators(
                cls.indicator_from_ranks(rank_vector), rank_vector.m, points
            )[0]
        )

    @classmethod
    def tw_bound(cls, sample_sizes, scheme):
        """
        Explicit bound on |T_N - W_N|:

            N^{-1/2} max{sqrt((1 - eta_N) / eta_N), sqrt(eta_N / (1 - eta_N))}
            * 2 / min{s(pi_1), s(pi_Delta)},   s(pi) = sqrt(pi (1 - pi))

        with eta_N = m / N

        :param sample_sizes: (m, n)
        :rtype: float
        """
        (m, n) = sample_sizes

        if m < 1 or n < 1:
            raise SdtestDomainException(
                'm and n must be >= 1, got ({0}, {1})'.format(m, n), min(m, n)
            )

        size = m + n
        points = cls.grid(scheme, size)
        eta = m / size
        imbalance = max(math.sqrt((1.0 - eta) / eta), math.sqrt(eta / (1.0 - eta)))
        edge = min(
            math.sqrt(points[0] * (1.0 - points[0])),
            math.sqrt(points[-1] * (1.0 - points[-1])),
        )

        return imbalance * 2.0 / edge / math.sqrt(size)

    @classmethod
    def statistic(cls, kind, sample, tie_policy=TiePolicy.ERROR, generator=None):
        """
        Evaluate a StatisticKind on two samples

        :rtype: float
        """
        if not isinstance(kind, StatisticKind):
            raise TypeError('kind must be an instance of {0}'.format(StatisticKind))

        return cls.statistic_from_ranks(kind, cls.ranks(sample, tie_policy, generator))

    @classmethod
    def statistic_from_ranks(cls, kind, rank_vector):
        if not isinstance(rank_vector, RankVector):
            raise TypeError('rank_vector must be an instance of {0}'.format(RankVector))

        return float(
            cls.evaluate_indicators(
                kind, cls.indicator_from_ranks(rank_vector), rank_vector.m
            )[0]
        )
