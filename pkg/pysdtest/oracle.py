"""
This module is home to the Oracle class
"""
import itertools
import logging
import math
from fractions import Fraction

import numpy as np

from pysdtest.exceptions import SdtestBudgetException
from pysdtest.exceptions import SdtestDomainException
from pysdtest.objects.exact_null_distribution import Atom
from pysdtest.objects.exact_null_distribution import ExactNullDistribution
from pysdtest.objects.partition_scheme import PartitionScheme
from pysdtest.objects.statistic_kind import StatisticKind
from pysdtest.statistics import Statistics

logger = logging.getLogger(__name__)


class Oracle(object):
    """
    Exact null distributions of rank statistics by enumerating every
    m-subset of {1..N} as the X-rank set. Under any continuous F = G all
    C(N, m) subsets are equally likely.
    """

    __slots__ = []

    MAXIMUM_SIZE = 16
    MERGE_TOLERANCE = 1e-12

    @classmethod
    def x_rank_sets(cls, m, n):
        """
        Every X-indicator of the sorted pooled sample, one per row
        """
        size = m + n
        combinations = list(itertools.combinations(range(size), m))
        is_x = np.zeros((len(combinations), size), dtype=bool)

        for (row, combination) in enumerate(combinations):
            is_x[row, list(combination)] = True

        return is_x

    @classmethod
    def exact_null(cls, statistic, m, n, scheme=None):
        """
        Enumerate the exact null distribution of statistic at (m, n)

        :param statistic: The statistic
        :param m: First sample size
        :param n: Second sample size
        :param scheme: Optional scheme replacing the statistic's own
        :rtype: ExactNullDistribution
        :raises SdtestBudgetException: If m + n exceeds 16
        """
        if not isinstance(statistic, StatisticKind):
            raise TypeError('statistic must be an instance of {0}'.format(StatisticKind))
        if m < 1 or n < 1:
            raise SdtestDomainException(
                'm and n must be >= 1, got ({0}, {1})'.format(m, n), min(m, n)
            )

        size = m + n

        if size > cls.MAXIMUM_SIZE:
            logger.error(
                'Enumeration budget exceeded: N=%d > %d', size, cls.MAXIMUM_SIZE
            )

            raise SdtestBudgetException(
                'Exact enumeration supports N <= {0}, got N={1}'.format(
                    cls.MAXIMUM_SIZE, size
                ),
                size,
                cls.MAXIMUM_SIZE,
            )

        if scheme is not None and statistic.scheme is not None:
            if not isinstance(scheme, PartitionScheme):
                raise TypeError(
                    'scheme must be an instance of {0}'.format(PartitionScheme)
                )
            statistic = StatisticKind(statistic.statistic_type, scheme)

        is_x = cls.x_rank_sets(m, n)
        values = np.sort(Statistics.evaluate_indicators(statistic, is_x, m))
        total = is_x.shape[0]

        atoms = []
        start = 0

        for index in range(1, values.size + 1):
            if (
                index == values.size
                or values[index] - values[start] > cls.MERGE_TOLERANCE
            ):
                atoms.append(Atom(values[start], Fraction(index - start, total)))
                start = index

        distribution = ExactNullDistribution(statistic, m, n, atoms)

        logger.debug(
            'Exact null\n'
            '[Statistic]\n'
            '===========\n%s\n\n'
            '[Atoms]\n'
            '=======\n%d of %d assignments',
            statistic.name,
            len(atoms),
            total,
        )

        return distribution

    @classmethod
    def exact_tail(cls, distribution, w):
        """
        P(S > w) as an exact rational
        """
        return sum(
            (atom.probability for atom in distribution.atoms if atom.value > w),
            Fraction(0),
        )

    @classmethod
    def exact_cdf(cls, distribution, w):
        """
        P(S <= w) as an exact rational
        """
        return 1 - cls.exact_tail(distribution, w)

    @classmethod
    def exact_critical_value(cls, distribution, alpha):
        """
        inf{w : P(S > w) <= alpha}, attained at an atom
        """
        if not 0.0 < alpha < 1.0:
            raise SdtestDomainException(
                'alpha must lie in (0, 1), got {0!r}'.format(alpha), alpha
            )

        tail = Fraction(1)

        for atom in distribution.atoms:
            tail -= atom.probability
            if tail <= alpha:
                return atom.value

        return distribution.atoms[-1].value

    @classmethod
    def dkw_epsilon(cls, replicates, delta):
        """
        Half-width sqrt(ln(2 / delta) / (2 R)) of the DKW band at
        confidence 1 - delta
        """
        return math.sqrt(math.log(2.0 / delta) / (2.0 * replicates))

    @classmethod
    def sup_distance(cls, distribution, values):
        """
        sup_w |empirical CDF of values - exact CDF|, checked at every atom
        and just below it
        """
        values = np.sort(np.asarray(values, dtype=np.float64))
        count = float(values.size)
        distance = 0.0
        cumulative = Fraction(0)

        for atom in distribution.atoms:
            below = np.searchsorted(values, atom.value - cls.MERGE_TOLERANCE, side='left')
            distance = max(distance, abs(below / count - float(cumulative)))

            cumulative += atom.probability
            at_or_below = np.searchsorted(
                values, atom.value + cls.MERGE_TOLERANCE, side='right'
            )
            distance = max(distance, abs(at_or_below / count - float(cumulative)))

        return distance
