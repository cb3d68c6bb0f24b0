"""
This module is home to the SimulationPlan class
"""
import numbers

from pysdtest.exceptions import SdtestConfigurationException
from pysdtest.objects.alternative_pair import AlternativePair
from pysdtest.objects.contamination_path import ContaminationPath
from pysdtest.objects.continuous_distribution import ContinuousDistribution
from pysdtest.objects.statistic_kind import StatisticKind
from pysdtest.sdtest_object import SdtestObject

MAXIMUM_SEED = 2 ** 64 - 1


class SimulationPlan(SdtestObject):
    """
    Everything a Monte Carlo run needs: the statistic, the sample sizes,
    the replicate count, the seed and the data model.

    Without an alternative both samples are drawn from null_distribution
    (Uniform01 unless given). With a ContaminationPath, theta is taken
    at path_index, which defaults to m + n; the sample-size search keeps
    path_index at the challenger's N while growing m and n.
    """

    __slots__ = [
        '_statistic',
        '_m',
        '_n',
        '_replicates',
        '_seed',
        '_alternative',
        '_path_index',
        '_null_distribution',
    ]

    attribute_name_map = {
        'statistic': 'statistic',
        'm': 'm',
        'n': 'n',
        'replicates': 'replicates',
        'seed': 'seed',
        'alternative': 'alternative',
        'path_index': 'path_index',
        'null_distribution': 'null_distribution',
    }

    attribute_type_map = {
        'statistic': 'StatisticKind',
        'm': 'int',
        'n': 'int',
        'replicates': 'int',
        'seed': 'int',
        'alternative': 'Union[AlternativePair, ContaminationPath]',
        'path_index': 'int',
        'null_distribution': 'ContinuousDistribution',
    }

    def __init__(
        self,
        statistic,
        m,
        n,
        replicates,
        seed,
        alternative=None,
        path_index=None,
        null_distribution=None,
    ):
        """
        Construct a SimulationPlan instance

        :param statistic: The statistic to simulate
        :param m: First sample size, >= 1
        :param n: Second sample size, >= 1
        :param replicates: Number of Monte Carlo replicates, >= 1
        :param seed: Unsigned 64-bit root seed
        :param alternative: Optional AlternativePair or ContaminationPath
        :param path_index: N at which theta_N is evaluated
        :param null_distribution: Common distribution of both samples
        when there is no alternative
        """
        if not isinstance(statistic, StatisticKind):
            raise TypeError('statistic must be an instance of {0}'.format(StatisticKind))

        for (name, value) in (
            ('m', m),
            ('n', n),
            ('replicates', replicates),
            ('seed', seed),
        ):
            if isinstance(value, bool) or not isinstance(value, numbers.Integral):
                raise TypeError('{0} must be an integer'.format(name))

        if m < 1 or n < 1:
            raise SdtestConfigurationException(
                'm and n must be >= 1, got ({0}, {1})'.format(m, n), 'm'
            )
        if replicates < 1:
            raise SdtestConfigurationException(
                'replicates must be >= 1, got {0}'.format(replicates), 'replicates'
            )
        if not 0 <= seed <= MAXIMUM_SEED:
            raise SdtestConfigurationException(
                'seed must be an unsigned 64-bit integer, got {0}'.format(seed), 'seed'
            )
        if alternative is not None and not isinstance(
            alternative, (AlternativePair, ContaminationPath)
        ):
            raise TypeError(
                'alternative must be an instance of {0} or {1}'.format(
                    AlternativePair, ContaminationPath
                )
            )
        if null_distribution is not None and not isinstance(
            null_distribution, ContinuousDistribution
        ):
            raise TypeError(
                'null_distribution must be an instance of {0}'.format(
                    ContinuousDistribution
                )
            )
        if path_index is not None and path_index < 2:
            raise SdtestConfigurationException(
                'path_index must be >= 2, got {0}'.format(path_index), 'path_index'
            )

        self._statistic = statistic
        self._m = int(m)
        self._n = int(n)
        self._replicates = int(replicates)
        self._seed = int(seed)
        self._alternative = alternative
        self._path_index = int(path_index) if path_index is not None else None
        self._null_distribution = (
            null_distribution
            if null_distribution is not None
            else ContinuousDistribution.uniform_01()
        )

    def replace(self, **kwargs):
        """
        Returns a copy of this plan with the given attributes replaced
        """
        attributes = {
            attribute_name[1:]: getattr(self, attribute_name)
            for attribute_name in self.slots()
        }
        attributes.update(kwargs)

        return SimulationPlan(**attributes)

    @property
    def statistic(self):
        """
        Gets the statistic attribute of this SimulationPlan instance.

        :rtype: StatisticKind
        """
        return self._statistic

    @property
    def m(self):
        """
        Gets the m attribute of this SimulationPlan instance.

        :rtype: int
        """
        return self._m

    @property
    def n(self):
        """
        Gets the n attribute of this SimulationPlan instance.

        :rtype: int
        """
        return self._n

    @property
    def size(self):
        """
        Gets the size attribute of this SimulationPlan instance.
        """
        return self._m + self._n

    @property
    def replicates(self):
        """
        Gets the replicates attribute of this SimulationPlan instance.

        :rtype: int
        """
        return self._replicates

    @property
    def seed(self):
        """
        Gets the seed attribute of this SimulationPlan instance.

        :rtype: int
        """
        return self._seed

    @property
    def alternative(self):
        """
        Gets the alternative attribute of this SimulationPlan instance.
        None means the null model.

        :rtype: AlternativePair or ContaminationPath
        """
        return self._alternative

    @property
    def path_index(self):
        """
        Gets the path_index attribute of this SimulationPlan instance.

        :rtype: int
        """
        return self._path_index

    @property
    def null_distribution(self):
        """
        Gets the null_distribution attribute of this SimulationPlan instance.

        :rtype: ContinuousDistribution
        """
        return self._null_distribution
