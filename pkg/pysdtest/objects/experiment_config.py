"""
This module is home to the ExperimentConfig class
"""
import numbers

import six

from pysdtest.exceptions import SdtestConfigurationException
from pysdtest.objects.continuous_distribution import ContinuousDistribution
from pysdtest.objects.statistic_kind import StatisticKind
from pysdtest.sdtest_object import SdtestObject


class ExperimentConfig(SdtestObject):
    """
    A figure-style experiment: for every pair, an efficiency curve over
    eta_grid, balanced-partition powers over n_balanced (or over
    alpha_balanced at n_balanced[0] when given), and unbalanced-partition
    powers over eta_unbalanced at n_unbalanced.

    pairs maps a pair name to its (F_1, G_1) distributions; eta is
    supplied per cell.
    """

    __slots__ = [
        '_name',
        '_pairs',
        '_eta_grid',
        '_n_balanced',
        '_alpha',
        '_alpha_balanced',
        '_eta_unbalanced',
        '_n_unbalanced',
        '_statistics',
        '_replicates',
        '_critical_replicates',
        '_seed',
        '_output_directory',
    ]

    attribute_name_map = {
        'name': 'name',
        'pairs': 'pairs',
        'eta_grid': 'eta',
        'n_balanced': 'n_balanced',
        'alpha': 'alpha',
        'alpha_balanced': 'alpha_balanced',
        'eta_unbalanced': 'eta_unbalanced',
        'n_unbalanced': 'n_unbalanced',
        'statistics': 'statistics',
        'replicates': 'replicates',
        'critical_replicates': 'critical_replicates',
        'seed': 'seed',
        'output_directory': 'output_directory',
    }

    attribute_type_map = {
        'name': 'six.text_type',
        'pairs': 'List[Tuple[six.text_type, ContinuousDistribution, ContinuousDistribution]]',
        'eta_grid': 'List[float]',
        'n_balanced': 'List[int]',
        'alpha': 'float',
        'alpha_balanced': 'List[float]',
        'eta_unbalanced': 'List[float]',
        'n_unbalanced': 'int',
        'statistics': 'List[StatisticKind]',
        'replicates': 'int',
        'critical_replicates': 'int',
        'seed': 'int',
        'output_directory': 'six.text_type',
    }

    def __init__(
        self,
        name,
        pairs,
        eta_grid,
        n_balanced,
        alpha,
        eta_unbalanced,
        n_unbalanced,
        statistics,
        replicates,
        critical_replicates,
        seed,
        output_directory,
        alpha_balanced=None,
    ):
        """
        Construct an ExperimentConfig instance

        :param pairs: List of (name, F_1, G_1)
        :raises SdtestConfigurationException: If a grid is empty or a
        value is out of range
        """
        if not isinstance(name, six.string_types):
            raise TypeError('name must be an instance of {0}'.format(six.string_types))
        if not isinstance(output_directory, six.string_types):
            raise TypeError(
                'output_directory must be an instance of {0}'.format(six.string_types)
            )

        pairs = [tuple(pair) for pair in pairs]

        for pair in pairs:
            if (
                len(pair) != 3
                or not isinstance(pair[0], six.string_types)
                or not all(isinstance(d, ContinuousDistribution) for d in pair[1:])
            ):
                raise TypeError(
                    'pairs must hold (name, {0}, {0}) tuples'.format(
                        ContinuousDistribution
                    )
                )

        statistics = list(statistics)

        for statistic in statistics:
            if not isinstance(statistic, StatisticKind):
                raise TypeError(
                    'statistics must hold instances of {0}'.format(StatisticKind)
                )

        for (key, grid) in (
            ('pairs', pairs),
            ('eta', eta_grid),
            ('n_balanced', n_balanced),
            ('eta_unbalanced', eta_unbalanced),
            ('statistics', statistics),
        ):
            if not grid:
                raise SdtestConfigurationException(
                    '{0} must not be empty'.format(key), key
                )

        for (key, grid) in (('eta', eta_grid), ('eta_unbalanced', eta_unbalanced)):
            for eta in grid:
                if not 0.0 < eta < 1.0:
                    raise SdtestConfigurationException(
                        '{0} values must lie in (0, 1), got {1}'.format(key, eta), key
                    )

        for alpha_ in [alpha] + list(alpha_balanced or []):
            if not 0.0 < alpha_ < 1.0:
                raise SdtestConfigurationException(
                    'alpha must lie in (0, 1), got {0}'.format(alpha_), 'alpha'
                )

        for (key, value) in (
            ('n_unbalanced', n_unbalanced),
            ('replicates', replicates),
            ('critical_replicates', critical_replicates),
            ('seed', seed),
        ):
            if isinstance(value, bool) or not isinstance(value, numbers.Integral):
                raise TypeError('{0} must be an integer'.format(key))

        for size in list(n_balanced) + [n_unbalanced]:
            if size < 2:
                raise SdtestConfigurationException(
                    'sample sizes must be >= 2, got {0}'.format(size), 'n_balanced'
                )

        if replicates < 1 or critical_replicates < 1:
            raise SdtestConfigurationException(
                'replicate counts must be >= 1', 'replicates'
            )

        self._name = name
        self._pairs = pairs
        self._eta_grid = [float(eta) for eta in eta_grid]
        self._n_balanced = [int(size) for size in n_balanced]
        self._alpha = float(alpha)
        self._alpha_balanced = (
            [float(alpha_) for alpha_ in alpha_balanced] if alpha_balanced else None
        )
        self._eta_unbalanced = [float(eta) for eta in eta_unbalanced]
        self._n_unbalanced = int(n_unbalanced)
        self._statistics = statistics
        self._replicates = int(replicates)
        self._critical_replicates = int(critical_replicates)
        self._seed = int(seed)
        self._output_directory = output_directory

    def replace(self, **kwargs):
        attributes = {
            attribute_name[1:]: getattr(self, attribute_name)
            for attribute_name in self.slots()
        }
        attributes.update(kwargs)

        return ExperimentConfig(**attributes)

    @property
    def name(self):
        """
        Gets the name attribute of this ExperimentConfig instance.

        :rtype: six.text_type
        """
        return self._name

    @property
    def pairs(self):
        """
        Gets the pairs attribute of this ExperimentConfig instance.

        :return: (name, F_1, G_1) tuples in configuration order
        :rtype: list
        """
        return self._pairs

    @property
    def eta_grid(self):
        """
        Gets the eta_grid attribute of this ExperimentConfig instance.

        :rtype: List[float]
        """
        return self._eta_grid

    @property
    def n_balanced(self):
        """
        Gets the n_balanced attribute of this ExperimentConfig instance.

        :rtype: List[int]
        """
        return self._n_balanced

    @property
    def alpha(self):
        """
        Gets the alpha attribute of this ExperimentConfig instance.

        :rtype: float
        """
        return self._alpha

    @property
    def alpha_balanced(self):
        """
        Gets the alpha_balanced attribute of this ExperimentConfig
        instance. When set, the balanced experiment runs over these
        levels at n_balanced[0] instead of over n_balanced.

        :rtype: list
        """
        return self._alpha_balanced

    @property
    def eta_unbalanced(self):
        """
        Gets the eta_unbalanced attribute of this ExperimentConfig instance.

        :rtype: List[float]
        """
        return self._eta_unbalanced

    @property
    def n_unbalanced(self):
        """
        Gets the n_unbalanced attribute of this ExperimentConfig instance.

        :rtype: int
        """
        return self._n_unbalanced

    @property
    def statistics(self):
        """
        Gets the statistics attribute of this ExperimentConfig instance.

        :rtype: List[StatisticKind]
        """
        return self._statistics

    @property
    def replicates(self):
        """
        Gets the replicates attribute of this ExperimentConfig instance.

        :rtype: int
        """
        return self._replicates

    @property
    def critical_replicates(self):
        """
        Gets the critical_replicates attribute of this ExperimentConfig
        instance.

        :rtype: int
        """
        return self._critical_replicates

    @property
    def seed(self):
        """
        Gets the seed attribute of this ExperimentConfig instance.

        :rtype: int
        """
        return self._seed

    @property
    def output_directory(self):
        """
        Gets the output_directory attribute of this ExperimentConfig instance.

        :rtype: six.text_type
        """
        return self._output_directory
