"""
This module is home to the PowerEstimate class
"""
import math

from pysdtest.sdtest_object import SdtestObject


class PowerEstimate(SdtestObject):
    """
    Empirical rejection rate with a 95% Wilson interval.
    """

    __slots__ = [
        '_estimate',
        '_rejections',
        '_replicates',
        '_interval_low',
        '_interval_high',
        '_critical_value',
        '_seed',
    ]

    attribute_name_map = {
        'estimate': 'power',
        'rejections': 'rejections',
        'replicates': 'replicates',
        'interval_low': 'ci_low',
        'interval_high': 'ci_high',
        'critical_value': 'critical_value',
        'seed': 'seed',
    }

    attribute_type_map = {
        'estimate': 'float',
        'rejections': 'int',
        'replicates': 'int',
        'interval_low': 'float',
        'interval_high': 'float',
        'critical_value': 'float',
        'seed': 'int',
    }

    def __init__(
        self,
        estimate,
        rejections,
        replicates,
        interval_low,
        interval_high,
        critical_value,
        seed,
    ):
        """
        Construct a PowerEstimate instance
        """
        self._estimate = estimate
        self._rejections = rejections
        self._replicates = replicates
        self._interval_low = interval_low
        self._interval_high = interval_high
        self._critical_value = critical_value
        self._seed = seed

    @property
    def estimate(self):
        """
        Gets the estimate attribute of this PowerEstimate instance.

        :return: The fraction of replicates rejecting
        :rtype: float
        """
        return self._estimate

    @property
    def rejections(self):
        """
        Gets the rejections attribute of this PowerEstimate instance.

        :return: The number of replicates whose statistic exceeded the
        critical value
        :rtype: int
        """
        return self._rejections

    @property
    def replicates(self):
        """
        Gets the replicates attribute of this PowerEstimate instance.

        :rtype: int
        """
        return self._replicates

    @property
    def interval(self):
        """
        The 95% Wilson interval as (low, high)

        :rtype: tuple
        """
        return (self._interval_low, self._interval_high)

    @property
    def interval_low(self):
        """
        Gets the interval_low attribute of this PowerEstimate instance.

        :rtype: float
        """
        return self._interval_low

    @property
    def interval_high(self):
        """
        Gets the interval_high attribute of this PowerEstimate instance.

        :rtype: float
        """
        return self._interval_high

    @property
    def standard_error(self):
        """
        Binomial standard error sqrt(p (1 - p) / R) at the point estimate
        """
        return math.sqrt(self._estimate * (1.0 - self._estimate) / self._replicates)

    @property
    def critical_value(self):
        """
        Gets the critical_value attribute of this PowerEstimate instance.

        :rtype: float
        """
        return self._critical_value

    @property
    def seed(self):
        """
        Gets the seed attribute of this PowerEstimate instance.

        :rtype: int
        """
        return self._seed
