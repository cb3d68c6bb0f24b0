"""
This module is home to the SlopeEstimate class
"""
from pysdtest.sdtest_object import SdtestObject


class SlopeEstimate(SdtestObject):
    """
    One moderate-deviation slope -log(P) / (N w_N^2) with P the null
    exceedance fraction of the threshold w_N sqrt(N). Rows with fewer
    than the exceedance floor are flagged and carry slope None.
    """

    __slots__ = [
        '_size',
        '_w',
        '_threshold',
        '_exceedances',
        '_replicates',
        '_probability',
        '_slope',
        '_flagged',
    ]

    attribute_name_map = {
        'size': 'n',
        'w': 'w_n',
        'threshold': 'threshold',
        'exceedances': 'exceedances',
        'replicates': 'replicates',
        'probability': 'probability',
        'slope': 'slope',
        'flagged': 'flagged',
    }

    attribute_type_map = {
        'size': 'int',
        'w': 'float',
        'threshold': 'float',
        'exceedances': 'int',
        'replicates': 'int',
        'probability': 'float',
        'slope': 'float',
        'flagged': 'bool',
    }

    def __init__(
        self, size, w, threshold, exceedances, replicates, probability, slope, flagged
    ):
        self._size = size
        self._w = w
        self._threshold = threshold
        self._exceedances = exceedances
        self._replicates = replicates
        self._probability = probability
        self._slope = slope
        self._flagged = flagged

    @property
    def size(self):
        """
        Gets the size attribute of this SlopeEstimate instance.

        :rtype: int
        """
        return self._size

    @property
    def w(self):
        """
        Gets the w attribute of this SlopeEstimate instance.

        :rtype: float
        """
        return self._w

    @property
    def threshold(self):
        """
        Gets the threshold attribute of this SlopeEstimate instance.

        :rtype: float
        """
        return self._threshold

    @property
    def exceedances(self):
        """
        Gets the exceedances attribute of this SlopeEstimate instance.

        :rtype: int
        """
        return self._exceedances

    @property
    def replicates(self):
        """
        Gets the replicates attribute of this SlopeEstimate instance.

        :rtype: int
        """
        return self._replicates

    @property
    def probability(self):
        """
        Gets the probability attribute of this SlopeEstimate instance.

        :rtype: float
        """
        return self._probability

    @property
    def slope(self):
        """
        Gets the slope attribute of this SlopeEstimate instance.

        :return: The slope, or None when the row is flagged
        :rtype: float
        """
        return self._slope

    @property
    def flagged(self):
        """
        Gets the flagged attribute of this SlopeEstimate instance.

        :rtype: bool
        """
        return self._flagged
