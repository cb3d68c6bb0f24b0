"""
This module is home to the TwoSample class
"""
import numpy as np

from pysdtest.exceptions import SdtestConfigurationException
from pysdtest.sdtest_object import SdtestObject


class TwoSample(SdtestObject):
    """
    Two independent samples X_1..X_m and Y_1..Y_n, kept in the order
    given. Arrays are copied and marked read-only.
    """

    __slots__ = ['_x', '_y']

    attribute_name_map = {'x': 'x', 'y': 'y'}

    attribute_type_map = {'x': 'ndarray', 'y': 'ndarray'}

    def __init__(self, x, y):
        """
        Construct a TwoSample instance

        :param x: The first sample, m >= 1 finite reals
        :param y: The second sample, n >= 1 finite reals
        """
        self._x = TwoSample._as_sample('x', x)
        self._y = TwoSample._as_sample('y', y)

    @staticmethod
    def _as_sample(name, values):
        array = np.array(values, dtype=np.float64).ravel()

        if array.size == 0:
            raise SdtestConfigurationException(
                '{0} must contain at least one value'.format(name), name
            )
        if not np.all(np.isfinite(array)):
            raise SdtestConfigurationException(
                '{0} must contain finite values only'.format(name), name
            )

        array.setflags(write=False)

        return array

    @property
    def x(self):
        """
        Gets the x attribute of this TwoSample instance.

        :rtype: ndarray
        """
        return self._x

    @property
    def y(self):
        """
        Gets the y attribute of this TwoSample instance.

        :rtype: ndarray
        """
        return self._y

    @property
    def m(self):
        """
        Gets the m attribute of this TwoSample instance.
        """
        return self._x.size

    @property
    def n(self):
        """
        Gets the n attribute of this TwoSample instance.
        """
        return self._y.size

    @property
    def size(self):
        """
        Pooled sample size N = m + n
        """
        return self._x.size + self._y.size
