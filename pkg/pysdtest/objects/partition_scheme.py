"""
This module is home to the PartitionScheme class
"""
import numbers

import numpy as np

from pysdtest.enumerations import SchemeKind
from pysdtest.exceptions import SdtestConfigurationException
from pysdtest.sdtest_object import SdtestObject


class PartitionScheme(SdtestObject):
    """
    Selects the grid 0 < pi_1N < ... < pi_Delta(N)N < 1 of the linear
    rank statistics entering T_N and W_N.

        DYADIC_STAR  Delta(N) = 2^floor(log2 N) - 1, pi_j = j / (Delta + 1)
        DENSE_O      pi_j = j / (N + 1), 1 + floor(sqrt N) <= j <= N - floor(sqrt N)
        POWER_LAW    Delta(N) = floor(N^p), pi_j = j / (Delta + 1), 0 < p <= 1
        EXPLICIT     a fixed strictly increasing list of points in (0, 1)

    The grid for a given N is computed by Statistics.grid.
    """

    __slots__ = ['_kind', '_points', '_p']

    attribute_name_map = {'kind': 'kind', 'points': 'points', 'p': 'p'}

    attribute_type_map = {'kind': 'SchemeKind', 'points': 'ndarray', 'p': 'float'}

    def __init__(self, kind, points=None, p=None):
        """
        Construct a PartitionScheme instance

        :param kind: The scheme kind
        :param points: Grid points (EXPLICIT only)
        :param p: Exponent (POWER_LAW only)
        """
        if not isinstance(kind, SchemeKind):
            raise TypeError('kind must be an instance of {0}'.format(SchemeKind))

        self._kind = kind
        self._points = None
        self._p = None

        if kind is SchemeKind.EXPLICIT:
            if points is None:
                raise SdtestConfigurationException(
                    'An explicit scheme requires points', 'points'
                )

            points = np.array(points, dtype=np.float64).ravel()

            if points.size == 0:
                raise SdtestConfigurationException(
                    'An explicit scheme requires at least one point', 'points'
                )
            if np.any(points <= 0.0) or np.any(points >= 1.0):
                raise SdtestConfigurationException(
                    'Explicit scheme points must lie in (0, 1)', 'points'
                )
            if np.any(np.diff(points) <= 0.0):
                raise SdtestConfigurationException(
                    'Explicit scheme points must be strictly increasing', 'points'
                )

            points.setflags(write=False)
            self._points = points
        elif kind is SchemeKind.POWER_LAW:
            if isinstance(p, bool) or not isinstance(p, numbers.Real):
                raise TypeError('p must be a real number')
            if not 0.0 < p <= 1.0:
                raise SdtestConfigurationException(
                    'p must lie in (0, 1], got {0}'.format(p), 'p'
                )

            self._p = float(p)

    @classmethod
    def dyadic_star(cls):
        return cls(SchemeKind.DYADIC_STAR)

    @classmethod
    def dense_o(cls):
        return cls(SchemeKind.DENSE_O)

    @classmethod
    def explicit(cls, points):
        return cls(SchemeKind.EXPLICIT, points=points)

    @classmethod
    def power_law(cls, p):
        return cls(SchemeKind.POWER_LAW, p=p)

    def label(self):
        if self._kind is SchemeKind.EXPLICIT:
            return 'explicit[{0}]'.format(
                ','.join('{0:g}'.format(point) for point in self._points)
            )
        if self._kind is SchemeKind.POWER_LAW:
            return 'power_law({0:g})'.format(self._p)

        return self._kind.value

    @property
    def kind(self):
        """
        Gets the kind attribute of this PartitionScheme instance.

        :return: The value of the kind attribute of this PartitionScheme
        instance.
        :rtype: SchemeKind
        """
        return self._kind

    @property
    def points(self):
        """
        Gets the points attribute of this PartitionScheme instance.
        """
        return self._points

    @property
    def p(self):
        """
        Gets the p attribute of this PartitionScheme instance.
        """
        return self._p
