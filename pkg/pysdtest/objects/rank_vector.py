"""
This module is home to the RankVector class
"""
import numbers

import numpy as np

from pysdtest.exceptions import SdtestConfigurationException
from pysdtest.sdtest_object import SdtestObject


class RankVector(SdtestObject):
    """
    Pooled-sample ranks r_1..r_N; the first m entries are the X-ranks.
    """

    __slots__ = ['_ranks', '_m']

    attribute_name_map = {'ranks': 'ranks', 'm': 'm'}

    attribute_type_map = {'ranks': 'ndarray', 'm': 'int'}

    def __init__(self, ranks, m):
        """
        Construct a RankVector instance

        :param ranks: A permutation of 1..N
        :param m: The size of the first sample, 1 <= m < N
        """
        if isinstance(m, bool) or not isinstance(m, numbers.Integral):
            raise TypeError('m must be an integer')

        ranks = np.array(ranks, dtype=np.int64).ravel()
        size = ranks.size

        if not 1 <= m < size:
            raise SdtestConfigurationException(
                'm must lie in [1, {0}), got {1}'.format(size, m), 'm'
            )
        if not np.array_equal(np.sort(ranks), np.arange(1, size + 1)):
            raise SdtestConfigurationException(
                'ranks must be a permutation of 1..{0}'.format(size), 'ranks'
            )

        ranks.setflags(write=False)

        self._ranks = ranks
        self._m = int(m)

    @property
    def ranks(self):
        """
        Gets the ranks attribute of this RankVector instance.

        :rtype: ndarray
        """
        return self._ranks

    @property
    def m(self):
        """
        Gets the m attribute of this RankVector instance.
        """
        return self._m

    @property
    def n(self):
        """
        Gets the n attribute of this RankVector instance.
        """
        return self._ranks.size - self._m

    @property
    def size(self):
        """
        Gets the size attribute of this RankVector instance.
        """
        return self._ranks.size

    @property
    def x_ranks(self):
        """
        Gets the x_ranks attribute of this RankVector instance.
        """
        return self._ranks[: self._m]
