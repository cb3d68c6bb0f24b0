"""
This module is home to the StatisticKind class
"""
import six

from pysdtest.enumerations import StatisticType
from pysdtest.exceptions import SdtestConfigurationException
from pysdtest.objects.partition_scheme import PartitionScheme
from pysdtest.sdtest_object import SdtestObject


class StatisticKind(SdtestObject):
    """
    Tagged selector among V_N (KS), T_N(scheme) and W_N(scheme).

    Presets:
        ks       V_N
        tstar    T_N with the dyadic scheme
        tcirc    T_N with the dense scheme
        w        W_N with the dyadic scheme
        tpow:p   T_N with the power-law scheme of exponent p
    """

    __slots__ = ['_statistic_type', '_scheme', '_name']

    attribute_name_map = {
        'statistic_type': 'statistic_type',
        'scheme': 'scheme',
        'name': 'name',
    }

    attribute_type_map = {
        'statistic_type': 'StatisticType',
        'scheme': 'PartitionScheme',
        'name': 'six.text_type',
    }

    def __init__(self, statistic_type, scheme=None, name=None):
        """
        Construct a StatisticKind instance

        :param statistic_type: KS, T or W
        :param scheme: The partition scheme (required for T and W)
        :param name: Column label used in reports
        """
        if not isinstance(statistic_type, StatisticType):
            raise TypeError(
                'statistic_type must be an instance of {0}'.format(StatisticType)
            )
        if scheme is not None and not isinstance(scheme, PartitionScheme):
            raise TypeError(
                'scheme must be an instance of {0}'.format(PartitionScheme)
            )
        if name is not None and not isinstance(name, six.string_types):
            raise TypeError(
                'name must be an instance of {0}'.format(six.string_types)
            )
        if statistic_type is StatisticType.KS:
            scheme = None
        elif scheme is None:
            raise SdtestConfigurationException(
                '{0} statistics require a partition scheme'.format(
                    statistic_type.value
                ),
                'scheme',
            )

        self._statistic_type = statistic_type
        self._scheme = scheme

        if name is None:
            name = (
                statistic_type.value
                if scheme is None
                else '{0}[{1}]'.format(statistic_type.value, scheme.label())
            )

        self._name = name

    @classmethod
    def ks(cls):
        return cls(StatisticType.KS, name='ks')

    @classmethod
    def tstar(cls):
        return cls(StatisticType.T, PartitionScheme.dyadic_star(), name='tstar')

    @classmethod
    def tcirc(cls):
        return cls(StatisticType.T, PartitionScheme.dense_o(), name='tcirc')

    @classmethod
    def w(cls, scheme=None):
        if scheme is None:
            return cls(StatisticType.W, PartitionScheme.dyadic_star(), name='w')

        return cls(StatisticType.W, scheme)

    @classmethod
    def t(cls, scheme):
        return cls(StatisticType.T, scheme)

    @classmethod
    def tpow(cls, p):
        return cls(
            StatisticType.T,
            PartitionScheme.power_law(p),
            name='tpow:{0:g}'.format(p),
        )

    @classmethod
    def from_name(cls, name):
        """
        Resolve a preset name (ks, tstar, tcirc, w, tpow:<p>)

        :raises SdtestConfigurationException: If the name is unknown
        """
        if not isinstance(name, six.string_types):
            raise TypeError(
                'name must be an instance of {0}'.format(six.string_types)
            )

        name = name.strip().lower()

        if name == 'ks':
            return cls.ks()
        if name == 'tstar':
            return cls.tstar()
        if name == 'tcirc':
            return cls.tcirc()
        if name == 'w':
            return cls.w()
        if name.startswith('tpow:'):
            try:
                p = float(name[len('tpow:'):])
            except ValueError:
                raise SdtestConfigurationException(
                    'Invalid power-law exponent in {0!r}'.format(name), 'statistics'
                )

            return cls.tpow(p)

        raise SdtestConfigurationException(
            'Unknown statistic {0!r}'.format(name), 'statistics'
        )

    @property
    def statistic_type(self):
        """
        Gets the statistic_type attribute of this StatisticKind instance.

        :return: The value of the statistic_type attribute of this
        StatisticKind instance.
        :rtype: StatisticType
        """
        return self._statistic_type

    @property
    def scheme(self):
        """
        Gets the scheme attribute of this StatisticKind instance.

        :rtype: PartitionScheme
        """
        return self._scheme

    @property
    def name(self):
        """
        Gets the name attribute of this StatisticKind instance.

        :rtype: six.text_type
        """
        return self._name
