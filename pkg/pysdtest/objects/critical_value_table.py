"""
This module is home to the CriticalValueEntry and CriticalValueTable
classes
"""
from pysdtest.exceptions import SdtestConfigurationException
from pysdtest.sdtest_object import SdtestObject


class CriticalValueEntry(SdtestObject):
    """
    A Monte Carlo critical value u for (statistic, m, n, alpha) with its
    provenance.
    """

    __slots__ = [
        '_statistic',
        '_m',
        '_n',
        '_alpha',
        '_critical_value',
        '_replicates',
        '_seed',
    ]

    attribute_name_map = {
        'statistic': 'statistic',
        'm': 'm',
        'n': 'n',
        'alpha': 'alpha',
        'critical_value': 'critical_value',
        'replicates': 'replicates',
        'seed': 'seed',
    }

    attribute_type_map = {
        'statistic': 'six.text_type',
        'm': 'int',
        'n': 'int',
        'alpha': 'float',
        'critical_value': 'float',
        'replicates': 'int',
        'seed': 'int',
    }

    def __init__(self, statistic, m, n, alpha, critical_value, replicates, seed):
        """
        Construct a CriticalValueEntry instance

        :param statistic: Name of the statistic
        """
        self._statistic = statistic
        self._m = m
        self._n = n
        self._alpha = alpha
        self._critical_value = critical_value
        self._replicates = replicates
        self._seed = seed

    @property
    def key(self):
        """
        Gets the key attribute of this CriticalValueEntry instance.
        """
        return (self._statistic, self._m, self._n, self._alpha)

    @property
    def statistic(self):
        """
        Gets the statistic attribute of this CriticalValueEntry instance.

        :rtype: six.text_type
        """
        return self._statistic

    @property
    def m(self):
        """
        Gets the m attribute of this CriticalValueEntry instance.

        :rtype: int
        """
        return self._m

    @property
    def n(self):
        """
        Gets the n attribute of this CriticalValueEntry instance.

        :rtype: int
        """
        return self._n

    @property
    def alpha(self):
        """
        Gets the alpha attribute of this CriticalValueEntry instance.

        :rtype: float
        """
        return self._alpha

    @property
    def critical_value(self):
        """
        Gets the critical_value attribute of this CriticalValueEntry
        instance.

        :return: The conservative empirical (1 - alpha) quantile
        :rtype: float
        """
        return self._critical_value

    @property
    def replicates(self):
        """
        Gets the replicates attribute of this CriticalValueEntry instance.

        :rtype: int
        """
        return self._replicates

    @property
    def seed(self):
        """
        Gets the seed attribute of this CriticalValueEntry instance.

        :rtype: int
        """
        return self._seed


class CriticalValueTable(SdtestObject):
    """
    Critical value entries keyed by (statistic, m, n, alpha).
    """

    __slots__ = ['_entries']

    attribute_name_map = {'entries': 'entries'}

    attribute_type_map = {'entries': 'List[CriticalValueEntry]'}

    def __init__(self, entries=None):
        self._entries = []

        for entry in entries or []:
            self.add(entry)

    def add(self, entry):
        """
        Add an entry, replacing any entry with the same key

        :param entry: The entry to add
        """
        if not isinstance(entry, CriticalValueEntry):
            raise TypeError(
                'entry must be an instance of {0}'.format(CriticalValueEntry)
            )

        self._entries = [
            existing for existing in self._entries if existing.key != entry.key
        ]
        self._entries.append(entry)
        self._entries.sort(key=lambda existing: existing.key)

    def lookup(self, statistic, m, n, alpha):
        for entry in self._entries:
            if entry.key == (statistic, m, n, alpha):
                return entry

        raise SdtestConfigurationException(
            'No critical value for statistic={0}, m={1}, n={2}, alpha={3}'.format(
                statistic, m, n, alpha
            ),
            'alpha',
        )

    def __len__(self):
        return len(self._entries)

    def __iter__(self):
        return iter(self._entries)

    @property
    def entries(self):
        """
        Gets the entries attribute of this CriticalValueTable instance.

        :return: Entries sorted by key
        :rtype: list
        """
        return list(self._entries)
