"""
This module is home to the Atom and ExactNullDistribution classes
"""
from fractions import Fraction

from pysdtest.objects.statistic_kind import StatisticKind
from pysdtest.sdtest_object import SdtestObject


class Atom(SdtestObject):
    """
    One support point of an exact null distribution with its rational
    probability.
    """

    __slots__ = ['_value', '_probability']

    attribute_name_map = {'value': 'value', 'probability': 'probability'}

    attribute_type_map = {'value': 'float', 'probability': 'Fraction'}

    def __init__(self, value, probability):
        if not isinstance(probability, Fraction):
            raise TypeError('probability must be an instance of {0}'.format(Fraction))

        self._value = float(value)
        self._probability = probability

    @property
    def value(self):
        """
        Gets the value attribute of this Atom instance.

        :rtype: float
        """
        return self._value

    @property
    def probability(self):
        """
        Gets the probability attribute of this Atom instance.

        :rtype: Fraction
        """
        return self._probability


class ExactNullDistribution(SdtestObject):
    """
    Exact finite-sample null distribution of a rank statistic obtained
    by enumerating all C(N, m) equally likely X-rank sets.

    Atoms are sorted by value and their probabilities sum to exactly 1.
    """

    __slots__ = ['_statistic', '_m', '_n', '_atoms']

    attribute_name_map = {
        'statistic': 'statistic',
        'm': 'm',
        'n': 'n',
        'atoms': 'atoms',
    }

    attribute_type_map = {
        'statistic': 'StatisticKind',
        'm': 'int',
        'n': 'int',
        'atoms': 'List[Atom]',
    }

    def __init__(self, statistic, m, n, atoms):
        """
        Construct an ExactNullDistribution instance

        :param statistic: The enumerated statistic
        :param m: First sample size
        :param n: Second sample size
        :param atoms: Atoms sorted ascending by value
        """
        if not isinstance(statistic, StatisticKind):
            raise TypeError('statistic must be an instance of {0}'.format(StatisticKind))

        self._statistic = statistic
        self._m = m
        self._n = n
        self._atoms = tuple(atoms)

    @property
    def statistic(self):
        """
        Gets the statistic attribute of this ExactNullDistribution
        instance.

        :rtype: StatisticKind
        """
        return self._statistic

    @property
    def m(self):
        """
        Gets the m attribute of this ExactNullDistribution instance.

        :rtype: int
        """
        return self._m

    @property
    def n(self):
        """
        Gets the n attribute of this ExactNullDistribution instance.

        :rtype: int
        """
        return self._n

    @property
    def atoms(self):
        """
        Gets the atoms attribute of this ExactNullDistribution instance.

        :return: The atoms, ascending by value
        :rtype: tuple
        """
        return self._atoms

    @property
    def values(self):
        """
        Gets the values attribute of this ExactNullDistribution instance.
        """
        return [atom.value for atom in self._atoms]

    @property
    def probabilities(self):
        """
        Gets the probabilities attribute of this ExactNullDistribution
        instance.
        """
        return [atom.probability for atom in self._atoms]
