"""
This module is home to the ContinuousDistribution class
"""
import math
import numbers

from pysdtest.enumerations import Family
from pysdtest.exceptions import SdtestConfigurationException
from pysdtest.sdtest_object import SdtestObject


class ContinuousDistribution(SdtestObject):
    """
    A continuous distribution from one of the supported families.

    Instances are immutable value objects. Evaluation (cdf, quantile,
    sampling) lives in pysdtest.alternatives.Alternatives so that the
    objects stay shareable across worker threads and never hold random
    number generator state.

    Parameter meaning per family:
        MU(a)                 density 1 + a sin(10 pi x) on (0.4, 0.6),
                              uniform elsewhere on [0, 1]; a in [-1, 1]
        SINGH_MADDALA(a,b,c)  cdf 1 - [1 + (x / b)^a]^(-c); a, b, c >= 1
        LOG_NORMAL(a,b)       log X ~ N(a, b^2); b > 0
        NORMAL(a,b)           mean a, standard deviation b > 0
        LAPLACE(a,b)          location a, scale b > 0
        CHI_SQUARE_1          central chi-square, 1 degree of freedom
        UNIFORM_01            uniform on [0, 1]
        MIXTURE               weight * components[0] +
                              (1 - weight) * components[1]; weight in (0, 1)
    """

    __slots__ = ['_family', '_a', '_b', '_c', '_weight', '_components']

    attribute_name_map = {
        'family': 'family',
        'a': 'a',
        'b': 'b',
        'c': 'c',
        'weight': 'weight',
        'components': 'components',
    }

    attribute_type_map = {
        'family': 'Family',
        'a': 'float',
        'b': 'float',
        'c': 'float',
        'weight': 'float',
        'components': 'List[ContinuousDistribution]',
    }

    def __init__(self, family, a=None, b=None, c=None, weight=None, components=None):
        """
        Construct a ContinuousDistribution instance

        :param family: The distribution family
        :param a: First family parameter
        :param b: Second family parameter
        :param c: Third family parameter (Singh-Maddala only)
        :param weight: Weight of the first mixture component
        :param components: The two mixture components
        :raises TypeError: If family is not a Family
        :raises SdtestConfigurationException: If the parameters violate
        the family constraints
        """
        if not isinstance(family, Family):
            raise TypeError('family must be an instance of {0}'.format(Family))

        self._family = family
        self._a = ContinuousDistribution._as_float('a', a)
        self._b = ContinuousDistribution._as_float('b', b)
        self._c = ContinuousDistribution._as_float('c', c)
        self._weight = ContinuousDistribution._as_float('weight', weight)
        self._components = tuple(components) if components is not None else None

        self._validate()

    @staticmethod
    def _as_float(name, value):
        if value is None:
            return None
        if isinstance(value, bool) or not isinstance(value, numbers.Real):
            raise TypeError('{0} must be a real number'.format(name))
        if not math.isfinite(value):
            raise SdtestConfigurationException(
                '{0} must be finite, got {1!r}'.format(name, value), name
            )

        return float(value)

    def _require(self, *names):
        for name in names:
            if getattr(self, '_{0}'.format(name)) is None:
                raise SdtestConfigurationException(
                    '{0} requires parameter {1}'.format(self._family.value, name), name
                )

    def _validate(self):
        family = self._family

        if family is Family.MU:
            self._require('a')
            if not -1.0 <= self._a <= 1.0:
                raise SdtestConfigurationException(
                    'MU parameter a must lie in [-1, 1], got {0}'.format(self._a), 'a'
                )
        elif family is Family.SINGH_MADDALA:
            self._require('a', 'b', 'c')
            for name in ('a', 'b', 'c'):
                if getattr(self, '_{0}'.format(name)) < 1.0:
                    raise SdtestConfigurationException(
                        'Singh-Maddala parameter {0} must be >= 1'.format(name), name
                    )
        elif family in (Family.LOG_NORMAL, Family.NORMAL, Family.LAPLACE):
            self._require('a', 'b')
            if self._b <= 0.0:
                raise SdtestConfigurationException(
                    '{0} parameter b must be > 0, got {1}'.format(family.value, self._b),
                    'b',
                )
        elif family is Family.MIXTURE:
            self._require('weight')
            if not 0.0 < self._weight < 1.0:
                raise SdtestConfigurationException(
                    'Mixture weight must lie in (0, 1), got {0}'.format(self._weight),
                    'weight',
                )
            if self._components is None or len(self._components) != 2:
                raise SdtestConfigurationException(
                    'Mixture requires exactly two components', 'components'
                )
            for component in self._components:
                if not isinstance(component, ContinuousDistribution):
                    raise TypeError(
                        'components must be instances of {0}'.format(
                            ContinuousDistribution
                        )
                    )

    @classmethod
    def mu(cls, a):
        return cls(Family.MU, a=a)

    @classmethod
    def singh_maddala(cls, a, b, c):
        return cls(Family.SINGH_MADDALA, a=a, b=b, c=c)

    @classmethod
    def pareto(cls, a):
        return cls(Family.SINGH_MADDALA, a=a, b=1.0, c=1.0)

    @classmethod
    def log_normal(cls, a, b):
        return cls(Family.LOG_NORMAL, a=a, b=b)

    @classmethod
    def normal(cls, a=0.0, b=1.0):
        return cls(Family.NORMAL, a=a, b=b)

    @classmethod
    def chi_square_1(cls):
        return cls(Family.CHI_SQUARE_1)

    @classmethod
    def laplace(cls, a, b):
        return cls(Family.LAPLACE, a=a, b=b)

    @classmethod
    def uniform_01(cls):
        return cls(Family.UNIFORM_01)

    @classmethod
    def mixture(cls, weight, first, second):
        return cls(Family.MIXTURE, weight=weight, components=(first, second))

    def support(self):
        """
        Gets the closure of the support as a (lower, upper) pair,
        possibly infinite.

        :rtype: tuple
        """
        if self._family in (Family.MU, Family.UNIFORM_01):
            return (0.0, 1.0)
        if self._family in (
            Family.SINGH_MADDALA,
            Family.LOG_NORMAL,
            Family.CHI_SQUARE_1,
        ):
            return (0.0, math.inf)
        if self._family is Family.MIXTURE:
            supports = [component.support() for component in self._components]

            return (
                min(support[0] for support in supports),
                max(support[1] for support in supports),
            )

        return (-math.inf, math.inf)

    def label(self):
        """
        Short human readable label, e.g. Laplace(0,1.25)
        """
        family = self._family

        if family is Family.MU:
            return 'MU({0:g})'.format(self._a)
        if family is Family.SINGH_MADDALA:
            if self._b == 1.0 and self._c == 1.0:
                return 'Pareto({0:g})'.format(self._a)
            return 'SM({0:g},{1:g},{2:g})'.format(self._a, self._b, self._c)
        if family is Family.LOG_NORMAL:
            return 'LN({0:g},{1:g})'.format(self._a, self._b)
        if family is Family.NORMAL:
            return 'N({0:g},{1:g})'.format(self._a, self._b)
        if family is Family.LAPLACE:
            return 'Laplace({0:g},{1:g})'.format(self._a, self._b)
        if family is Family.CHI_SQUARE_1:
            return 'Chi2(1)'
        if family is Family.UNIFORM_01:
            return 'U(0,1)'

        return '{0:g}{1}+{2:g}{3}'.format(
            self._weight,
            self._components[0].label(),
            1.0 - self._weight,
            self._components[1].label(),
        )

    @property
    def family(self):
        """
        Gets the family attribute of this ContinuousDistribution instance.

        :return: The value of the family attribute of this
        ContinuousDistribution instance.
        :rtype: Family
        """
        return self._family

    @property
    def a(self):
        """
        Gets the a attribute of this ContinuousDistribution instance.

        :rtype: float
        """
        return self._a

    @property
    def b(self):
        """
        Gets the b attribute of this ContinuousDistribution instance.

        :rtype: float
        """
        return self._b

    @property
    def c(self):
        """
        Gets the c attribute of this ContinuousDistribution instance.

        :rtype: float
        """
        return self._c

    @property
    def weight(self):
        """
        Gets the weight attribute of this ContinuousDistribution
        instance. Only set for mixtures.

        :rtype: float
        """
        return self._weight

    @property
    def components(self):
        """
        Gets the components attribute of this ContinuousDistribution
        instance. Only set for mixtures.

        :rtype: tuple
        """
        return self._components
