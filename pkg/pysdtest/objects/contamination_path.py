"""
This module is home to the ContaminationPath class
"""
import numbers

from pysdtest.exceptions import SdtestConfigurationException
from pysdtest.objects.alternative_pair import AlternativePair
from pysdtest.sdtest_object import SdtestObject


class ContaminationPath(SdtestObject):
    """
    The contamination alternatives
    (F_1N, G_1N) = (1 - theta_N)(F_0, F_0) + theta_N (F_1, G_1)
    with F_0 = J_1 = eta F_1 + (1 - eta) G_1.

    theta_N is either N^(-q), a constant theta, or an arbitrary callable
    of N. Exactly one of q, theta must be given.
    """

    __slots__ = ['_base', '_q', '_theta']

    attribute_name_map = {'base': 'base', 'q': 'q', 'theta': 'theta'}

    attribute_type_map = {
        'base': 'AlternativePair',
        'q': 'float',
        'theta': 'Union[float, Callable]',
    }

    def __init__(self, base, q=None, theta=None):
        """
        Construct a ContaminationPath instance

        :param base: The fixed alternative (F_1, G_1, eta)
        :param q: Exponent with theta_N = N^(-q), q > 0
        :param theta: Constant theta in (0, 1) or a callable N -> theta_N
        """
        if not isinstance(base, AlternativePair):
            raise TypeError('base must be an instance of {0}'.format(AlternativePair))
        if (q is None) == (theta is None):
            raise SdtestConfigurationException(
                'Exactly one of q and theta must be given', 'q'
            )

        if q is not None:
            if isinstance(q, bool) or not isinstance(q, numbers.Real):
                raise TypeError('q must be a real number')
            if q <= 0.0:
                raise SdtestConfigurationException(
                    'q must be > 0, got {0}'.format(q), 'q'
                )
            q = float(q)
        elif isinstance(theta, numbers.Real) and not isinstance(theta, bool):
            if not 0.0 < theta < 1.0:
                raise SdtestConfigurationException(
                    'theta must lie in (0, 1), got {0}'.format(theta), 'theta'
                )
            theta = float(theta)
        elif not callable(theta):
            raise TypeError('theta must be a real number or a callable')

        self._base = base
        self._q = q
        self._theta = theta

    @property
    def base(self):
        """
        Gets the base attribute of this ContaminationPath instance.

        :return: The value of the base attribute of this
        ContaminationPath instance.
        :rtype: AlternativePair
        """
        return self._base

    @property
    def q(self):
        """
        Gets the q attribute of this ContaminationPath instance.

        :rtype: float
        """
        return self._q

    @property
    def theta(self):
        """
        Gets the theta attribute of this ContaminationPath instance.

        :rtype: Union[float, Callable]
        """
        return self._theta
