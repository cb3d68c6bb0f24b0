"""
This module is home to the AlternativePair class
"""
import logging
import numbers

from pysdtest.exceptions import SdtestConfigurationException
from pysdtest.exceptions import SdtestNotInAlternativeException
from pysdtest.objects.continuous_distribution import ContinuousDistribution
from pysdtest.sdtest_object import SdtestObject

logger = logging.getLogger(__name__)


class AlternativePair(SdtestObject):
    """
    A pair (F_1, G_1) of first-sample and second-sample distributions
    together with the limiting sample-size fraction eta.

    The pair must lie in the alternative, i.e. G_1(z) > F_1(z) for some
    z. This is checked numerically on a dense grid at construction
    unless validate is False (used to feed the null model through the
    power machinery as a size check).
    """

    __slots__ = ['_f1', '_g1', '_eta', '_sup_difference']

    attribute_name_map = {
        'f1': 'f1',
        'g1': 'g1',
        'eta': 'eta',
        'sup_difference': 'sup_difference',
    }

    attribute_type_map = {
        'f1': 'ContinuousDistribution',
        'g1': 'ContinuousDistribution',
        'eta': 'float',
        'sup_difference': 'float',
    }

    def __init__(self, f1, g1, eta=0.5, validate=True):
        """
        Construct an AlternativePair instance

        :param f1: The first-sample distribution F_1
        :param g1: The second-sample distribution G_1
        :param eta: The limiting fraction m / N, in (0, 1)
        :param validate: Whether to verify that the pair lies in the
        alternative
        :raises SdtestNotInAlternativeException: If G_1 - F_1 is never
        positive on the verification grid
        """
        if not isinstance(f1, ContinuousDistribution):
            raise TypeError(
                'f1 must be an instance of {0}'.format(ContinuousDistribution)
            )
        if not isinstance(g1, ContinuousDistribution):
            raise TypeError(
                'g1 must be an instance of {0}'.format(ContinuousDistribution)
            )
        if isinstance(eta, bool) or not isinstance(eta, numbers.Real):
            raise TypeError('eta must be a real number')
        if not 0.0 < eta < 1.0:
            raise SdtestConfigurationException(
                'eta must lie in (0, 1), got {0}'.format(eta), 'eta'
            )

        self._f1 = f1
        self._g1 = g1
        self._eta = float(eta)
        self._sup_difference = None

        if validate:
            # Deferred to break the objects <-> alternatives import cycle
            from pysdtest.alternatives import Alternatives

            self._sup_difference = Alternatives.grid_sup_difference(f1, g1)

            if self._sup_difference <= Alternatives.ALTERNATIVE_TOLERANCE:
                logger.error(
                    'Pair is not in the alternative\n'
                    '[F_1]\n'
                    '=====\n%s\n\n'
                    '[G_1]\n'
                    '=====\n%s',
                    f1.label(),
                    g1.label(),
                )

                raise SdtestNotInAlternativeException(
                    'G_1 - F_1 is nowhere positive for F_1={0}, G_1={1}'.format(
                        f1.label(), g1.label()
                    ),
                    self._sup_difference,
                )

    def with_eta(self, eta):
        """
        Returns a copy of this pair with a different eta
        """
        return AlternativePair(
            self._f1, self._g1, eta, validate=self._sup_difference is not None
        )

    def label(self):
        return '{0}/{1}'.format(self._f1.label(), self._g1.label())

    @property
    def f1(self):
        """
        Gets the f1 attribute of this AlternativePair instance.

        :return: The value of the f1 attribute of this AlternativePair
        instance.
        :rtype: ContinuousDistribution
        """
        return self._f1

    @property
    def g1(self):
        """
        Gets the g1 attribute of this AlternativePair instance.

        :return: The value of the g1 attribute of this AlternativePair
        instance.
        :rtype: ContinuousDistribution
        """
        return self._g1

    @property
    def eta(self):
        """
        Gets the eta attribute of this AlternativePair instance.

        :rtype: float
        """
        return self._eta

    @property
    def sup_difference(self):
        """
        Grid estimate of sup_z [G_1(z) - F_1(z)]; None when the pair was
        built without validation.
        """
        return self._sup_difference
