"""
This module is home to the EfficiencyReport class
"""
from pysdtest.sdtest_object import SdtestObject


class EfficiencyReport(SdtestObject):
    """
    Suprema of the deviation functions at one eta and the resulting
    intermediate efficiency e_TV = (sup A* / (2 sup Abar))^2.

    attribute_name_map doubles as the efficiency CSV column map.
    """

    __slots__ = [
        '_eta',
        '_e_tv',
        '_argmax_astar',
        '_sup_abar',
        '_sup_astar',
        '_argmax_abar',
    ]

    attribute_name_map = {
        'eta': 'eta',
        'e_tv': 'e_tv',
        'argmax_astar': 'argmax_astar',
        'sup_abar': 'sup_abar',
        'sup_astar': 'sup_astar',
        'argmax_abar': 'argmax_abar',
    }

    attribute_type_map = {
        'eta': 'float',
        'e_tv': 'float',
        'argmax_astar': 'float',
        'sup_abar': 'float',
        'sup_astar': 'float',
        'argmax_abar': 'float',
    }

    csv_columns = ['eta', 'e_tv', 'argmax_astar', 'sup_abar', 'sup_astar']

    def __init__(self, eta, e_tv, argmax_astar, sup_abar, sup_astar, argmax_abar=None):
        """
        Construct an EfficiencyReport instance
        """
        self._eta = eta
        self._e_tv = e_tv
        self._argmax_astar = argmax_astar
        self._sup_abar = sup_abar
        self._sup_astar = sup_astar
        self._argmax_abar = argmax_abar

    @property
    def eta(self):
        """
        Gets the eta attribute of this EfficiencyReport instance.

        :rtype: float
        """
        return self._eta

    @property
    def e_tv(self):
        """
        Gets the e_tv attribute of this EfficiencyReport instance.

        :return: The intermediate efficiency of T relative to V at eta
        :rtype: float
        """
        return self._e_tv

    @property
    def argmax_astar(self):
        """
        Gets the argmax_astar attribute of this EfficiencyReport
        instance. The smallest maximizer is reported on plateaus.

        :rtype: float
        """
        return self._argmax_astar

    @property
    def sup_abar(self):
        """
        Gets the sup_abar attribute of this EfficiencyReport instance.

        :rtype: float
        """
        return self._sup_abar

    @property
    def sup_astar(self):
        """
        Gets the sup_astar attribute of this EfficiencyReport instance.

        :rtype: float
        """
        return self._sup_astar

    @property
    def argmax_abar(self):
        """
        Gets the argmax_abar attribute of this EfficiencyReport instance.

        :rtype: float
        """
        return self._argmax_abar
