"""
This module is home to the Efficiency class
"""
import logging
import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from pysdtest.alternatives import Alternatives
from pysdtest.exceptions import SdtestDomainException
from pysdtest.exceptions import SdtestNotInAlternativeException
from pysdtest.objects.alternative_pair import AlternativePair
from pysdtest.objects.efficiency_report import EfficiencyReport
from pysdtest.statistics import Statistics

logger = logging.getLogger(__name__)

_GOLDEN_RATIO = (math.sqrt(5.0) - 1.0) / 2.0


class Efficiency(object):
    """
    Deviation functions Abar(t) = (G_1 - F_1)(J_1^{-1}(t)) and
    A*(t) = Abar(t) / sqrt(t (1 - t)), their suprema, the intermediate
    efficiency e_TV and the centering sequences b_V and b_T.
    """

    __slots__ = []

    SCAN_POINTS = 10 ** 4
    SCAN_EDGE = 1e-6
    REFINEMENT_TOLERANCE = 1e-9
    MAXIMUM_REFINEMENT_STEPS = 200
    MINIMUM_SUP_ABAR = 1e-9
    ETA_GRID = [round(0.01 * i, 2) for i in range(1, 100)]

    @classmethod
    def sample_sizes(cls, eta, size):
        """
        (m, n) = (floor(eta N), N - floor(eta N))

        :raises SdtestDomainException: If either size is below 1
        """
        m = int(math.floor(round(eta * size, 9)))
        n = size - m

        if m < 1 or n < 1:
            raise SdtestDomainException(
                'eta={0} and N={1} leave an empty sample'.format(eta, size), size
            )

        return (m, n)

    @classmethod
    def _abar_array(cls, pair, t):
        z = Alternatives.pooled_mixture_quantile(pair, t)

        return Alternatives.cdf(pair.g1, z) - Alternatives.cdf(pair.f1, z)

    @classmethod
    def abar(cls, pair, t):
        """
        Abar(t; eta) = G_1(z_t) - F_1(z_t) with J_1(z_t) = t

        :param pair: The alternative pair
        :param t: A real or array of reals in (0, 1)
        :raises SdtestDomainException: If t is outside (0, 1)
        """
        if not isinstance(pair, AlternativePair):
            raise TypeError('pair must be an instance of {0}'.format(AlternativePair))

        return cls._abar_array(pair, t)

    @classmethod
    def astar(cls, pair, t):
        """
        A*(t; eta) = Abar(t; eta) / sqrt(t (1 - t))
        """
        t_array = np.asarray(t, dtype=np.float64)
        values = cls.abar(pair, t) / np.sqrt(t_array * (1.0 - t_array))

        return float(values) if np.ndim(t) == 0 else values

    @classmethod
    def _golden_section_maximum(cls, function, lower, upper):
        """
        Maximize a unimodal function on [lower, upper] to relative
        tolerance REFINEMENT_TOLERANCE
        """
        left = upper - _GOLDEN_RATIO * (upper - lower)
        right = lower + _GOLDEN_RATIO * (upper - lower)
        left_value = function(left)
        right_value = function(right)

        for _ in range(cls.MAXIMUM_REFINEMENT_STEPS):
            if upper - lower <= cls.REFINEMENT_TOLERANCE * max(abs(left), abs(right)):
                break

            if left_value >= right_value:
                upper = right
                right = left
                right_value = left_value
                left = upper - _GOLDEN_RATIO * (upper - lower)
                left_value = function(left)
            else:
                lower = left
                left = right
                left_value = right_value
                right = lower + _GOLDEN_RATIO * (upper - lower)
                right_value = function(right)

        if left_value >= right_value:
            return (left, left_value)

        return (right, right_value)

    @classmethod
    def _supremum(cls, function, grid, values):
        """
        Coarse scan followed by golden-section refinement around the best
        cell. The smallest maximizer wins on plateaus.
        """
        index = int(np.argmax(values))
        (best_t, best_value) = (float(grid[index]), float(values[index]))

        lower = float(grid[max(index - 1, 0)])
        upper = float(grid[min(index + 1, grid.size - 1)])
        (refined_t, refined_value) = cls._golden_section_maximum(function, lower, upper)

        if refined_value > best_value:
            return (refined_t, refined_value)

        return (best_t, best_value)

    @classmethod
    def efficiency_tv(cls, pair):
        """
        Intermediate efficiency of T relative to V,
        e_TV = (sup A* / (2 sup Abar))^2

        :param pair: The alternative pair
        :rtype: EfficiencyReport
        :raises SdtestNotInAlternativeException: If sup Abar < 1e-9
        """
        if not isinstance(pair, AlternativePair):
            raise TypeError('pair must be an instance of {0}'.format(AlternativePair))

        grid = np.linspace(cls.SCAN_EDGE, 1.0 - cls.SCAN_EDGE, cls.SCAN_POINTS)
        abar_values = cls._abar_array(pair, grid)
        astar_values = abar_values / np.sqrt(grid * (1.0 - grid))

        (argmax_abar, sup_abar) = cls._supremum(
            lambda t: float(cls._abar_array(pair, t)), grid, abar_values
        )

        if sup_abar < cls.MINIMUM_SUP_ABAR:
            logger.error(
                'Pair not detectably in the alternative\n'
                '[Pair]\n'
                '======\n%s\n\n'
                '[sup Abar]\n'
                '==========\n%r',
                pair.label(),
                sup_abar,
            )

            raise SdtestNotInAlternativeException(
                'Pair {0} is not detectably in the alternative (sup Abar={1!r})'.format(
                    pair.label(), sup_abar
                ),
                sup_abar,
            )

        (argmax_astar, sup_astar) = cls._supremum(
            lambda t: float(cls._abar_array(pair, t)) / math.sqrt(t * (1.0 - t)),
            grid,
            astar_values,
        )

        # A* at the maximizer of Abar already bounds sup A* from below
        astar_at_argmax_abar = sup_abar / math.sqrt(argmax_abar * (1.0 - argmax_abar))
        if astar_at_argmax_abar > sup_astar:
            (argmax_astar, sup_astar) = (argmax_abar, astar_at_argmax_abar)

        e_tv = (sup_astar / (2.0 * sup_abar)) ** 2

        report = EfficiencyReport(
            eta=pair.eta,
            e_tv=e_tv,
            argmax_astar=argmax_astar,
            sup_abar=sup_abar,
            sup_astar=sup_astar,
            argmax_abar=argmax_abar,
        )

        logger.debug('Efficiency\n[Report]\n========\n%s', report.pretty_format())

        return report

    @classmethod
    def efficiency_curve(cls, pair, eta_grid=None, threads=1):
        """
        efficiency_tv over an eta grid for the distributions of pair (its
        own eta is ignored). Results are in grid order whatever the
        thread count.

        :rtype: list
        """
        eta_grid = cls.ETA_GRID if eta_grid is None else list(eta_grid)
        pairs = [AlternativePair(pair.f1, pair.g1, eta, validate=False) for eta in eta_grid]

        if threads <= 1:
            return [cls.efficiency_tv(pair_) for pair_ in pairs]

        with ThreadPoolExecutor(max_workers=threads) as executor:
            return list(executor.map(cls.efficiency_tv, pairs))

    @classmethod
    def centering_v_value(cls, sup_abar, theta, m, n):
        """
        sqrt(m n / N) theta sup Abar
        """
        return math.sqrt(m * n / float(m + n)) * theta * sup_abar

    @classmethod
    def centering_v(cls, path, size, report=None):
        """
        b_V at pooled size N, with m = floor(eta N)

        :param path: The contamination path
        :param size: N
        :param report: Optional precomputed efficiency report of the base
        pair
        """
        report = report if report is not None else cls.efficiency_tv(path.base)
        (m, n) = cls.sample_sizes(path.base.eta, size)

        return cls.centering_v_value(
            report.sup_abar, Alternatives.theta(path, size), m, n
        )

    @classmethod
    def centering_t_value(cls, pair, theta, m, n, points):
        """
        theta sqrt(m n / N) max_j Abar(pi_j) / sqrt(pi_j (1 - pi_j))
        """
        points = np.asarray(points, dtype=np.float64)
        weighted = cls._abar_array(pair, points) / np.sqrt(points * (1.0 - points))

        return theta * math.sqrt(m * n / float(m + n)) * float(np.max(weighted))

    @classmethod
    def centering_t(cls, path, size, scheme):
        """
        b_T at pooled size N on the grid of scheme
        """
        (m, n) = cls.sample_sizes(path.base.eta, size)

        return cls.centering_t_value(
            path.base,
            Alternatives.theta(path, size),
            m,
            n,
            Statistics.grid(scheme, size),
        )
