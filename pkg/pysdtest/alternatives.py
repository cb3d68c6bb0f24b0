"""
This module is home to the Alternatives class
"""
import logging
import math
import numbers

import numpy as np
from scipy import special

from pysdtest.enumerations import Family
from pysdtest.exceptions import SdtestConfigurationException
from pysdtest.exceptions import SdtestDomainException
from pysdtest.objects.alternative_pair import AlternativePair
from pysdtest.objects.contamination_path import ContaminationPath
from pysdtest.objects.continuous_distribution import ContinuousDistribution

logger = logging.getLogger(__name__)

# Keeps closed-form quantiles finite when a generator returns exactly 0
_SMALLEST_UNIFORM = 2.0 ** -53


class Alternatives(object):
    """
    Distribution families, alternative pairs, the pooled mixture
    J_1 = eta F_1 + (1 - eta) G_1 and the contamination path.

    Every operation accepts a scalar or an array argument and returns a
    float or an ndarray accordingly.
    """

    __slots__ = []

    ALTERNATIVE_TOLERANCE = 1e-12
    INVERSION_TOLERANCE = 1e-12
    MAXIMUM_BISECTION_STEPS = 200
    VERIFICATION_GRID_SIZE = 4001

    _preset_pairs = {
        'mu': lambda: (ContinuousDistribution.mu(-1.0), ContinuousDistribution.mu(1.0)),
        'pareto': lambda: (
            ContinuousDistribution.pareto(1.5),
            ContinuousDistribution.pareto(1.0),
        ),
        'singh_maddala': lambda: (
            ContinuousDistribution.singh_maddala(2.0, 1.0, 1.5),
            ContinuousDistribution.singh_maddala(1.5, 1.0, 1.0),
        ),
        'lognormal': lambda: (
            ContinuousDistribution.log_normal(0.0, 1.0),
            ContinuousDistribution.log_normal(1.0, 2.0),
        ),
        'normal_chi2': lambda: (
            ContinuousDistribution.mixture(
                0.8,
                ContinuousDistribution.normal(0.0, 1.0),
                ContinuousDistribution.chi_square_1(),
            ),
            ContinuousDistribution.normal(0.0, 1.0),
        ),
        'laplace': lambda: (
            ContinuousDistribution.laplace(0.0, 1.0),
            ContinuousDistribution.laplace(1.0, 1.25),
        ),
    }

    @staticmethod
    def _result(value, like):
        if np.ndim(like) == 0:
            return float(value)

        return value

    @classmethod
    def _cdf_array(cls, dist, z):
        family = dist.family

        if family is Family.UNIFORM_01:
            return np.clip(z, 0.0, 1.0)
        if family is Family.MU:
            x = np.clip(z, 0.0, 1.0)
            inside = (x > 0.4) & (x < 0.6)
            bump = dist.a * (1.0 - np.cos(10.0 * math.pi * x)) / (10.0 * math.pi)

            return np.clip(np.where(inside, x + bump, x), 0.0, 1.0)
        if family is Family.SINGH_MADDALA:
            positive = np.where(z > 0.0, z, 0.0)

            return np.where(
                z > 0.0,
                -np.expm1(-dist.c * np.log1p((positive / dist.b) ** dist.a)),
                0.0,
            )
        if family is Family.LOG_NORMAL:
            positive = np.where(z > 0.0, z, 1.0)

            return np.where(
                z > 0.0, special.ndtr((np.log(positive) - dist.a) / dist.b), 0.0
            )
        if family is Family.NORMAL:
            return special.ndtr((z - dist.a) / dist.b)
        if family is Family.CHI_SQUARE_1:
            return np.where(z > 0.0, special.chdtr(1.0, np.maximum(z, 0.0)), 0.0)
        if family is Family.LAPLACE:
            scaled = (z - dist.a) / dist.b

            return np.where(
                scaled < 0.0,
                0.5 * np.exp(np.minimum(scaled, 0.0)),
                1.0 - 0.5 * np.exp(-np.maximum(scaled, 0.0)),
            )

        (first, second) = dist.components

        return dist.weight * cls._cdf_array(first, z) + (
            1.0 - dist.weight
        ) * cls._cdf_array(second, z)

    @classmethod
    def cdf(cls, dist, z):
        """
        Evaluate F(z)

        :param dist: The distribution
        :param z: A real or an array of reals
        :return: F(z) in [0, 1]
        """
        if not isinstance(dist, ContinuousDistribution):
            raise TypeError(
                'dist must be an instance of {0}'.format(ContinuousDistribution)
            )

        return cls._result(cls._cdf_array(dist, np.asarray(z, dtype=np.float64)), z)

    @classmethod
    def _bisect(cls, cdf_function, u, lower, upper):
        """
        Vectorized inf{z : cdf_function(z) >= u} on brackets grown
        geometrically until cdf(lower) < u <= cdf(upper).
        """
        lower = np.array(lower, dtype=np.float64)
        upper = np.array(upper, dtype=np.float64)
        width = np.maximum(upper - lower, 1.0)

        for _ in range(cls.MAXIMUM_BISECTION_STEPS):
            low_side = cdf_function(lower) >= u
            if not np.any(low_side):
                break
            lower = np.where(low_side, lower - width, lower)
            width = np.where(low_side, 2.0 * width, width)

        width = np.maximum(upper - lower, 1.0)

        for _ in range(cls.MAXIMUM_BISECTION_STEPS):
            high_side = cdf_function(upper) < u
            if not np.any(high_side):
                break
            upper = np.where(high_side, upper + width, upper)
            width = np.where(high_side, 2.0 * width, width)

        for _ in range(cls.MAXIMUM_BISECTION_STEPS):
            middle = 0.5 * (lower + upper)
            at_middle = cdf_function(middle)
            above = at_middle >= u
            upper = np.where(above, middle, upper)
            lower = np.where(above, lower, middle)

            converged = (cdf_function(upper) - u <= cls.INVERSION_TOLERANCE) | (
                upper - lower <= 4.0 * np.finfo(np.float64).eps * np.abs(upper)
            )
            if np.all(converged):
                break

        return upper

    @classmethod
    def _quantile_array(cls, dist, u):
        family = dist.family

        if family is Family.UNIFORM_01:
            return u.copy()
        if family is Family.SINGH_MADDALA:
            return dist.b * np.expm1(-np.log1p(-u) / dist.c) ** (1.0 / dist.a)
        if family is Family.LOG_NORMAL:
            return np.exp(dist.a + dist.b * special.ndtri(u))
        if family is Family.NORMAL:
            return dist.a + dist.b * special.ndtri(u)
        if family is Family.CHI_SQUARE_1:
            return special.ndtri(0.5 * (1.0 + u)) ** 2
        if family is Family.LAPLACE:
            return np.where(
                u < 0.5,
                dist.a + dist.b * np.log(2.0 * np.minimum(u, 0.5)),
                dist.a - dist.b * np.log(2.0 * (1.0 - np.maximum(u, 0.5))),
            )
        if family is Family.MU:
            return cls._bisect(
                lambda z: cls._cdf_array(dist, z),
                u,
                np.zeros_like(u),
                np.ones_like(u),
            )

        (first, second) = dist.components
        first_quantile = cls._quantile_array(first, u)
        second_quantile = cls._quantile_array(second, u)

        return cls._bisect(
            lambda z: cls._cdf_array(dist, z),
            u,
            np.minimum(first_quantile, second_quantile),
            np.maximum(first_quantile, second_quantile),
        )

    @classmethod
    def _check_unit_interval(cls, u):
        u = np.asarray(u, dtype=np.float64)

        outside = ~((u > 0.0) & (u < 1.0))
        if np.any(outside):
            value = float(u[outside].flat[0]) if u.ndim else float(u)
            raise SdtestDomainException(
                'u must lie in (0, 1), got {0!r}'.format(value), value
            )

        return u

    @classmethod
    def quantile(cls, dist, u):
        """
        Evaluate inf{z : F(z) >= u}

        :param dist: The distribution
        :param u: A real or an array of reals in (0, 1)
        :raises SdtestDomainException: If u is outside (0, 1)
        """
        if not isinstance(dist, ContinuousDistribution):
            raise TypeError(
                'dist must be an instance of {0}'.format(ContinuousDistribution)
            )

        return cls._result(cls._quantile_array(dist, cls._check_unit_interval(u)), u)

    @classmethod
    def from_uniforms(cls, dist, u):
        """
        Map uniforms on [0, 1) to draws from dist, one uniform per draw.
        Mixtures use two-level composition on the same uniform.
        """
        u = np.clip(np.asarray(u, dtype=np.float64), _SMALLEST_UNIFORM, 1.0 - _SMALLEST_UNIFORM)

        if dist.family is not Family.MIXTURE:
            return cls._quantile_array(dist, u)

        (first, second) = dist.components
        weight = dist.weight
        in_first = u < weight
        draws = np.empty_like(u)
        draws[in_first] = cls.from_uniforms(first, u[in_first] / weight)
        draws[~in_first] = cls.from_uniforms(
            second, (u[~in_first] - weight) / (1.0 - weight)
        )

        return draws

    @classmethod
    def sample(cls, dist, generator, count):
        """
        Draw count independent values by the inverse-CDF method

        :param dist: The distribution
        :param generator: A numpy Generator
        :param count: Number of draws, >= 0
        :rtype: ndarray
        """
        if isinstance(count, bool) or not isinstance(count, numbers.Integral):
            raise TypeError('count must be an integer')
        if count < 0:
            raise SdtestDomainException(
                'count must be >= 0, got {0}'.format(count), count
            )
        if count == 0:
            return np.empty(0, dtype=np.float64)

        return cls.from_uniforms(dist, generator.random(count))

    @classmethod
    def pooled_mixture(cls, pair):
        """
        J_1 as a mixture distribution
        """
        return ContinuousDistribution.mixture(pair.eta, pair.f1, pair.g1)

    @classmethod
    def pooled_mixture_cdf(cls, pair, z):
        """
        J_1(z) = eta F_1(z) + (1 - eta) G_1(z)
        """
        z_array = np.asarray(z, dtype=np.float64)

        return cls._result(
            pair.eta * cls._cdf_array(pair.f1, z_array)
            + (1.0 - pair.eta) * cls._cdf_array(pair.g1, z_array),
            z,
        )

    @classmethod
    def pooled_mixture_quantile(cls, pair, t):
        """
        J_1^{-1}(t) by bisection on the closed-form J_1, bracketed by the
        component quantiles

        :raises SdtestDomainException: If t is outside (0, 1)
        """
        t_array = cls._check_unit_interval(t)
        first_quantile = cls._quantile_array(pair.f1, t_array)
        second_quantile = cls._quantile_array(pair.g1, t_array)

        return cls._result(
            cls._bisect(
                lambda z: pair.eta * cls._cdf_array(pair.f1, z)
                + (1.0 - pair.eta) * cls._cdf_array(pair.g1, z),
                t_array,
                np.minimum(first_quantile, second_quantile),
                np.maximum(first_quantile, second_quantile),
            ),
            t,
        )

    @classmethod
    def grid_sup_difference(cls, f1, g1):
        """
        max of G_1 - F_1 over the quantiles of both distributions on a
        dense probability grid
        """
        u = np.linspace(1e-6, 1.0 - 1e-6, cls.VERIFICATION_GRID_SIZE)
        z = np.concatenate((cls._quantile_array(f1, u), cls._quantile_array(g1, u)))

        return float(np.max(cls._cdf_array(g1, z) - cls._cdf_array(f1, z)))

    @classmethod
    def theta(cls, path, size):
        """
        theta_N of a contamination path

        :raises SdtestConfigurationException: If theta_N is outside (0, 1)
        """
        if not isinstance(path, ContaminationPath):
            raise TypeError(
                'path must be an instance of {0}'.format(ContaminationPath)
            )

        if path.q is not None:
            theta = float(size) ** (-path.q)
        elif callable(path.theta):
            theta = float(path.theta(size))
        else:
            theta = path.theta

        if not 0.0 < theta < 1.0:
            logger.error('theta_N=%r at N=%d is outside (0, 1)', theta, size)

            raise SdtestConfigurationException(
                'theta_N must lie in (0, 1), got {0!r} at N={1}'.format(theta, size),
                'theta',
            )

        return theta

    @classmethod
    def contaminated_pair_at(cls, pair, theta):
        """
        (F_1N, G_1N) = (1 - theta)(J_1, J_1) + theta (F_1, G_1) for theta
        in [0, 1]; the endpoints return the degenerate limits.
        """
        if not 0.0 <= theta <= 1.0:
            raise SdtestDomainException(
                'theta must lie in [0, 1], got {0!r}'.format(theta), theta
            )

        if theta == 1.0:
            return (pair.f1, pair.g1)

        pooled = cls.pooled_mixture(pair)

        if theta == 0.0:
            return (pooled, pooled)

        return (
            ContinuousDistribution.mixture(1.0 - theta, pooled, pair.f1),
            ContinuousDistribution.mixture(1.0 - theta, pooled, pair.g1),
        )

    @classmethod
    def contaminated_pair(cls, path, size):
        """
        The contamination alternative at pooled sample size N

        :param path: The contamination path
        :param size: N >= 2
        :raises SdtestDomainException: If N < 2
        :raises SdtestConfigurationException: If theta_N is outside (0, 1)
        """
        if size < 2:
            raise SdtestDomainException('N must be >= 2, got {0}'.format(size), size)

        return cls.contaminated_pair_at(path.base, cls.theta(path, size))

    @classmethod
    def from_record(cls, record):
        """
        Parse a tagged record such as {"family": "laplace", "a": 0, "b": 1}
        """
        # Deferred: utilities imports this module
        from pysdtest.utilities import Utilities

        return Utilities.dictionary_to_distribution(record)

    @classmethod
    def preset_pair_names(cls):
        return sorted(cls._preset_pairs)

    @classmethod
    def preset_distributions(cls, name):
        try:
            return cls._preset_pairs[name]()
        except KeyError:
            raise SdtestConfigurationException(
                'Unknown pair preset {0!r}; expected one of {1}'.format(
                    name, ', '.join(cls.preset_pair_names())
                ),
                'pair',
            )

    @classmethod
    def preset_pair(cls, name, eta=0.5):
        """
        One of the named pairs used by the shipped configurations
        """
        (f1, g1) = cls.preset_distributions(name)

        return AlternativePair(f1, g1, eta)
