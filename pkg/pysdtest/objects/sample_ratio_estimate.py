"""
This module is home to the SampleRatioEstimate class
"""
from pysdtest.sdtest_object import SdtestObject


class SampleRatioEstimate(SdtestObject):
    """
    Empirical sample-size ratio M / N: the smallest benchmark pooled size
    M whose power reaches the challenger's power at N.

    ratio is math.inf (and unbounded True) when no M up to 64 N
    qualifies. saturated is set when the challenger's power is
    indistinguishable from 1, degenerate when it is indistinguishable
    from the level alpha or below; in both cases the ratio carries no
    information, and a degenerate estimate has ratio math.nan.
    """

    __slots__ = [
        '_ratio',
        '_size',
        '_benchmark_size',
        '_challenger_power',
        '_benchmark_power',
        '_half_width',
        '_saturated',
        '_unbounded',
        '_degenerate',
    ]

    attribute_name_map = {
        'ratio': 'ratio',
        'size': 'n_challenger',
        'benchmark_size': 'm_benchmark',
        'challenger_power': 'challenger_power',
        'benchmark_power': 'benchmark_power',
        'half_width': 'half_width',
        'saturated': 'saturated',
        'unbounded': 'unbounded',
        'degenerate': 'degenerate',
    }

    attribute_type_map = {
        'ratio': 'float',
        'size': 'int',
        'benchmark_size': 'int',
        'challenger_power': 'PowerEstimate',
        'benchmark_power': 'PowerEstimate',
        'half_width': 'float',
        'saturated': 'bool',
        'unbounded': 'bool',
        'degenerate': 'bool',
    }

    def __init__(
        self,
        ratio,
        size,
        benchmark_size,
        challenger_power,
        benchmark_power,
        half_width,
        saturated,
        unbounded,
        degenerate=False,
    ):
        self._ratio = ratio
        self._size = size
        self._benchmark_size = benchmark_size
        self._challenger_power = challenger_power
        self._benchmark_power = benchmark_power
        self._half_width = half_width
        self._saturated = saturated
        self._unbounded = unbounded
        self._degenerate = degenerate

    @property
    def ratio(self):
        """
        Gets the ratio attribute of this SampleRatioEstimate instance.

        :rtype: float
        """
        return self._ratio

    @property
    def size(self):
        """
        Gets the size attribute of this SampleRatioEstimate instance.

        :return: The challenger's pooled size N
        :rtype: int
        """
        return self._size

    @property
    def benchmark_size(self):
        """
        Gets the benchmark_size attribute of this SampleRatioEstimate
        instance.

        :return: The benchmark's pooled size M; equal to N when degenerate
        :rtype: int
        """
        return self._benchmark_size

    @property
    def challenger_power(self):
        """
        Gets the challenger_power attribute of this SampleRatioEstimate
        instance.

        :rtype: PowerEstimate
        """
        return self._challenger_power

    @property
    def benchmark_power(self):
        """
        Gets the benchmark_power attribute of this SampleRatioEstimate
        instance.

        :rtype: PowerEstimate
        """
        return self._benchmark_power

    @property
    def half_width(self):
        """
        Larger of the two 95% interval half-widths of the compared
        powers.

        :rtype: float
        """
        return self._half_width

    @property
    def saturated(self):
        """
        Gets the saturated attribute of this SampleRatioEstimate instance.

        :rtype: bool
        """
        return self._saturated

    @property
    def unbounded(self):
        """
        Gets the unbounded attribute of this SampleRatioEstimate instance.

        :rtype: bool
        """
        return self._unbounded

    @property
    def degenerate(self):
        """
        Gets the degenerate attribute of this SampleRatioEstimate instance.

        :rtype: bool
        """
        return self._degenerate
