"""
This module is home to the Plots class
"""
import logging
import os

import matplotlib

matplotlib.use('Agg')

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from pysdtest.exceptions import SdtestParseException  # noqa: E402
from pysdtest.utilities import Utilities  # noqa: E402

logger = logging.getLogger(__name__)


class Plots(object):
    """
    Static SVG line plots of the CSV files written by run_experiment.
    The first column is the abscissa; power columns become one line per
    statistic with their Wilson intervals as error bars; an efficiency
    CSV plots e_TV and argmax A* against eta.
    """

    __slots__ = []

    POWER_PREFIX = 'power_'
    LOW_PREFIX = 'ci_low_'
    HIGH_PREFIX = 'ci_high_'
    HASH_SALT = 'pysdtest'
    FIGURE_SIZE = (6.4, 4.8)

    _axis_labels = {
        'N': 'N',
        'alpha': r'$\alpha$',
        'eta': r'$\eta$',
        'e_tv': r'$e_{TV}$',
        'argmax_astar': r'argmax $A^*$',
    }

    @classmethod
    def _label(cls, column):
        return cls._axis_labels.get(column, column)

    @classmethod
    def _plot_powers(cls, axes, header, data):
        x = data[:, 0]

        for (index, column) in enumerate(header):
            if not column.startswith(cls.POWER_PREFIX):
                continue

            name = column[len(cls.POWER_PREFIX):]
            y = data[:, index]
            yerr = None

            if (
                cls.LOW_PREFIX + name in header
                and cls.HIGH_PREFIX + name in header
            ):
                low = data[:, header.index(cls.LOW_PREFIX + name)]
                high = data[:, header.index(cls.HIGH_PREFIX + name)]
                yerr = np.vstack([np.maximum(y - low, 0.0), np.maximum(high - y, 0.0)])

            axes.errorbar(x, y, yerr=yerr, marker='o', markersize=3, capsize=2, label=name)

        axes.set_xlabel(cls._label(header[0]))
        axes.set_ylabel('power')
        axes.set_ylim(-0.02, 1.02)
        axes.legend(loc='best')

    @classmethod
    def _plot_efficiency(cls, figure, header, data):
        x = data[:, 0]
        columns = [column for column in ('e_tv', 'argmax_astar') if column in header]
        axes = figure.subplots(len(columns), 1, sharex=True, squeeze=False)[:, 0]

        for (axis, column) in zip(axes, columns):
            axis.plot(x, data[:, header.index(column)], marker='o', markersize=3, label=column)
            axis.set_ylabel(cls._label(column))
            axis.legend(loc='best')

        axes[-1].set_xlabel(cls._label(header[0]))

    @classmethod
    def render_plot(cls, file_name, output_directory=None):
        """
        Render one CSV file as SVG

        :param file_name: A CSV written by run_experiment
        :param output_directory: Where to write; next to the CSV by default
        :return: The SVG file name
        :raises SdtestParseException: If the CSV is malformed or has no
        data rows; nothing is written then
        """
        (header, rows) = Utilities.read_csv(file_name)

        if not rows:
            logger.error('No data rows in %s', file_name)

            raise SdtestParseException(
                '{0}: empty data section'.format(file_name), file_name, 2
            )

        data = np.array(
            [[np.nan if cell is None else cell for cell in row] for row in rows],
            dtype=np.float64,
        )

        output_directory = output_directory or os.path.dirname(file_name) or '.'
        svg_name = os.path.join(
            output_directory,
            '{0}.svg'.format(os.path.splitext(os.path.basename(file_name))[0]),
        )

        with matplotlib.rc_context(
            {'svg.hashsalt': cls.HASH_SALT, 'svg.fonttype': 'none'}
        ):
            figure = plt.figure(figsize=cls.FIGURE_SIZE)

            try:
                if any(column.startswith(cls.POWER_PREFIX) for column in header):
                    cls._plot_powers(figure.subplots(), header, data)
                elif 'e_tv' in header:
                    cls._plot_efficiency(figure, header, data)
                else:
                    raise SdtestParseException(
                        '{0}: no power or efficiency columns in {1}'.format(
                            file_name, header
                        ),
                        file_name,
                        1,
                    )

                figure.suptitle(os.path.splitext(os.path.basename(file_name))[0])
                figure.savefig(svg_name, format='svg', metadata={'Date': None})
            finally:
                plt.close(figure)

        logger.info('Rendered %s', svg_name)

        return svg_name

    @classmethod
    def render_plots(cls, file_names, output_directory=None):
        """
        Render every CSV file as SVG

        :rtype: list
        """
        return [cls.render_plot(file_name, output_directory) for file_name in file_names]
