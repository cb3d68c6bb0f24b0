import configparser
import csv
import json
import logging
import math
import numbers
import os
import subprocess
import sys
import traceback

import six

from pysdtest.alternatives import Alternatives
from pysdtest.enumerations import Family
from pysdtest.exceptions import SdtestConfigurationException
from pysdtest.exceptions import SdtestParseException
from pysdtest.objects.continuous_distribution import ContinuousDistribution
from pysdtest.objects.experiment_config import ExperimentConfig
from pysdtest.objects.statistic_kind import StatisticKind

logger = logging.getLogger(__name__)


class Utilities(object):
    __slots__ = []

    THREADS_ENVIRONMENT_VARIABLE = 'SDTEST_THREADS'

    _family_name_map = {
        'chi2': Family.CHI_SQUARE_1,
        'chi_square_1': Family.CHI_SQUARE_1,
        'laplace': Family.LAPLACE,
        'lognormal': Family.LOG_NORMAL,
        'log_normal': Family.LOG_NORMAL,
        'mixture': Family.MIXTURE,
        'mu': Family.MU,
        'normal': Family.NORMAL,
        'pareto': Family.SINGH_MADDALA,
        'singh_maddala': Family.SINGH_MADDALA,
        'uniform': Family.UNIFORM_01,
        'uniform_01': Family.UNIFORM_01,
    }

    @classmethod
    def dictionary_to_distribution(cls, record):
        """
        Build a ContinuousDistribution from a tagged record, e.g.
        {"family": "laplace", "a": 0.0, "b": 1.0}. Mixtures nest their
        components; pareto expands to singh_maddala(a, 1, 1).

        :raises SdtestConfigurationException: If the record is malformed
        """
        if not isinstance(record, dict):
            raise SdtestConfigurationException(
                'A distribution record must be an object, got {0!r}'.format(record),
                'family',
            )

        name = record.get('family')

        if not isinstance(name, six.string_types):
            raise SdtestConfigurationException(
                'A distribution record needs a family name: {0!r}'.format(record),
                'family',
            )

        name = name.strip().lower()

        try:
            family = cls._family_name_map[name]
        except KeyError:
            raise SdtestConfigurationException(
                'Unknown family {0!r}'.format(name), 'family'
            )

        unknown = set(record) - {'family', 'a', 'b', 'c', 'weight', 'components'}
        if unknown:
            raise SdtestConfigurationException(
                'Unknown keys {0} in {1!r}'.format(sorted(unknown), record),
                sorted(unknown)[0],
            )

        if name == 'pareto':
            return ContinuousDistribution.pareto(record.get('a'))

        if family is Family.MIXTURE:
            components = record.get('components')

            if not isinstance(components, list) or len(components) != 2:
                raise SdtestConfigurationException(
                    'A mixture record needs two components', 'components'
                )

            return ContinuousDistribution.mixture(
                record.get('weight'),
                cls.dictionary_to_distribution(components[0]),
                cls.dictionary_to_distribution(components[1]),
            )

        return ContinuousDistribution(
            family, a=record.get('a'), b=record.get('b'), c=record.get('c')
        )

    @classmethod
    def distribution_to_dictionary(cls, distribution):
        dictionary = {'family': distribution.family.value}

        if distribution.family is Family.MIXTURE:
            dictionary['weight'] = distribution.weight
            dictionary['components'] = [
                cls.distribution_to_dictionary(component)
                for component in distribution.components
            ]
        else:
            for attribute_name in ('a', 'b', 'c'):
                attribute_value = getattr(distribution, attribute_name)

                if attribute_value is not None:
                    dictionary[attribute_name] = attribute_value

        return dictionary

    @classmethod
    def format_value(cls, value):
        """
        CSV cell text; floats keep 15 significant digits
        """
        if value is None:
            return ''
        if isinstance(value, bool):
            return 'true' if value else 'false'
        if isinstance(value, numbers.Integral):
            return '{0:d}'.format(value)
        if isinstance(value, numbers.Real):
            if math.isinf(value):
                return 'inf' if value > 0 else '-inf'
            return '{0:.15g}'.format(value)

        return '{0!s}'.format(value)

    @classmethod
    def object_to_row(cls, object_, prefix=''):
        """
        Flatten an SdtestObject into {column: value} using its
        attribute_name_map
        """
        row = {}

        for attribute_name in object_.slots():
            column = '{0}{1}'.format(
                prefix, type(object_).attribute_name_map[attribute_name[1:]]
            )
            row[column] = getattr(object_, attribute_name)

        return row

    @classmethod
    def write_csv_stream(cls, stream, header, rows, provenance=None):
        """
        Write rows (dictionaries keyed by header) to an open text stream.
        A leading '#' line carries the provenance key/value pairs.
        """
        if provenance:
            stream.write(
                '# {0}\n'.format(
                    ' '.join(
                        '{0}={1}'.format(key, provenance[key])
                        for key in sorted(provenance)
                    )
                )
            )

        writer = csv.writer(stream, lineterminator='\n')
        writer.writerow(header)

        for row in rows:
            writer.writerow([cls.format_value(row.get(column)) for column in header])

    @classmethod
    def write_csv(cls, file_name, header, rows, provenance=None):
        with open(file_name, 'w', newline='') as output_file:
            cls.write_csv_stream(output_file, header, rows, provenance)

        logger.info('Wrote %d rows to %s', len(rows), file_name)

    @classmethod
    def read_csv(cls, file_name):
        """
        Read a CSV written by write_csv

        :return: (header, rows) with every data cell converted to float
        (empty cells to None)
        :raises SdtestParseException: If the file has no header, a row of
        the wrong width or a non-numeric cell
        """
        header = None
        rows = []

        with open(file_name, 'r', newline='') as input_file:
            for (line_number, line) in enumerate(input_file, start=1):
                if not line.strip() or line.startswith('#'):
                    continue

                cells = next(csv.reader([line]))

                if header is None:
                    header = cells
                    continue

                if len(cells) != len(header):
                    logger.error(
                        'Malformed row\n'
                        '[File]\n'
                        '======\n%s\n\n'
                        '[Line]\n'
                        '======\n%d',
                        file_name,
                        line_number,
                    )

                    raise SdtestParseException(
                        '{0}:{1}: expected {2} cells, got {3}'.format(
                            file_name, line_number, len(header), len(cells)
                        ),
                        file_name,
                        line_number,
                    )

                try:
                    rows.append(
                        [float(cell) if cell != '' else None for cell in cells]
                    )
                except ValueError:
                    (type_, value_, traceback_) = sys.exc_info()
                    logger.error(
                        '\n'.join(traceback.format_exception(type_, value_, traceback_))
                    )

                    six.reraise(
                        SdtestParseException,
                        SdtestParseException(
                            '{0}:{1}: {2}'.format(file_name, line_number, value_),
                            file_name,
                            line_number,
                        ),
                        traceback_,
                    )

        if header is None:
            raise SdtestParseException(
                '{0}: missing header row'.format(file_name), file_name, 0
            )

        return (header, rows)

    @classmethod
    def read_values(cls, file_name):
        """
        One real per line; blank lines are skipped

        :raises SdtestParseException: If the file cannot be read or a line
        is not a real number
        """
        try:
            with open(file_name, 'r') as input_file:
                lines = input_file.readlines()
        except OSError:
            (type_, value_, traceback_) = sys.exc_info()

            six.reraise(
                SdtestParseException,
                SdtestParseException(
                    '{0}: cannot read values: {1!s}'.format(file_name, value_), file_name, 0
                ),
                traceback_,
            )

        values = []

        for (line_number, line) in enumerate(lines, start=1):
            if not line.strip():
                continue

            try:
                values.append(float(line))
            except ValueError:
                (type_, value_, traceback_) = sys.exc_info()

                six.reraise(
                    SdtestParseException,
                    SdtestParseException(
                        '{0}:{1}: not a real number: {2!r}'.format(
                            file_name, line_number, line.strip()
                        ),
                        file_name,
                        line_number,
                    ),
                    traceback_,
                )

        return values

    @classmethod
    def write_manifest(cls, file_name, manifest):
        with open(file_name, 'w') as output_file:
            json.dump(manifest, output_file, sort_keys=True, indent=2)
            output_file.write('\n')

    @classmethod
    def version(cls):
        """
        git describe of the source tree, or the package version outside a
        git checkout
        """
        from pysdtest import __version__

        try:
            described = subprocess.run(
                ['git', 'describe', '--tags', '--always', '--dirty'],
                cwd=os.path.dirname(os.path.abspath(__file__)),
                stdout=subprocess.PIPE,
                stderr=subprocess.DEVNULL,
                check=True,
                universal_newlines=True,
            ).stdout.strip()
        except (OSError, subprocess.CalledProcessError):
            described = ''

        return described or __version__

    @classmethod
    def resolve_threads(cls, threads=None):
        """
        The --threads flag when given, then SDTEST_THREADS, then 1

        :raises SdtestConfigurationException: If the value is not a
        positive integer
        """
        if threads is None:
            threads = os.environ.get(cls.THREADS_ENVIRONMENT_VARIABLE)

        if threads is None or threads == '':
            return 1

        try:
            resolved = int(threads)
        except ValueError:
            raise SdtestConfigurationException(
                'threads must be a positive integer, got {0!r}'.format(threads),
                'threads',
            )

        if resolved < 1:
            raise SdtestConfigurationException(
                'threads must be a positive integer, got {0!r}'.format(threads),
                'threads',
            )

        return resolved

    @classmethod
    def parse_grid(cls, text, key='grid', cast=float):
        """
        Parse "start:stop:step" (stop included) or a JSON list
        """
        text = text.strip()

        try:
            if text.startswith('['):
                values = [cast(value) for value in json.loads(text)]
            elif ':' in text:
                (start, stop, step) = [float(part) for part in text.split(':')]

                if step <= 0.0 or stop < start:
                    raise ValueError('empty range {0!r}'.format(text))

                count = int(math.floor(round((stop - start) / step, 9))) + 1
                values = [cast(round(start + i * step, 10)) for i in range(count)]
            else:
                values = [cast(json.loads(text))]
        except ValueError:
            (type_, value_, traceback_) = sys.exc_info()
            logger.error('Invalid grid for %s: %r', key, text)

            six.reraise(
                SdtestConfigurationException,
                SdtestConfigurationException(
                    'Invalid grid for {0}: {1!r} ({2})'.format(key, text, value_), key
                ),
                traceback_,
            )

        if not values:
            raise SdtestConfigurationException('{0} must not be empty'.format(key), key)

        return values

    @classmethod
    def _json_value(cls, parser, section, key, file_name):
        text = parser.get(section, key)

        try:
            return json.loads(text)
        except ValueError:
            (type_, value_, traceback_) = sys.exc_info()

            six.reraise(
                SdtestParseException,
                SdtestParseException(
                    '{0}: [{1}] {2}: {3}'.format(file_name, section, key, value_),
                    file_name,
                    getattr(value_, 'lineno', 0),
                ),
                traceback_,
            )

    @classmethod
    def load_config(cls, file_name, output_directory=None, seed=None):
        """
        Read an experiment INI file with [pair:<name>], [plan] and [grid]
        sections

        :param output_directory: Overrides the configured directory
        :param seed: Overrides [plan] seed
        :rtype: ExperimentConfig
        :raises SdtestParseException: If the file is not valid INI/JSON
        :raises SdtestConfigurationException: If a value is invalid
        """
        parser = configparser.ConfigParser(interpolation=None)

        try:
            with open(file_name, 'r') as input_file:
                parser.read_file(input_file)
        except (OSError, configparser.Error):
            (type_, value_, traceback_) = sys.exc_info()
            logger.error(
                '\n'.join(traceback.format_exception(type_, value_, traceback_))
            )

            six.reraise(
                SdtestParseException,
                SdtestParseException(
                    '{0}: {1}'.format(file_name, value_),
                    file_name,
                    getattr(value_, 'lineno', 0),
                ),
                traceback_,
            )

        for section in ('plan', 'grid'):
            if not parser.has_section(section):
                raise SdtestConfigurationException(
                    '{0}: missing [{1}] section'.format(file_name, section), section
                )

        pairs = []

        for section in parser.sections():
            if not section.startswith('pair:'):
                continue

            name = section[len('pair:'):].strip()

            if parser.has_option(section, 'preset'):
                (f1, g1) = Alternatives.preset_distributions(
                    parser.get(section, 'preset').strip()
                )
            else:
                for key in ('f1', 'g1'):
                    if not parser.has_option(section, key):
                        raise SdtestConfigurationException(
                            '{0}: [{1}] needs {2}'.format(file_name, section, key), key
                        )

                f1 = cls.dictionary_to_distribution(
                    cls._json_value(parser, section, 'f1', file_name)
                )
                g1 = cls.dictionary_to_distribution(
                    cls._json_value(parser, section, 'g1', file_name)
                )

            pairs.append((name, f1, g1))

        plan = parser['plan']
        grid = parser['grid']

        try:
            statistics = [
                StatisticKind.from_name(name)
                for name in plan.get('statistics', 'ks,tstar,tcirc').split(',')
                if name.strip()
            ]
            alpha_balanced = (
                cls.parse_grid(grid['alpha_balanced'], 'alpha_balanced')
                if 'alpha_balanced' in grid
                else None
            )

            return ExperimentConfig(
                name=plan.get(
                    'name', os.path.splitext(os.path.basename(file_name))[0]
                ),
                pairs=pairs,
                eta_grid=cls.parse_grid(grid.get('eta', '0.01:0.99:0.01'), 'eta'),
                n_balanced=cls.parse_grid(grid.get('n_balanced', '[]'), 'n_balanced', int)
                if grid.get('n_balanced', '').strip()
                else [],
                alpha=plan.getfloat('alpha', 0.01),
                eta_unbalanced=cls.parse_grid(
                    grid.get('eta_unbalanced', '0.1:0.9:0.1'), 'eta_unbalanced'
                ),
                n_unbalanced=grid.getint('n_unbalanced', 800),
                statistics=statistics,
                replicates=plan.getint('replicates', 5000),
                critical_replicates=plan.getint('critical_replicates', 100000),
                seed=seed if seed is not None else plan.getint('seed', 0),
                output_directory=output_directory
                or plan.get('output_directory', 'results'),
                alpha_balanced=alpha_balanced,
            )
        except ValueError:
            (type_, value_, traceback_) = sys.exc_info()

            six.reraise(
                SdtestConfigurationException,
                SdtestConfigurationException(
                    '{0}: {1}'.format(file_name, value_), 'plan'
                ),
                traceback_,
            )
