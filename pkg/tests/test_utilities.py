import glob
import io
import json
import math
import os

import pytest

from pysdtest.enumerations import Family
from pysdtest.exceptions import SdtestConfigurationException
from pysdtest.exceptions import SdtestParseException
from pysdtest.objects.continuous_distribution import ContinuousDistribution
from pysdtest.objects.power_estimate import PowerEstimate
from pysdtest.utilities import Utilities

CONFIG_DIRECTORY = os.path.join(os.path.dirname(os.path.abspath(__file__)), '..', 'configs')

CONFIG = """\
[pair:lognormal]
preset = lognormal

[pair:shifted]
f1 = {"family": "normal", "a": 0.0, "b": 1.0}
g1 = {"family": "normal", "a": -0.5, "b": 1.0}

[plan]
name = unit
alpha = 0.05
statistics = ks,tstar
replicates = 200
critical_replicates = 2000
seed = 17

[grid]
eta = 0.1:0.3:0.1
n_balanced = [20, 40]
eta_unbalanced = [0.25]
n_unbalanced = 60
"""


def write(path, text):
    path.write_text(text)

    return str(path)


class TestRecords:
    def test_round_trip_of_a_mixture(self):
        distribution = ContinuousDistribution.mixture(
            0.8, ContinuousDistribution.normal(), ContinuousDistribution.chi_square_1()
        )
        dictionary = Utilities.distribution_to_dictionary(distribution)

        assert dictionary == {
            'family': 'mixture',
            'weight': 0.8,
            'components': [
                {'family': 'normal', 'a': 0.0, 'b': 1.0},
                {'family': 'chi_square_1'},
            ],
        }
        assert Utilities.dictionary_to_distribution(dictionary).label() == distribution.label()

    def test_family_aliases(self):
        record = {'family': ' LogNormal ', 'a': 1, 'b': 2}
        distribution = Utilities.dictionary_to_distribution(record)

        assert distribution.family is Family.LOG_NORMAL

    @pytest.mark.parametrize('record', [[], {'a': 1.0}, {'family': 3}])
    def test_malformed(self, record):
        with pytest.raises(SdtestConfigurationException) as raised:
            Utilities.dictionary_to_distribution(record)

        assert raised.value.key == 'family'

    def test_mixture_needs_two_components(self):
        with pytest.raises(SdtestConfigurationException):
            Utilities.dictionary_to_distribution(
                {'family': 'mixture', 'weight': 0.5, 'components': [{'family': 'uniform'}]}
            )


class TestFormatValue:
    @pytest.mark.parametrize(
        ('value', 'text'),
        [
            (None, ''),
            (True, 'true'),
            (False, 'false'),
            (12, '12'),
            (0.1, '0.1'),
            (1.0 / 3.0, '0.333333333333333'),
            (math.inf, 'inf'),
            (-math.inf, '-inf'),
            ('ks', 'ks'),
        ],
    )
    def test_cell_text(self, value, text):
        assert Utilities.format_value(value) == text


class TestCsv:
    def test_provenance_line_and_rows(self):
        stream = io.StringIO()
        Utilities.write_csv_stream(
            stream,
            ['eta', 'power_ks'],
            [{'eta': 0.5, 'power_ks': 0.25}, {'eta': 0.6}],
            {'seed': 3, 'R': 100},
        )

        assert stream.getvalue() == '# R=100 seed=3\neta,power_ks\n0.5,0.25\n0.6,\n'

    def test_read_back(self, tmp_path):
        file_name = str(tmp_path / 'rows.csv')
        Utilities.write_csv(
            file_name, ['n', 'power'], [{'n': 20, 'power': 0.5}], {'seed': 0}
        )

        assert Utilities.read_csv(file_name) == (['n', 'power'], [[20.0, 0.5]])

    def test_object_to_row(self):
        estimate = PowerEstimate(0.5, 50, 100, 0.4, 0.6, 1.0, 0)
        row = Utilities.object_to_row(estimate, 'ks_')

        assert row['ks_power'] == 0.5
        assert row['ks_ci_low'] == 0.4
        assert row['ks_ci_high'] == 0.6

    def test_wrong_width(self, tmp_path):
        file_name = write(tmp_path / 'bad.csv', '# seed=0\na,b\n1,2\n3\n')

        with pytest.raises(SdtestParseException) as raised:
            Utilities.read_csv(file_name)

        assert raised.value.line_number == 4
        assert raised.value.file_name == file_name

    def test_non_numeric(self, tmp_path):
        file_name = write(tmp_path / 'bad.csv', 'a,b\n1,x\n')

        with pytest.raises(SdtestParseException) as raised:
            Utilities.read_csv(file_name)

        assert raised.value.line_number == 2

    def test_missing_header(self, tmp_path):
        with pytest.raises(SdtestParseException) as raised:
            Utilities.read_csv(write(tmp_path / 'empty.csv', '# only a comment\n\n'))

        assert raised.value.line_number == 0

    def test_read_values(self, tmp_path):
        file_name = write(tmp_path / 'values.txt', '0.5\n\n1e-3\n')

        assert Utilities.read_values(file_name) == [0.5, 0.001]

    def test_read_values_line_number(self, tmp_path):
        with pytest.raises(SdtestParseException) as raised:
            Utilities.read_values(write(tmp_path / 'values.txt', '0.5\nhalf\n'))

        assert raised.value.line_number == 2

    def test_read_values_missing_file(self, tmp_path):
        file_name = str(tmp_path / 'absent.txt')

        with pytest.raises(SdtestParseException) as raised:
            Utilities.read_values(file_name)

        assert raised.value.file_name == file_name
        assert raised.value.line_number == 0


class TestManifest:
    def test_sorted_json(self, tmp_path):
        file_name = str(tmp_path / 'manifest.json')
        Utilities.write_manifest(file_name, {'status': 'completed', 'seed': 1})

        with open(file_name) as input_file:
            text = input_file.read()

        assert json.loads(text) == {'seed': 1, 'status': 'completed'}
        assert text.index('seed') < text.index('status')


class TestResolveThreads:
    def test_flag_wins(self, monkeypatch):
        monkeypatch.setenv(Utilities.THREADS_ENVIRONMENT_VARIABLE, '8')

        assert Utilities.resolve_threads(2) == 2

    def test_environment(self, monkeypatch):
        monkeypatch.setenv(Utilities.THREADS_ENVIRONMENT_VARIABLE, '8')

        assert Utilities.resolve_threads() == 8

    def test_default(self, monkeypatch):
        monkeypatch.delenv(Utilities.THREADS_ENVIRONMENT_VARIABLE, raising=False)

        assert Utilities.resolve_threads() == 1

    @pytest.mark.parametrize('value', ['0', 'four', '-2'])
    def test_invalid(self, monkeypatch, value):
        monkeypatch.setenv(Utilities.THREADS_ENVIRONMENT_VARIABLE, value)

        with pytest.raises(SdtestConfigurationException):
            Utilities.resolve_threads()


class TestParseGrid:
    def test_inclusive_range(self):
        assert Utilities.parse_grid('0.1:0.5:0.1') == [0.1, 0.2, 0.3, 0.4, 0.5]

    def test_full_eta_grid(self):
        grid = Utilities.parse_grid('0.01:0.99:0.01')

        assert len(grid) == 99
        assert grid[-1] == 0.99

    def test_integer_range(self):
        assert Utilities.parse_grid('100:400:100', 'n', int) == [100, 200, 300, 400]

    def test_json_list(self):
        assert Utilities.parse_grid('[20, 40]', 'n', int) == [20, 40]

    def test_scalar(self):
        assert Utilities.parse_grid('0.25') == [0.25]

    @pytest.mark.parametrize('text', ['0.5:0.1:0.1', '0:1:0', 'a:b:c', '[]', 'nope'])
    def test_invalid(self, text):
        with pytest.raises(SdtestConfigurationException) as raised:
            Utilities.parse_grid(text, 'eta')

        assert raised.value.key == 'eta'


class TestLoadConfig:
    def test_sections(self, tmp_path):
        config = Utilities.load_config(write(tmp_path / 'unit.ini', CONFIG))

        assert config.name == 'unit'
        assert [pair[0] for pair in config.pairs] == ['lognormal', 'shifted']
        assert config.pairs[1][2].a == -0.5
        assert config.eta_grid == [0.1, 0.2, 0.3]
        assert config.n_balanced == [20, 40]
        assert config.eta_unbalanced == [0.25]
        assert config.n_unbalanced == 60
        assert [statistic.name for statistic in config.statistics] == ['ks', 'tstar']
        assert (config.replicates, config.critical_replicates, config.seed) == (200, 2000, 17)
        assert config.alpha == 0.05
        assert config.alpha_balanced is None
        assert config.output_directory == 'results'

    def test_overrides(self, tmp_path):
        config = Utilities.load_config(
            write(tmp_path / 'unit.ini', CONFIG), output_directory='elsewhere', seed=5
        )

        assert config.output_directory == 'elsewhere'
        assert config.seed == 5

    def test_missing_section(self, tmp_path):
        with pytest.raises(SdtestConfigurationException) as raised:
            Utilities.load_config(write(tmp_path / 'unit.ini', '[plan]\nalpha = 0.05\n'))

        assert raised.value.key == 'grid'

    def test_not_ini(self, tmp_path):
        with pytest.raises(SdtestParseException):
            Utilities.load_config(write(tmp_path / 'unit.ini', 'alpha = 0.05\n'))

    def test_bad_json_record(self, tmp_path):
        text = CONFIG.replace('"a": -0.5', '"a": -0.5,,')

        with pytest.raises(SdtestParseException):
            Utilities.load_config(write(tmp_path / 'unit.ini', text))

    def test_bad_value(self, tmp_path):
        text = CONFIG.replace('replicates = 200', 'replicates = many')

        with pytest.raises(SdtestConfigurationException):
            Utilities.load_config(write(tmp_path / 'unit.ini', text))

    def test_no_pairs(self, tmp_path):
        text = CONFIG.split('[plan]')[1]

        with pytest.raises(SdtestConfigurationException):
            Utilities.load_config(write(tmp_path / 'unit.ini', '[plan]' + text))

    @pytest.mark.parametrize(
        'file_name',
        sorted(glob.glob(os.path.join(CONFIG_DIRECTORY, '*.ini'))),
        ids=os.path.basename,
    )
    def test_shipped_configs(self, file_name):
        config = Utilities.load_config(file_name)

        assert len(config.pairs) == 2
        assert len(config.eta_grid) == 99

        alphas = [config.alpha] + (config.alpha_balanced or [])

        assert all(config.critical_replicates * alpha >= 20 for alpha in alphas)
