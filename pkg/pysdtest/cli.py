"""
Command-line front end: the sdtest subcommands and the orchestration of
figure-style experiments
"""
import argparse
import logging
import os
import sys
import traceback
from collections import OrderedDict
from datetime import datetime

import numpy as np
import pytz
import six

from pysdtest.alternatives import Alternatives
from pysdtest.efficiency import Efficiency
from pysdtest.enumerations import ExperimentKind
from pysdtest.enumerations import TiePolicy
from pysdtest.exceptions import SdtestConfigurationException
from pysdtest.exceptions import SdtestException
from pysdtest.exceptions import SdtestSimulationException
from pysdtest.montecarlo import MonteCarloService
from pysdtest.objects.alternative_pair import AlternativePair
from pysdtest.objects.contamination_path import ContaminationPath
from pysdtest.objects.efficiency_report import EfficiencyReport
from pysdtest.objects.experiment_config import ExperimentConfig
from pysdtest.objects.simulation_plan import SimulationPlan
from pysdtest.objects.statistic_kind import StatisticKind
from pysdtest.objects.two_sample import TwoSample
from pysdtest.oracle import Oracle
from pysdtest.plots import Plots
from pysdtest.statistics import Statistics
from pysdtest.utilities import Utilities

logger = logging.getLogger(__name__)

SCALED_KS_NAME = 'ks_e'
MANIFEST_FILE_NAME = 'manifest.json'

EXIT_SUCCESS = 0
EXIT_ABORTED = 1
EXIT_USAGE = 2


def power_header(abscissa, statistic_names):
    """
    Column names of a balanced or unbalanced power CSV
    """
    header = [abscissa, 'm', 'n', 'e_tv', 'm_e', 'n_e']

    for name in list(statistic_names) + [SCALED_KS_NAME]:
        header.extend(
            ['power_{0}'.format(name), 'ci_low_{0}'.format(name), 'ci_high_{0}'.format(name)]
        )

    return header


def _power_rows(service, config, pair, m, n, alphas, abscissa, abscissa_values):
    """
    One row per alpha at fixed (m, n): every statistic of config on common
    random numbers, plus V at the efficiency-scaled sizes
    """
    e_tv = Efficiency.efficiency_tv(pair).e_tv
    (m_e, n_e) = service.scaled_sizes(m, n, e_tv)
    statistics = config.statistics
    ks = StatisticKind.ks()

    null_plan = SimulationPlan(statistics[0], m, n, config.critical_replicates, config.seed)
    table = service.critical_values(null_plan, alphas, statistics)
    simulated = service.simulate_many(
        SimulationPlan(statistics[0], m, n, config.replicates, config.seed, pair), statistics
    )

    scaled_table = service.critical_values(
        SimulationPlan(ks, m_e, n_e, config.critical_replicates, config.seed), alphas
    )
    scaled_values = service.simulate(
        SimulationPlan(ks, m_e, n_e, config.replicates, config.seed, pair)
    )

    rows = []

    for (alpha, abscissa_value) in zip(alphas, abscissa_values):
        row = {abscissa: abscissa_value, 'm': m, 'n': n, 'e_tv': e_tv, 'm_e': m_e, 'n_e': n_e}
        cells = [
            (name, values, table.lookup(name, m, n, alpha).critical_value)
            for (name, values) in simulated.items()
        ]
        cells.append(
            (
                SCALED_KS_NAME,
                scaled_values,
                scaled_table.lookup(ks.name, m_e, n_e, alpha).critical_value,
            )
        )

        for (name, values, critical) in cells:
            estimate = service.estimate(
                int(np.count_nonzero(values > critical)),
                config.replicates,
                critical,
                config.seed,
            )
            row['power_{0}'.format(name)] = estimate.estimate
            row['ci_low_{0}'.format(name)] = estimate.interval_low
            row['ci_high_{0}'.format(name)] = estimate.interval_high

        rows.append(row)

    return rows


def _write_manifest(output_directory, manifest, completed_cells, status, error=None):
    manifest = dict(manifest)
    manifest['completed_cells'] = list(completed_cells)
    manifest['status'] = status
    manifest['finished'] = datetime.now(pytz.utc).isoformat()

    if error is not None:
        manifest['error'] = error

    Utilities.write_manifest(os.path.join(output_directory, MANIFEST_FILE_NAME), manifest)


def run_experiment(config, service, plot=False, flags=None):
    """
    Run a figure-style experiment. Per pair it writes
    efficiency_<pair>.csv over eta, balanced_<pair>.csv over N (or over
    alpha when alpha_balanced is set) and unbalanced_<pair>.csv over eta at
    n_unbalanced, then manifest.json.

    :param config: The experiment configuration
    :param service: The MonteCarloService running the simulations
    :param plot: Also render every CSV as SVG
    :param flags: Command-line flags echoed into the manifest
    :return: Written file names
    :rtype: list
    :raises SdtestSimulationException: If a cell fails; the manifest then
    lists the completed cells
    """
    if not isinstance(config, ExperimentConfig):
        raise TypeError('config must be an instance of {0}'.format(ExperimentConfig))
    if not isinstance(service, MonteCarloService):
        raise TypeError('service must be an instance of {0}'.format(MonteCarloService))

    output_directory = config.output_directory

    try:
        os.makedirs(output_directory, exist_ok=True)
    except OSError:
        (type_, value_, traceback_) = sys.exc_info()

        six.reraise(
            SdtestConfigurationException,
            SdtestConfigurationException(
                'Output directory {0} is not writable: {1}'.format(output_directory, value_),
                'output_directory',
            ),
            traceback_,
        )

    if not os.access(output_directory, os.W_OK):
        raise SdtestConfigurationException(
            'Output directory {0} is not writable'.format(output_directory),
            'output_directory',
        )

    version = Utilities.version()
    manifest = OrderedDict(
        [
            ('name', config.name),
            ('version', version),
            ('seed', config.seed),
            ('replicates', config.replicates),
            ('critical_replicates', config.critical_replicates),
            ('threads', service.threads),
            ('flags', flags or {}),
            ('started', datetime.now(pytz.utc).isoformat()),
        ]
    )
    provenance = {'version': version, 'seed': config.seed, 'replicates': config.replicates}
    statistic_names = [kind.name for kind in config.statistics]
    completed_cells = []
    file_names = []

    logger.debug('Experiment\n[Config]\n========\n%s', config.pretty_format())

    try:
        for (pair_name, f1, g1) in config.pairs:
            base = AlternativePair(f1, g1, 0.5)

            # efficiency curve
            reports = Efficiency.efficiency_curve(base, config.eta_grid, service.threads)
            file_name = os.path.join(output_directory, 'efficiency_{0}.csv'.format(pair_name))
            Utilities.write_csv(
                file_name,
                EfficiencyReport.csv_columns,
                [Utilities.object_to_row(report) for report in reports],
                provenance,
            )
            file_names.append(file_name)
            completed_cells.append('{0}:{1}'.format(ExperimentKind.EFFICIENCY.value, pair_name))

            # balanced partitions, over N or over alpha
            rows = []

            if config.alpha_balanced:
                size = config.n_balanced[0]
                (m, n) = Efficiency.sample_sizes(0.5, size)
                rows.extend(
                    _power_rows(
                        service,
                        config,
                        base,
                        m,
                        n,
                        config.alpha_balanced,
                        'alpha',
                        config.alpha_balanced,
                    )
                )
                completed_cells.append(
                    '{0}:{1}:N={2}'.format(ExperimentKind.BALANCED.value, pair_name, size)
                )
                header = power_header('alpha', statistic_names)
            else:
                for size in config.n_balanced:
                    logger.info('Balanced cell %s N=%d', pair_name, size)

                    (m, n) = Efficiency.sample_sizes(0.5, size)
                    rows.extend(
                        _power_rows(service, config, base, m, n, [config.alpha], 'N', [size])
                    )
                    completed_cells.append(
                        '{0}:{1}:N={2}'.format(ExperimentKind.BALANCED.value, pair_name, size)
                    )
                header = power_header('N', statistic_names)

            file_name = os.path.join(output_directory, 'balanced_{0}.csv'.format(pair_name))
            Utilities.write_csv(file_name, header, rows, provenance)
            file_names.append(file_name)

            # unbalanced partitions at fixed N
            rows = []

            for eta in config.eta_unbalanced:
                logger.info('Unbalanced cell %s eta=%r', pair_name, eta)

                (m, n) = Efficiency.sample_sizes(eta, config.n_unbalanced)
                rows.extend(
                    _power_rows(
                        service,
                        config,
                        base.with_eta(eta),
                        m,
                        n,
                        [config.alpha],
                        'eta',
                        [eta],
                    )
                )
                completed_cells.append(
                    '{0}:{1}:eta={2}'.format(ExperimentKind.UNBALANCED.value, pair_name, eta)
                )

            file_name = os.path.join(output_directory, 'unbalanced_{0}.csv'.format(pair_name))
            Utilities.write_csv(file_name, power_header('eta', statistic_names), rows, provenance)
            file_names.append(file_name)

        if plot:
            file_names.extend(
                Plots.render_plots(
                    [name for name in file_names if name.endswith('.csv')], output_directory
                )
            )
    except Exception:
        (type_, value_, traceback_) = sys.exc_info()
        logger.error('\n'.join(traceback.format_exception(type_, value_, traceback_)))

        _write_manifest(
            output_directory, manifest, completed_cells, 'aborted', '{0!s}'.format(value_)
        )

        six.reraise(
            SdtestSimulationException,
            SdtestSimulationException(
                'Experiment {0} aborted after {1} cells: {2!s}'.format(
                    config.name, len(completed_cells), value_
                ),
                list(completed_cells),
            ),
            traceback_,
        )

    _write_manifest(output_directory, manifest, completed_cells, 'completed')

    return file_names


def _seed(args):
    return 0 if args.seed is None else args.seed


def _provenance(args, replicates=None):
    provenance = {'version': Utilities.version(), 'seed': _seed(args)}

    if replicates is not None:
        provenance['replicates'] = replicates

    return provenance


def _emit(args, command, header, rows, provenance):
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        Utilities.write_csv(
            os.path.join(args.out, '{0}.csv'.format(command)), header, rows, provenance
        )
    else:
        Utilities.write_csv_stream(sys.stdout, header, rows, provenance)


def _config(args):
    if not args.config:
        return None

    return Utilities.load_config(args.config, args.out, args.seed)


def _pair(args, eta):
    """
    A preset pair name, or the name of a [pair:<name>] section of --config
    """
    config = _config(args)

    if config is not None:
        for (name, f1, g1) in config.pairs:
            if name == args.pair:
                return AlternativePair(f1, g1, eta)

    return Alternatives.preset_pair(args.pair, eta)


def _path(args, pair):
    if args.q is not None:
        return ContaminationPath(pair, q=args.q)

    return ContaminationPath(pair, theta=args.theta)


def _service(args):
    return MonteCarloService(threads=Utilities.resolve_threads(args.threads))


def _command_stat(args):
    sample = TwoSample(Utilities.read_values(args.x), Utilities.read_values(args.y))
    tie_policy = TiePolicy(args.tie_policy)
    generator = np.random.Generator(np.random.Philox(_seed(args)))
    rows = [
        {
            'statistic': name,
            'm': sample.m,
            'n': sample.n,
            'value': Statistics.statistic(
                StatisticKind.from_name(name), sample, tie_policy, generator
            ),
        }
        for name in args.statistic
    ]

    # one statistic to the terminal: the bare value
    if len(rows) == 1 and not args.out:
        sys.stdout.write('{0}\n'.format(Utilities.format_value(rows[0]['value'])))

        return

    _emit(args, 'stat', ['statistic', 'm', 'n', 'value'], rows, _provenance(args))


def _command_efficiency(args):
    pair = _pair(args, 0.5)
    reports = Efficiency.efficiency_curve(
        pair, Utilities.parse_grid(args.eta, 'eta'), Utilities.resolve_threads(args.threads)
    )

    _emit(
        args,
        'efficiency',
        EfficiencyReport.csv_columns,
        [Utilities.object_to_row(report) for report in reports],
        _provenance(args),
    )


def _command_oracle(args):
    distribution = Oracle.exact_null(StatisticKind.from_name(args.statistic), args.m, args.n)
    rows = []
    tail = 1

    for atom in distribution.atoms:
        tail -= atom.probability
        rows.append(
            {
                'value': atom.value,
                'probability': '{0!s}'.format(atom.probability),
                'tail': float(tail),
            }
        )

    _emit(args, 'oracle', ['value', 'probability', 'tail'], rows, _provenance(args))


def _command_critval(args):
    statistics = [StatisticKind.from_name(name) for name in args.statistic]
    table = _service(args).critical_values(
        SimulationPlan(statistics[0], args.m, args.n, args.replicates, _seed(args)),
        Utilities.parse_grid(args.alpha, 'alpha'),
        statistics,
    )

    _emit(
        args,
        'critval',
        [
            'statistic',
            'm',
            'n',
            'alpha',
            'critical_value',
            'replicates',
            'seed',
        ],
        [Utilities.object_to_row(entry) for entry in table],
        _provenance(args, args.replicates),
    )


def _command_power(args):
    service = _service(args)
    pair = _pair(args, args.eta)
    alternative = pair if args.q is None and args.theta is None else _path(args, pair)
    rows = []

    for name in args.statistic:
        statistic = StatisticKind.from_name(name)
        null_plan = SimulationPlan(
            statistic, args.m, args.n, args.critical_replicates, _seed(args)
        )
        critical = service.critical_value(null_plan, args.alpha).critical_value
        estimate = service.power(
            SimulationPlan(
                statistic, args.m, args.n, args.replicates, _seed(args), alternative
            ),
            critical,
        )
        row = {'statistic': name, 'm': args.m, 'n': args.n, 'alpha': args.alpha}
        row.update(Utilities.object_to_row(estimate))
        rows.append(row)

    _emit(
        args,
        'power',
        [
            'statistic',
            'm',
            'n',
            'alpha',
            'power',
            'ci_low',
            'ci_high',
            'rejections',
            'replicates',
            'critical_value',
            'seed',
        ],
        rows,
        _provenance(args, args.replicates),
    )


def _command_ratio(args):
    if args.q is None and args.theta is None:
        raise SdtestConfigurationException('ratio needs --q or --theta', 'theta')

    estimate = _service(args).empirical_sample_ratio(
        StatisticKind.from_name(args.benchmark),
        StatisticKind.from_name(args.challenger),
        _path(args, _pair(args, args.eta)),
        args.size,
        args.alpha,
        args.replicates,
        _seed(args),
        args.critical_replicates,
    )
    row = {
        'benchmark': args.benchmark,
        'challenger': args.challenger,
        'ratio': estimate.ratio,
        'n_challenger': estimate.size,
        'm_benchmark': estimate.benchmark_size,
        'challenger_power': estimate.challenger_power.estimate,
        'benchmark_power': estimate.benchmark_power.estimate,
        'half_width': estimate.half_width,
        'saturated': estimate.saturated,
        'unbounded': estimate.unbounded,
        'degenerate': estimate.degenerate,
    }

    _emit(
        args,
        'ratio',
        [
            'benchmark',
            'challenger',
            'ratio',
            'n_challenger',
            'm_benchmark',
            'challenger_power',
            'benchmark_power',
            'half_width',
            'saturated',
            'unbounded',
            'degenerate',
        ],
        [row],
        _provenance(args, args.replicates),
    )


def _command_mdev(args):
    (scale, exponent) = (args.scale, args.exponent)
    estimates = _service(args).mdev_slope(
        StatisticKind.from_name(args.statistic),
        Utilities.parse_grid(args.sizes, 'sizes', int),
        lambda size: scale * size ** (-exponent),
        args.replicates,
        _seed(args),
        args.eta,
    )

    _emit(
        args,
        'mdev',
        ['n', 'w_n', 'threshold', 'exceedances', 'replicates', 'probability', 'slope', 'flagged'],
        [Utilities.object_to_row(estimate) for estimate in estimates],
        _provenance(args, args.replicates),
    )


def _command_run(args):
    config = _config(args)

    if config is None:
        raise SdtestConfigurationException('run needs --config', 'config')

    flags = OrderedDict(
        (key, value)
        for (key, value) in sorted(vars(args).items())
        if key != 'handler'
    )
    file_names = run_experiment(config, _service(args), args.plot, flags)

    for file_name in file_names:
        print(file_name)


def _command_plot(args):
    for file_name in Plots.render_plots(args.csv, args.out):
        print(file_name)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', help='experiment INI file')
    common.add_argument(
        '--seed', type=int, default=None, help='64-bit master seed (default: config or 0)'
    )
    common.add_argument(
        '--threads',
        type=int,
        default=None,
        help='worker threads (default: $SDTEST_THREADS or 1)',
    )
    common.add_argument('--out', default=None, help='output directory')
    common.add_argument(
        '--log-level',
        default='WARNING',
        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'],
    )

    parser = argparse.ArgumentParser(
        prog='sdtest', description='One-sided two-sample stochastic dominance tests'
    )
    subparsers = parser.add_subparsers(dest='command')
    subparsers.required = True

    stat = subparsers.add_parser('stat', parents=[common], help='evaluate statistics')
    stat.add_argument('--x', required=True, help='file with one X value per line')
    stat.add_argument('--y', required=True, help='file with one Y value per line')
    stat.add_argument('--statistic', action='append', default=None)
    stat.add_argument(
        '--tie-policy',
        default=TiePolicy.ERROR.value,
        choices=[policy.value for policy in TiePolicy],
    )
    stat.set_defaults(handler=_command_stat)

    efficiency = subparsers.add_parser(
        'efficiency', parents=[common], help='e_TV against eta'
    )
    efficiency.add_argument('--pair', required=True)
    efficiency.add_argument('--eta', default='0.01:0.99:0.01')
    efficiency.set_defaults(handler=_command_efficiency)

    oracle = subparsers.add_parser('oracle', parents=[common], help='exact null distribution')
    oracle.add_argument('--statistic', default='ks')
    oracle.add_argument('--m', type=int, required=True)
    oracle.add_argument('--n', type=int, required=True)
    oracle.set_defaults(handler=_command_oracle)

    critval = subparsers.add_parser('critval', parents=[common], help='critical values')
    critval.add_argument('--statistic', action='append', default=None)
    critval.add_argument('--m', type=int, required=True)
    critval.add_argument('--n', type=int, required=True)
    critval.add_argument('--alpha', default='[0.01, 0.05]')
    critval.add_argument('--replicates', type=int, default=100000)
    critval.set_defaults(handler=_command_critval)

    for (name, help_) in (
        ('power', 'empirical power'),
        ('ratio', 'empirical sample-size ratio'),
    ):
        sub = subparsers.add_parser(name, parents=[common], help=help_)
        sub.add_argument('--pair', required=True)
        sub.add_argument('--eta', type=float, default=0.5)
        sub.add_argument('--alpha', type=float, default=0.01)
        sub.add_argument('--replicates', type=int, default=5000)
        sub.add_argument('--critical-replicates', type=int, default=100000)
        sub.add_argument('--q', type=float, default=None, help='theta_N = N^-q')
        sub.add_argument('--theta', type=float, default=None, help='constant theta')

    power = subparsers.choices['power']
    power.add_argument('--statistic', action='append', default=None)
    power.add_argument('--m', type=int, required=True)
    power.add_argument('--n', type=int, required=True)
    power.set_defaults(handler=_command_power)

    ratio = subparsers.choices['ratio']
    ratio.add_argument('--benchmark', default='ks')
    ratio.add_argument('--challenger', default='tstar')
    ratio.add_argument('--size', type=int, required=True)
    ratio.set_defaults(handler=_command_ratio)

    mdev = subparsers.add_parser('mdev', parents=[common], help='moderate-deviation slopes')
    mdev.add_argument('--statistic', default='ks')
    mdev.add_argument('--sizes', default='[100, 400, 1600]')
    mdev.add_argument('--exponent', type=float, default=0.35, help='w_N = scale N^-exponent')
    mdev.add_argument('--scale', type=float, default=1.0)
    mdev.add_argument('--eta', type=float, default=0.5)
    mdev.add_argument('--replicates', type=int, default=100000)
    mdev.set_defaults(handler=_command_mdev)

    run = subparsers.add_parser('run', parents=[common], help='run an experiment config')
    run.add_argument('--plot', action='store_true', help='also render SVG plots')
    run.set_defaults(handler=_command_run)

    plot = subparsers.add_parser('plot', parents=[common], help='render CSV files as SVG')
    plot.add_argument('csv', nargs='+')
    plot.set_defaults(handler=_command_plot)

    return parser


def main(argv=None):
    """
    Entry point of the sdtest console script

    :return: 0 on success, 1 when an experiment aborted, 2 on usage and
    configuration errors
    """
    parser = build_parser()
    args = parser.parse_args(argv)

    logging.basicConfig(
        level=getattr(logging, args.log_level),
        stream=sys.stderr,
        format='%(asctime)s %(levelname)s %(name)s: %(message)s',
    )

    if getattr(args, 'statistic', '') is None:
        args.statistic = ['ks', 'tstar', 'tcirc']

    try:
        args.handler(args)
    except SdtestSimulationException as exception:
        logger.error('%s; completed cells: %s', exception, exception.completed_cells)

        return EXIT_ABORTED
    except SdtestException as exception:
        logger.error('%s', exception)
        sys.stderr.write('sdtest: error: {0!s}\n'.format(exception))

        return EXIT_USAGE

    return EXIT_SUCCESS


if __name__ == '__main__':
    sys.exit(main())
