# -*- coding: utf-8 -*-

# © 2026, The gvpoles Developers
# Author: The gvpoles Developers
"""
Defines the ``gv`` command-line interface.
"""

import sys
import json
import logging
import argparse

from fsc.export import export

from .. import io
from ..gv import GvReportContainer, integrality_report
from ..series import degree_vectors, log_series, partition_function
from ..series._degree_series import graded_key
from ..verify import SCALES, SUITE_NAMES, run_suites
from ._config import PRESETS, RunConfig
from ._logging import CLI_LOGGER

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
__all__ = ['EXIT_OK', 'EXIT_FAILURE', 'EXIT_USAGE']


def _compute_series(config):
    results = []
    for idx, path in enumerate(config.paths):
        results.append(
            partition_function(
                config.gamma,
                config.max_total_degree,
                path=path,
                degrees=config.degrees,
                jobs=config.jobs,
                save_file=config.checkpoint if idx == 0 else None,
                load=config.load if idx == 0 else False
            )
        )
    return results


def _paths_agree(series_list, degree):
    first = series_list[0][degree]
    return all(series[degree] == first for series in series_list[1:])


def _compute(config, stream):
    degrees = config.degrees
    if degrees is None:
        degrees = degree_vectors(len(config.gamma), config.max_total_degree)
    degrees = sorted(set(degrees), key=graded_key)
    series_list = _compute_series(config)
    free_energy = log_series(series_list[0])
    container = GvReportContainer([
        integrality_report(
            config.gamma,
            degree,
            free_energy,
            paths_agree=_paths_agree(series_list, degree)
        ) for degree in degrees
    ])
    CLI_LOGGER.info(
        'Computed {} reports for gamma = {}.'.format(
            len(container), config.gamma
        )
    )
    if config.output_format == 'json':
        container.write_json(stream)
    else:
        container.write_csv(stream)
    if config.save is not None:
        io.save(container, config.save)
        CLI_LOGGER.info('Reports written to {}.'.format(config.save))
    return EXIT_OK if container.passed else EXIT_FAILURE


def _verify(config, stream):
    results = run_suites(
        config.verify_suites,
        options=config.verify,
        scale=config.verify_scale
    )
    for result in results:
        stream.write(json.dumps(result.to_dict()) + '\n')
    passed = all(result.passed for result in results)
    stream.write(json.dumps({'summary': {'passed': passed}}) + '\n')
    return EXIT_OK if passed else EXIT_FAILURE


def _surfaces(config, stream):  # pylint: disable=unused-argument
    for name, gamma in PRESETS.items():
        stream.write('{} {}\n'.format(name, ','.join(str(g) for g in gamma)))
    return EXIT_OK


_COMMAND_LOOKUP = {
    'compute': _compute,
    'verify': _verify,
    'surfaces': _surfaces,
}


@export
def execute(config, *, stream=None):
    """Run the pipeline described by ``config``.

    Arguments
    ---------
    config : RunConfig
        The validated configuration.
    stream : io.TextIOBase, optional
        Stream for the reports. Defaults to ``sys.stdout``.

    Returns
    -------
    int
        The exit status: ``0`` if all integrality verdicts and verification
        suites passed, ``1`` otherwise.
    """
    if stream is None:
        stream = sys.stdout
    return _COMMAND_LOOKUP[config.command](config, stream)


@export
def build_parser():
    """Create the argument parser of the ``gv`` command."""
    parser = argparse.ArgumentParser(
        prog='gv',
        description='Exact topological string free energies of toric '
        'surfaces and their Gopakumar-Vafa integrality.'
    )
    parser.add_argument(
        '--config', help='JSON file with default values for the flags.'
    )
    parser.add_argument(
        '--log-level',
        default='WARNING',
        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'],
        help='Level of the diagnostics written to stderr.'
    )
    subparsers = parser.add_subparsers(dest='command')

    compute = subparsers.add_parser(
        'compute', help='Compute the GV integrality reports.'
    )
    gamma_group = compute.add_mutually_exclusive_group()
    gamma_group.add_argument(
        '--surface', choices=sorted(PRESETS), help='Preset surface.'
    )
    gamma_group.add_argument(
        '--gamma', help="Comma-separated integers, e.g. '--gamma=-1,-1'."
    )
    compute.add_argument(
        '--max-degree',
        dest='max_total_degree',
        type=int,
        help='Maximum total degree.'
    )
    compute.add_argument(
        '--degrees', help="Explicit degree vectors, e.g. '1,0,0;1,1,0'."
    )
    compute.add_argument(
        '--paths', help="Evaluation paths, e.g. 'def,matrix'."
    )
    compute.add_argument(
        '--format',
        dest='output_format',
        choices=['json', 'csv'],
        help='Format of the report stream.'
    )
    compute.add_argument(
        '--jobs', type=int, help='Number of worker processes.'
    )
    compute.add_argument('--save', help='HDF5 file for the reports.')
    compute.add_argument(
        '--checkpoint', help='HDF5 file for the intermediate coefficients.'
    )
    compute.add_argument(
        '--load',
        action='store_true',
        default=None,
        help='Resume from the checkpoint file.'
    )

    verify = subparsers.add_parser(
        'verify', help='Run the verification suites.'
    )
    verify.add_argument(
        '--suite',
        dest='verify_suites',
        action='append',
        choices=SUITE_NAMES,
        help='Suite to run, may be repeated. Defaults to all suites.'
    )
    verify.add_argument(
        '--scale',
        dest='verify_scale',
        choices=sorted(SCALES),
        help="Scale of the suites. 'acceptance' runs the full reference "
        "checks, which takes several minutes."
    )

    subparsers.add_parser('surfaces', help='List the preset surfaces.')
    return parser


def _flags(args):
    flags = {
        key: value
        for key, value in vars(args).items()
        if key not in ('config', 'log_level', 'surface')
    }
    if getattr(args, 'surface', None) is not None:
        flags['gamma'] = args.surface
    return flags


@export
def main(argv=None):
    """Entry point of the ``gv`` command."""
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.getLogger('gvpoles').setLevel(args.log_level)
    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        config = RunConfig.assemble(_flags(args), config_file=args.config)
    except (ValueError, OSError) as exc:
        CLI_LOGGER.error('Invalid configuration: {}'.format(exc))
        return EXIT_USAGE
    return execute(config)
