# -*- coding: utf-8 -*-

# © 2026, The gvpoles Developers
# Author: The gvpoles Developers
"""
Defines the configuration of a command-line run, assembled from flags, an
optional JSON file and the built-in defaults.
"""

import json
from collections import ChainMap
from types import MappingProxyType, SimpleNamespace

from fsc.export import export

from ..series._controller import _PATH_LOOKUP
from ..verify import SCALES, SUITE_NAMES

PRESETS = MappingProxyType({
    'P2': (1, 1, 1),
    'F0': (0, 0, 0, 0),
    'F1': (1, 0, -1, 0),
    'B2': (0, 0, -1, -1, -1),
    'B3': (-1, -1, -1, -1, -1, -1),
})

DEFAULTS = MappingProxyType({
    'command': 'compute',
    'gamma': 'P2',
    'max_total_degree': 3,
    'degrees': None,
    'paths': ('def', ),
    'verify_suites': SUITE_NAMES,
    'verify_scale': 'interactive',
    'output_format': 'json',
    'jobs': 1,
    'save': None,
    'checkpoint': None,
    'load': False,
    'verify': MappingProxyType({}),
})

_OUTPUT_FORMATS = ('json', 'csv')

__all__ = ['PRESETS', 'DEFAULTS']


def _split(value):
    if isinstance(value, str):
        return [item.strip() for item in value.split(',') if item.strip()]
    return list(value)


@export
def resolve_gamma(value):
    """Turn a preset name, a comma-separated string or a sequence into the
    tuple ``gamma``."""
    if isinstance(value, str) and value.strip() in PRESETS:
        return PRESETS[value.strip()]
    try:
        gamma = tuple(int(g) for g in _split(value))
    except (TypeError, ValueError) as exc:
        raise ValueError(
            "Invalid value for 'gamma': {}".format(value)
        ) from exc
    if len(gamma) < 2:
        raise ValueError(
            "Invalid value for 'gamma': {} (need at least two entries)".
            format(value)
        )
    return gamma


@export
def parse_degrees(value):
    """Parse degree vectors given as ``'1,0,0;1,1,0'`` or as a list of
    sequences."""
    if value is None:
        return None
    if isinstance(value, str):
        value = [part for part in value.split(';') if part.strip()]
    try:
        return [tuple(int(d) for d in _split(degree)) for degree in value]
    except (TypeError, ValueError) as exc:
        raise ValueError(
            "Invalid value for 'degrees': {}".format(value)
        ) from exc


def load_config_file(path):
    """Read a JSON configuration file, returning an empty mapping for
    ``None``."""
    if path is None:
        return {}
    with open(path, 'r') as in_file:
        try:
            content = json.load(in_file)
        except json.JSONDecodeError as exc:
            raise ValueError(
                "Invalid config file '{}': {}".format(path, exc)
            ) from exc
    if not isinstance(content, dict):
        raise ValueError(
            "Invalid config file '{}': expected a JSON object".format(path)
        )
    return content


@export
class RunConfig(SimpleNamespace):
    """Validated configuration of a ``gv`` run.

    Attributes
    ----------
    command : str
        One of ``'compute'``, ``'verify'`` or ``'surfaces'``.
    gamma : tuple(int)
        The integers ``gamma_i``.
    max_total_degree : int
        Truncation order of the total degree.
    degrees : list(tuple(int)) or None
        Explicit degree vectors. All vectors up to ``max_total_degree`` are
        reported if not given.
    paths : tuple(str)
        Evaluation paths of the partition function. The first one is used for
        the free energy, the others are compared against it.
    verify_suites : tuple(str)
        Names of the verification suites.
    verify_scale : str
        Named scale of the verification suites, ``'interactive'`` or
        ``'acceptance'``.
    output_format : str
        Either ``'json'`` or ``'csv'``.
    jobs : int
        Number of worker processes.
    save : str or None
        HDF5 file for the report container.
    checkpoint : str or None
        HDF5 file for the intermediate coefficients.
    load : bool
        Resume from ``checkpoint``.
    verify : dict
        Scale caps of the verification suites, by suite name. They take
        precedence over ``verify_scale``.
    """
    def __init__(self, mapping):
        super().__init__()
        self.command = mapping['command']
        if self.command not in ('compute', 'verify', 'surfaces'):
            raise ValueError(
                "Invalid value for 'command': {}".format(self.command)
            )
        self.gamma = resolve_gamma(mapping['gamma'])
        self.max_total_degree = int(mapping['max_total_degree'])
        if self.max_total_degree < 1:
            raise ValueError(
                "Invalid value for 'max_total_degree': {}".format(
                    self.max_total_degree
                )
            )
        self.degrees = parse_degrees(mapping['degrees'])
        if self.degrees is not None:
            for degree in self.degrees:
                if len(degree) != len(self.gamma) or any(
                    d < 0 for d in degree
                ) or not any(degree):
                    raise ValueError(
                        "Invalid value for 'degrees': {} does not match "
                        "gamma = {}".format(degree, self.gamma)
                    )
            self.max_total_degree = max(
                [self.max_total_degree] + [sum(d) for d in self.degrees]
            )
        self.paths = tuple(_split(mapping['paths']))
        for path in self.paths:
            if path not in _PATH_LOOKUP:
                raise ValueError("Invalid value for 'paths': {}".format(path))
        if not self.paths:
            raise ValueError("Invalid value for 'paths': empty")
        self.verify_suites = tuple(_split(mapping['verify_suites']))
        for name in self.verify_suites:
            if name not in SUITE_NAMES:
                raise ValueError(
                    "Invalid value for 'verify_suites': {}".format(name)
                )
        self.verify_scale = mapping['verify_scale']
        if self.verify_scale not in SCALES:
            raise ValueError(
                "Invalid value for 'verify_scale': {}".format(
                    self.verify_scale
                )
            )
        self.output_format = mapping['output_format']
        if self.output_format not in _OUTPUT_FORMATS:
            raise ValueError(
                "Invalid value for 'output_format': {}".format(
                    self.output_format
                )
            )
        self.jobs = int(mapping['jobs'])
        if self.jobs < 1:
            raise ValueError("Invalid value for 'jobs': {}".format(self.jobs))
        self.save = mapping['save']
        self.checkpoint = mapping['checkpoint']
        self.load = bool(mapping['load'])
        if self.load and self.checkpoint is None:
            raise ValueError("'load' needs a 'checkpoint' file.")
        self.verify = {
            name: dict(options)
            for name, options in dict(mapping['verify']).items()
        }

    @classmethod
    def assemble(cls, flags=MappingProxyType({}), config_file=None):
        """Combine the flags, the config file and the defaults.

        Flags which are ``None`` are treated as not given.
        """
        given = {
            key: value
            for key, value in flags.items() if value is not None
        }
        return cls(ChainMap(given, load_config_file(config_file), DEFAULTS))
