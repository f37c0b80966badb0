# -*- coding: utf-8 -*-

# © 2026, The gvpoles Developers
# Author: The gvpoles Developers
"""
Defines the result class of a verification suite.
"""

from types import SimpleNamespace

from fsc.export import export

from ._logging import VERIFY_LOGGER


@export
class SuiteResult(SimpleNamespace):
    """Outcome of a verification suite.

    Attributes
    ----------
    name : str
        Name of the suite.
    num_checks : int
        Number of checks which were run.
    failures : list(str)
        Descriptions of the failed checks.
    """
    def __init__(self, name):
        super().__init__(name=name, num_checks=0, failures=[])

    @property
    def passed(self):
        return not self.failures

    def check(self, condition, description):
        """Record a check, and log it if it failed."""
        self.num_checks += 1
        if not condition:
            VERIFY_LOGGER.warning(
                'Check failed in {}: {}'.format(self.name, description)
            )
            self.failures.append(description)
        return condition

    def to_dict(self):
        return {
            'suite': self.name,
            'num_checks': self.num_checks,
            'passed': self.passed,
            'failures': list(self.failures),
        }
