# -*- coding: utf-8 -*-

# © 2026, The gvpoles Developers
# Author: The gvpoles Developers
"""
Defines the integrality reports of the functions ``G_d`` and the extraction
of the Gopakumar-Vafa numbers.
"""

import csv
import json
from types import SimpleNamespace

from fsc.export import export
from fsc.hdf5_io import subscribe_hdf5, HDF5Enabled, SimpleHDF5Mapping

from ..qalgebra import QRatio, TPoly, NotSymmetricInT, qnum, to_t_poly
from ..series import partition_function, log_series
from ..series._degree_series import graded_key
from ._inversion import g_of_d
from ._logging import GV_LOGGER

CSV_FIELDS = ('gamma', 'degree', 'g', 'n')
__all__ = ['CSV_FIELDS']


def _read_string(value):
    if isinstance(value, bytes):
        return value.decode('utf-8')
    return str(value)


def _gv_sign(genus):
    return -1 if (genus - 1) % 2 else 1


@export
@subscribe_hdf5('gvpoles.gv_report')
class GvReport(SimpleNamespace, HDF5Enabled):
    """Integrality verdict of ``t G_d`` for one degree vector.

    Attributes
    ----------
    gamma : tuple(int)
        The integers ``gamma_i``.
    degree : tuple(int)
        The degree vector.
    g_poly : TPoly or None
        The polynomial ``t G_d``, or ``None`` if it is not a polynomial in
        ``t``.
    integral : bool
        Whether ``t G_d`` is a polynomial in ``t`` with integer coefficients.
    gv_numbers : list(tuple(int, int))
        Pairs ``(g, n^g)`` with ``n^g = (-1)^(g-1)`` times the coefficient of
        ``t^g``. Empty unless ``integral`` is set.
    paths_agree : bool
        Whether all evaluation paths of the partition function agreed.
    notes : list(str)
        Diagnostics.
    """
    def __init__(
        self,
        *,
        gamma,
        degree,
        g_poly,
        integral,
        gv_numbers=(),
        paths_agree=True,
        notes=()
    ):
        super().__init__()
        self.gamma = tuple(int(g) for g in gamma)
        self.degree = tuple(int(d) for d in degree)
        self.g_poly = g_poly
        self.integral = bool(integral)
        self.gv_numbers = [(int(g), int(n)) for g, n in gv_numbers]
        self.paths_agree = bool(paths_agree)
        self.notes = list(notes)

    @classmethod
    def from_g(cls, gamma, degree, value, *, paths_agree=True):
        """Create the report from the function ``G_d``."""
        t_times_g = QRatio.coerce(value) * QRatio(qnum(1)**2)
        try:
            g_poly = to_t_poly(t_times_g)
        except NotSymmetricInT as exc:
            GV_LOGGER.warning(
                't G_{} is not a polynomial in t: {}'.format(degree, exc)
            )
            return cls(
                gamma=gamma,
                degree=degree,
                g_poly=None,
                integral=False,
                paths_agree=paths_agree,
                notes=['t G is not a polynomial in t: {}'.format(exc)]
            )
        notes = []
        if g_poly.is_integral:
            gv_numbers = [
                (genus, _gv_sign(genus) * int(coefficient))
                for genus, coefficient in enumerate(g_poly.coefficients)
            ]
        else:
            GV_LOGGER.warning(
                't G_{} has non-integer coefficients: {}'.format(
                    degree, g_poly
                )
            )
            gv_numbers = []
            notes.append('non-integer coefficients')
        if not paths_agree:
            notes.append('evaluation paths disagree')
        return cls(
            gamma=gamma,
            degree=degree,
            g_poly=g_poly,
            integral=g_poly.is_integral,
            gv_numbers=gv_numbers,
            paths_agree=paths_agree,
            notes=notes
        )

    @property
    def passed(self):
        return self.integral and self.paths_agree

    def to_dict(self):
        return {
            'gamma': list(self.gamma),
            'degree': list(self.degree),
            't_times_G':
            [] if self.g_poly is None else self.g_poly.to_strings(),
            'integral': self.integral,
            'gv': [{
                'g': genus,
                'n': str(number)
            } for genus, number in self.gv_numbers],
            'paths_agree': self.paths_agree,
        }

    @classmethod
    def from_dict(cls, data):
        coefficients = data['t_times_G']
        integral = data['integral']
        return cls(
            gamma=data['gamma'],
            degree=data['degree'],
            g_poly=TPoly.from_strings(coefficients)
            if coefficients or integral else None,
            integral=integral,
            gv_numbers=[(entry['g'], int(entry['n'])) for entry in data['gv']],
            paths_agree=data['paths_agree']
        )

    def to_json(self):
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))

    def csv_rows(self):
        """Rows ``(gamma, degree, g, n)`` of the CSV output."""
        gamma = ' '.join(str(g) for g in self.gamma)
        degree = ' '.join(str(d) for d in self.degree)
        return [(gamma, degree, genus, number)
                for genus, number in self.gv_numbers]

    def to_hdf5(self, hdf5_handle):
        hdf5_handle['report'] = self.to_json()
        hdf5_handle['notes'] = json.dumps(self.notes)

    @classmethod
    def from_hdf5(cls, hdf5_handle):
        res = cls.from_json(_read_string(hdf5_handle['report'][()]))
        res.notes = json.loads(_read_string(hdf5_handle['notes'][()]))
        return res


@export
@subscribe_hdf5('gvpoles.gv_report_container')
class GvReportContainer(SimpleNamespace, SimpleHDF5Mapping):
    """Container for the reports of one computation, in graded degree order.

    Attributes
    ----------
    reports : list(GvReport)
        The reports.
    """
    HDF5_ATTRIBUTES = ['reports']

    def __init__(self, reports=()):
        super().__init__()
        self.reports = sorted(reports, key=lambda rep: graded_key(rep.degree))

    def __iter__(self):
        return iter(self.reports)

    def __getitem__(self, idx):
        return self.reports[idx]

    def __len__(self):
        return len(self.reports)

    @property
    def passed(self):
        return all(report.passed for report in self.reports)

    def summary(self):
        return {
            'num_reports': len(self.reports),
            'all_integral': all(report.integral for report in self.reports),
            'all_paths_agree':
            all(report.paths_agree for report in self.reports),
        }

    def write_json(self, stream):
        """One JSON object per line, followed by the summary."""
        for report in self.reports:
            stream.write(report.to_json() + '\n')
        stream.write(json.dumps({'summary': self.summary()}) + '\n')

    def write_csv(self, stream):
        writer = csv.writer(stream, lineterminator='\n')
        writer.writerow(CSV_FIELDS)
        for report in self.reports:
            writer.writerows(report.csv_rows())


@export
def integrality_report(
    gamma, degree, free_energy=None, *, path='def', paths_agree=True
):
    """Check the integrality of ``t G_d`` and extract the GV numbers.

    Arguments
    ---------
    gamma : tuple(int)
        The integers ``gamma_i``.
    degree : tuple(int)
        Non-zero degree vector.
    free_energy : DegreeSeries, optional
        The free energy. If not given, it is computed from the partition
        function up to the required degree.
    path : str
        Evaluation path for the partition function, if it is computed.
    paths_agree : bool
        Passed on to the report.

    Returns
    -------
    GvReport
    """
    degree = tuple(int(d) for d in degree)
    if free_energy is None:
        free_energy = log_series(
            partition_function(
                gamma, sum(degree), degrees=[degree], path=path
            )
        )
    report = GvReport.from_g(
        gamma,
        degree,
        g_of_d(gamma, degree, free_energy),
        paths_agree=paths_agree
    )
    GV_LOGGER.debug(
        'Degree {}: t G = {}, integral = {}'.format(
            degree, report.g_poly, report.integral
        )
    )
    return report


@export
def class_summed_gv(reports):
    """Sum the GV numbers of the reports over degree vectors of equal total
    degree.

    Returns
    -------
    dict
        Mapping from the total degree to a dict from the genus to the summed
        number.
    """
    result = {}
    for report in reports:
        by_genus = result.setdefault(sum(report.degree), {})
        for genus, number in report.gv_numbers:
            by_genus[genus] = by_genus.get(genus, 0) + number
    return result
