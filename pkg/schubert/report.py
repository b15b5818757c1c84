#!/usr/bin/env python
"""

Renders computation results as tables, JSON or CSV


.. currentmodule: schubert.report

Every report is a :class:`dict` holding only JSON-serializable data, so the
three output formats see the same content. Timings are kept as attributes
and never rendered, output is byte-for-byte reproducible.

"""

import io
import csv
import json
import logging

from jinja2 import Environment, PackageLoader
from pygments import highlight
from pygments.lexers import JsonLexer
from pygments.formatters import get_formatter_by_name

from schubert.exc import *

log = logging.getLogger(__name__)

FORMATS = ('table', 'json', 'csv')


def _environment():
    env = Environment(
        loader=PackageLoader(Report.TEMPLATE_PACKAGE, 'templates'),
        trim_blocks=True,
        lstrip_blocks=True,
        keep_trailing_newline=True)
    env.filters['join_values'] = lambda values: ",".join(str(v) for v in values)
    env.filters['yesno'] = lambda flag: "yes" if flag else "no"
    return env


class Report(dict):
    """Base class of all reports.

    :attr:`TEMPLATE` -- Template name used by the table format

    """
    TEMPLATE = None
    TEMPLATE_PACKAGE = 'schubert'
    _env = None

    def __repr__(self):
        return '<%s %s>' % (self.__class__.__name__, json.dumps(self, sort_keys=True))

    @property
    def passed(self):
        return True

    @classmethod
    def environment(cls):
        if Report._env is None:
            Report._env = _environment()
        return Report._env

    def csv_rows(self):
        """Header followed by data rows."""
        raise NotImplementedError

    def render(self, fmt='table'):
        """Render the report.

        :param fmt: one of ``table``, ``json``, ``csv``
        :type fmt: string
        :raises: :exc:`schubert.exc.SchubertValidationError` for other formats

        """
        if fmt == 'json':
            return json.dumps(self, sort_keys=True, indent=2) + "\n"
        elif fmt == 'csv':
            out = io.StringIO()
            writer = csv.writer(out, lineterminator="\n")
            writer.writerows(self.csv_rows())
            return out.getvalue()
        elif fmt == 'table':
            return self.environment().get_template(self.TEMPLATE).render(report=self)
        raise SchubertValidationError("Unknown output format: %r" % fmt)

    def print_formatted(self, fmt='table', formatter=None, stream=None):
        """Write the rendered report to ``stream``, colorizing JSON with pygments.

        :param formatter: pygments formatter name, ``None`` or ``"none"`` disables highlighting

        """
        output = self.render(fmt)
        if fmt == 'json' and formatter and formatter != 'none':
            output = highlight(output, JsonLexer(), get_formatter_by_name(formatter))
        if stream is None:
            print(output, end="")
        else:
            stream.write(output)


def _shape(shape):
    return {'d': shape.d, 'n': shape.n}


class HilbertReport(Report):
    """Hilbert function values of :math:`TC_{id}X(w)` per method.

    :raises: :exc:`schubert.exc.SchubertValidationError` if vectors differ in length

    """
    TEMPLATE = 'hilbert.jinja'

    def __init__(self, shape, w, methods, timings=None):
        lengths = set(len(v) for v in methods.values())
        if len(lengths) > 1:
            raise SchubertValidationError("Method vectors differ in length: %r" % sorted(lengths))
        vectors = list(methods.values())
        super(HilbertReport, self).__init__(
            shape=_shape(shape),
            w=list(w.entries),
            methods=dict((k, list(v)) for k, v in methods.items()),
            agree=all(v == vectors[0] for v in vectors))
        self.method_names = list(methods)
        self.timings = dict(timings or {})

    @property
    def passed(self):
        return self['agree']

    @property
    def degrees(self):
        return len(next(iter(self['methods'].values()), []))

    def csv_rows(self):
        rows = [['m'] + self.method_names]
        for m in range(self.degrees):
            rows.append([m] + [self['methods'][name][m] for name in self.method_names])
        return rows


class MultiplicityReport(Report):
    """Multiplicity of ``X(w)`` at the identity with its square-free cross-check."""
    TEMPLATE = 'multiplicity.jinja'

    def __init__(self, shape, w, d_w, chain, top, multiplicity, method,
                 squarefree=None, paths=()):
        super(MultiplicityReport, self).__init__(
            shape=_shape(shape),
            w=list(w.entries),
            d_w=d_w,
            chain=str(chain),
            M=top,
            multiplicity=multiplicity,
            method=method,
            squarefree=None if squarefree is None
                else {'M': squarefree[0], 'count': squarefree[1]},
            paths=list(paths))

    @property
    def passed(self):
        sq = self['squarefree']
        return sq is None or (sq['M'], sq['count']) == (self['M'], self['multiplicity'])

    def csv_rows(self):
        sq = self['squarefree'] or {'M': '', 'count': ''}
        return [['d', 'n', 'w', 'd_w', 'M', 'multiplicity', 'method', 'squarefree_M', 'squarefree_count'],
                [self['shape']['d'], self['shape']['n'], " ".join(str(e) for e in self['w']),
                 self['d_w'], self['M'], self['multiplicity'], self['method'], sq['M'], sq['count']]]


class GroebnerReport(Report):
    """Buchberger verification result per element."""
    TEMPLATE = 'groebner.jinja'

    def __init__(self, shape, checks):
        checks = [{'w': list(w.entries), 'generators': ngens, 'groebner': bool(ok)}
                  for w, ngens, ok in checks]
        super(GroebnerReport, self).__init__(
            shape=_shape(shape),
            checks=checks,
            succeeded=sum(1 for c in checks if c['groebner']),
            total=len(checks))

    @property
    def passed(self):
        return self['succeeded'] == self['total']

    def csv_rows(self):
        rows = [['w', 'generators', 'groebner']]
        for c in self['checks']:
            rows.append([" ".join(str(e) for e in c['w']), c['generators'], c['groebner']])
        return rows


class ConjectureCheck(Report):
    """Combinatorial counts against the tangent-cone oracle at one point ``tau`` of ``X(w)``.

    ``oracle_multiplicity`` is ``None`` when the oracle table stops below
    :math:`\\dim X(w)`.
    """

    def __init__(self, w, tau, j_max, degrees, multiplicity, oracle_multiplicity):
        degrees = [{'m': m, 'count': count, 'oracle': oracle, 'equal': count == oracle}
                   for m, count, oracle in degrees]
        super(ConjectureCheck, self).__init__(
            w=list(w.entries),
            tau=list(tau.entries),
            j_max=j_max,
            degrees=degrees,
            multiplicity=multiplicity,
            oracle_multiplicity=oracle_multiplicity,
            multiplicity_equal=None if oracle_multiplicity is None
                else multiplicity == oracle_multiplicity)

    @property
    def passed(self):
        return all(row['equal'] for row in self['degrees']) \
            and self['multiplicity_equal'] is not False


class ConjectureReport(Report):
    """Collection of :class:`ConjectureCheck` for one Grassmannian."""
    TEMPLATE = 'conjecture.jinja'

    def __init__(self, shape, checks):
        checks = list(checks)
        super(ConjectureReport, self).__init__(
            shape=_shape(shape),
            checks=checks,
            failed=[{'w': c['w'], 'tau': c['tau']} for c in checks if not c.passed])

    @property
    def passed(self):
        return not self['failed']

    def csv_rows(self):
        rows = [['w', 'tau', 'm', 'count', 'oracle', 'equal']]
        for c in self['checks']:
            for row in c['degrees']:
                rows.append([" ".join(str(e) for e in c['w']), " ".join(str(e) for e in c['tau']),
                             row['m'], row['count'], row['oracle'], row['equal']])
        return rows
