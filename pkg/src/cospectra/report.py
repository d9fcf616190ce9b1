# Copyright (c) 2026 Cospectra developers.
#
# Licensed under the BSD 3-Clause License
# <LICENSE.rst or https://opensource.org/licenses/BSD-3-Clause>.
# This file may not be copied, modified, or distributed except
# according to those terms.

import json

from dataclasses import dataclass

import xson

from .exact import ExactMatrix
from .graph import TwinKind
from .synthesis import PredictedSpectrum, TwinSequence, TwinStep
from .verify import SpectrumReport, Verdict


REPORT_FORMAT = 'cospectra-report/1'


class ReportError(ValueError):
    pass


@dataclass
class RunReport:
    """
    Everything a synthesis run produced: the input, its cotree and twin
    sequence, the case tally, the matrix (exact and at the given lambda), the
    spectrum and the verdicts of all checks.
    """
    input: str
    cotree: str
    sequence: TwinSequence
    cases: list
    lam: float
    matrix: ExactMatrix
    numeric: list
    spectrum: SpectrumReport
    predicted: PredictedSpectrum
    verdicts: list
    wall_time: float = 0.0

    @property
    def passed(self):
        return bool(self.verdicts) and all(v.passed for v in self.verdicts)


def _multiplicities(counts):
    return {str(mu): counts.get(mu, 0) for mu in (-1, 0, 1, 2)}


def _decimal(x):
    # 17 significant digits round-trip every double.
    return format(x, '.17g')


def _decimals(values, sep=', '):
    return f'[{sep.join(_decimal(x) for x in values)}]'


def _rows(rows, render):
    lines = ',\n'.join(f'  {render(row)}' for row in rows)
    return f'[\n{lines}\n ]' if lines else '[]'


def _json(value):
    return json.dumps(value, separators=(', ', ': '))


def dumps(report):
    """
    Serialize a RunReport as a JSON document with one top-level field per line
    and one matrix row per line. Keys are written in a fixed order, so equal
    reports serialize to equal text (up to `wall_time`). Floating-point values
    are written with 17 significant digits.
    """
    if not report.verdicts:
        raise ReportError('A report needs at least one verdict.')
    spectrum = report.spectrum
    spectrum_fields = [
        ('exact', _json(_multiplicities(spectrum.exact) if spectrum else None)),
        ('predicted', _json(_multiplicities(report.predicted.as_dict()))),
        ('numeric', _decimals(spectrum.numeric if spectrum else [])),
        ('max_deviation', _decimal(spectrum.max_deviation) if spectrum and spectrum.max_deviation is not None else 'null'),
    ]
    fields = [
        ('format', _json(REPORT_FORMAT)),
        ('input', _json(report.input)),
        ('cotree', _json(report.cotree)),
        ('n', _json(report.matrix.n)),
        ('lambda', _decimal(report.lam)),
        ('twin_sequence', _json({
            'base': report.sequence.base,
            'steps': [[s.added, s.twin_of, s.kind.value] for s in report.sequence.steps],
        })),
        ('cases', _json(report.cases)),
        ('matrix_exact', _rows(report.matrix.to_triples(), lambda row: json.dumps(row, separators=(',', ':')))),
        ('matrix_numeric', _rows(report.numeric, lambda row: _decimals(row, sep=','))),
        ('spectrum', '{' + ', '.join(f'{json.dumps(key)}: {value}' for key, value in spectrum_fields) + '}'),
        ('verdicts', _json([{'name': v.name, 'passed': v.passed, 'detail': v.detail} for v in report.verdicts])),
        ('wall_time', _json(report.wall_time)),
    ]
    body = ',\n'.join(f' {json.dumps(key)}: {value}' for key, value in fields)
    return f'{{\n{body}\n}}\n'


def loads(text):
    """
    Load a RunReport written by :func:`dumps`.
    """
    try:
        data = xson.loads(text)
    except Exception as e:  # pylint: disable=broad-except
        raise ReportError(f'Report is not valid JSON: {e}') from e
    if not isinstance(data, dict) or data.get('format') != REPORT_FORMAT:
        raise ReportError(f'Not a {REPORT_FORMAT} document.')

    try:
        seq = data['twin_sequence']
        spectrum = data['spectrum']
        exact = spectrum['exact']
        return RunReport(
            input=data['input'],
            cotree=data['cotree'],
            sequence=TwinSequence(base=seq['base'],
                                  steps=tuple(TwinStep(added=a, twin_of=t, kind=TwinKind(k)) for a, t, k in seq['steps'])),
            cases=list(data['cases']),
            lam=data['lambda'],
            matrix=ExactMatrix.from_triples(data['matrix_exact']),
            numeric=data['matrix_numeric'],
            spectrum=SpectrumReport(exact={int(mu): c for mu, c in exact.items()},
                                    numeric=spectrum['numeric'],
                                    max_deviation=spectrum['max_deviation'],
                                    lam=data['lambda']) if exact is not None else None,
            predicted=PredictedSpectrum.from_dict({int(mu): c for mu, c in spectrum['predicted'].items()}),
            verdicts=[Verdict(v['name'], v['passed'], v['detail']) for v in data['verdicts']],
            wall_time=data['wall_time'],
        )
    except (KeyError, TypeError, ValueError) as e:
        raise ReportError(f'Malformed report: {e!r}') from e
