# -*- coding: utf-8 -*-

"""
Plain dict views of analysis results and their JSON and text renderings.
Renderings are deterministic: keys sorted, no timestamps.
"""

import json
import logging

from prefal import constants
from prefal.exceptions import PrefalError

logger = logging.getLogger(__name__)


def analysis_to_dict(analysis):
    """
    :param analysis: unbordered prefix analysis
    :type analysis: :py:class:`~prefal.prefactor.UPAnalysis`
    :rtype: dict
    """
    data = {'up': [str(u) for u in analysis.up_set],
            'N': analysis.n,
            'up_prime': [str(u) for u in analysis.up_prime],
            'phi': {analysis.phi.alphabet.glyph(i): str(cw)
                    for i, cw in enumerate(analysis.phi.codewords)},
            'completeness': analysis.completeness.value,
            'scan_bound': analysis.scan_bound,
            'verified': analysis.verified,
            'stall': analysis.stall,
            'refutation': analysis.refutation,
            'certificate': None}
    if analysis.certificate is not None:
        data['certificate'] = {'kind': analysis.certificate.kind,
                               'detail': analysis.certificate.detail}
    return data


def chain_to_dict(chain, prefix_length=32):
    """
    :param chain: derived chain
    :type chain: :py:class:`~prefal.prefactor.DerivedChain`
    :param prefix_length: symbols of each level shown
    :type prefix_length: int
    :rtype: dict
    """
    levels = []
    for level in chain.levels:
        entry = {'index': level.index,
                 'word': level.word.describe(),
                 'analysis': analysis_to_dict(level.analysis)}
        try:
            entry['prefix'] = str(level.word.prefix(prefix_length))
        except PrefalError as e:
            entry['prefix'] = None
            entry['prefix_error'] = str(e)
        levels.append(entry)
    return {'levels': levels,
            'nu': [str(n) for n in chain.nu],
            'cycle': list(chain.cycle) if chain.cycle is not None else None,
            'failure': chain.failure}


def verdict_to_dict(verdict):
    """
    :param verdict: hierarchy verdict
    :type verdict: :py:class:`~prefal.prefactor.HierarchyVerdict`
    :rtype: dict
    """
    return {'status': verdict.status.value,
            'level': verdict.level,
            'certified': verdict.certified,
            'evidence': verdict.evidence}


def frontier_to_dict(report):
    """
    Reachable sets are listed in full up to
    :py:const:`~prefal.constants.FRONTIER_FULL_SET_LIMIT`, summarized
    beyond

    :param report: frontier report
    :type report: :py:class:`~prefal.coloring.FrontierReport`
    :rtype: dict
    """
    colors = {}
    for f in report.frontiers:
        entry = {'last': f.last,
                 'verdict': 'FrontierDead' if f.dead else 'FrontierAlive',
                 'dead_at': f.dead_at,
                 'count': len(f.reachable)}
        if report.length <= constants.FRONTIER_FULL_SET_LIMIT:
            entry['reachable'] = list(f.reachable)
        colors[f.color] = entry
    return {'length': report.length,
            'window': report.window,
            'bounded_evidence': True,
            'note': report.note,
            'colors': colors}


def make_report(command, spec, body):
    """
    Wraps **body** with schema version, command and spec

    :rtype: dict
    """
    data = {'schema': constants.REPORT_SCHEMA_VERSION,
            'command': command,
            'spec': spec}
    data.update(body)
    return data


def _text_lines(value, indent=0):
    pad = '  ' * indent
    lines = []
    if isinstance(value, dict):
        for key in sorted(value.keys(), key=str):
            item = value[key]
            nested = isinstance(item, dict) and item
            if isinstance(item, list):
                nested = any(isinstance(i, (dict, list)) for i in item)
            if nested:
                lines.append(pad + str(key) + ':')
                lines.extend(_text_lines(item, indent + 1))
            elif isinstance(item, list):
                lines.append(pad + str(key) + ': ' +
                             ', '.join(str(i) for i in item))
            else:
                lines.append(pad + str(key) + ': ' + str(item))
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, (dict, list)):
                lines.append(pad + '-')
                lines.extend(_text_lines(item, indent + 1))
            else:
                lines.append(pad + '- ' + str(item))
    else:
        lines.append(pad + str(value))
    return lines


def render(report, output_format=constants.JSON_FORMAT):
    """
    Renders **report** as sorted key JSON or indented text

    :raises PrefalError: on unknown **output_format**
    :rtype: str
    """
    if output_format == constants.JSON_FORMAT:
        return json.dumps(report, sort_keys=True, indent=2)
    if output_format == constants.TEXT_FORMAT:
        return '\n'.join(_text_lines(report))
    raise PrefalError('unknown output format ' + str(output_format))
