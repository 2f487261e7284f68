# -*- coding: utf-8 -*-

"""
Brute force reference implementations for small inputs. Nothing here
calls into the fast paths it is compared with; the ``check_*`` helpers
run both sides and report the comparison.
"""

import logging
import itertools
from dataclasses import dataclass

from prefal import constants
from prefal.exceptions import BorderError
from prefal.exceptions import OracleSizeCapError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OracleReport(object):
    """
    Outcome of one oracle versus fast path comparison
    """
    operation: str
    input: str
    oracle_output: object
    fast_output: object

    @property
    def agreed(self):
        return self.oracle_output == self.fast_output

    def to_dict(self):
        return {'operation': self.operation,
                'input': self.input,
                'oracle': self.oracle_output,
                'fast': self.fast_output,
                'agreed': self.agreed}


def _text(w):
    return w if isinstance(w, str) else str(w)


def _check_cap(text, cap):
    if len(text) > cap:
        raise OracleSizeCapError('oracle size cap: length ' +
                                 str(len(text)) + ' exceeds ' + str(cap))


def oracle_borders(w):
    """
    All borders of **w**, shortest first, by comparing every proper
    prefix with the suffix of the same length

    :param w: non-empty word
    :type w: :py:class:`~prefal.words.FiniteWord` or str
    :raises BorderError: if **w** is empty
    :return: borders as strings
    :rtype: list
    """
    text = _text(w)
    if len(text) == 0:
        raise BorderError('empty word has no border status')
    borders = []
    for k in range(1, len(text)):
        matched = True
        for i in range(k):
            if text[i] != text[len(text) - k + i]:
                matched = False
                break
        if matched:
            borders.append(text[:k])
    return borders


def oracle_up_factorizations(p, up, open_end=False):
    """
    Every way to write **p** as a concatenation of words of **up**

    :param p: word, at most ``FACTORIZATION_ORACLE_CAP`` long
    :param up: candidate pieces
    :type up: iterable of str or :py:class:`~prefal.words.FiniteWord`
    :param open_end: if ``True`` the last piece may run past the end of
                     **p**, it is then cut at the end
    :type open_end: bool
    :raises OracleSizeCapError: if **p** is too long
    :return: factorizations as tuples of strings
    :rtype: list
    """
    text = _text(p)
    _check_cap(text, constants.FACTORIZATION_ORACLE_CAP)
    pieces = sorted({_text(u) for u in up})
    found = []

    def _walk(pos, acc):
        if pos == len(text):
            found.append(tuple(acc))
            return
        for piece in pieces:
            if not piece:
                continue
            rest = text[pos:pos + len(piece)]
            if rest == piece or (open_end and len(rest) < len(piece) and
                                 piece.startswith(rest)):
                acc.append(rest)
                _walk(pos + len(rest), acc)
                acc.pop()

    _walk(0, [])
    return found


def oracle_factorization_cuts(p, up, open_end=False):
    """
    Cut point tuples of every factorization of **p** over **up**
    """
    out = []
    for fact in oracle_up_factorizations(p, up, open_end):
        cuts = [0]
        for piece in fact:
            cuts.append(cuts[-1] + len(piece))
        out.append(tuple(cuts))
    return out


def _naive_color(coloring, u, context):
    for rule in coloring.rules:
        pred = rule.predicate
        if pred.kind == 'otherwise':
            hit = True
        elif pred.kind == 'prefix':
            hit = context[:len(u)] == u
        elif pred.kind == 'prefix_end':
            hit = context[:len(u)] == u and u[-1] == pred.arg
        elif pred.kind == 'ends_with':
            hit = u[-1] == pred.arg
        elif pred.kind == 'begins_with':
            hit = u[0] == pred.arg
        elif pred.kind == 'shorter_than':
            hit = len(u) < int(pred.arg)
        elif pred.kind == 'word':
            hit = u == pred.arg
        else:
            hit = any(context[i:i + len(u)] == u
                      for i in range(len(context) - len(u) + 1))
        if pred.negate:
            hit = not hit
        if hit:
            return rule.color
    return None


def oracle_mono_factorizations(p, coloring, c):
    """
    Whether **p** splits into non-empty pieces all of color **c**, by
    trying every split. Prefix predicates refer to **p** itself unless
    the coloring has a reference word.

    :param p: prefix of the colored word, at most
              ``FACTORIZATION_ORACLE_CAP`` long
    :param coloring: coloring
    :type coloring: :py:class:`~prefal.coloring.Coloring`
    :param c: color
    :type c: str
    :raises OracleSizeCapError: if **p** is too long
    :rtype: bool
    """
    text = _text(p)
    _check_cap(text, constants.FACTORIZATION_ORACLE_CAP)
    if coloring.reference is None:
        context = text
    else:
        context = str(coloring.reference.prefix(
            constants.DEFAULT_VERIFY_LENGTH))
    if len(text) == 0:
        return True

    def _split(pos):
        if pos == len(text):
            return True
        for end in range(pos + 1, len(text) + 1):
            if _naive_color(coloring, text[pos:end], context) == c \
                    and _split(end):
                return True
        return False

    return _split(0)


def check_borders(w):
    """
    Compares :py:func:`oracle_borders` with the border table path

    :rtype: :py:class:`OracleReport`
    """
    from prefal.words import FiniteWord
    from prefal.words import is_unbordered
    word = w if isinstance(w, FiniteWord) else FiniteWord.from_string(w)
    return OracleReport(operation='is_unbordered', input=str(word),
                        oracle_output=len(oracle_borders(word)) == 0,
                        fast_output=is_unbordered(word))


def check_all_borders(max_length=constants.BORDER_ORACLE_CAP, letters='01'):
    """
    Runs :py:func:`check_borders` on every word over **letters** of
    length 1 to **max_length**

    :raises OracleSizeCapError: if **max_length** exceeds
                                :py:const:`~prefal.constants.BORDER_ORACLE_CAP`
    :return: reports that disagree, empty when all agree
    :rtype: list
    """
    if max_length > constants.BORDER_ORACLE_CAP:
        raise OracleSizeCapError('oracle size cap: length ' +
                                 str(max_length) + ' exceeds ' +
                                 str(constants.BORDER_ORACLE_CAP))
    failures = []
    for n in range(1, max_length + 1):
        for chars in itertools.product(letters, repeat=n):
            report = check_borders(''.join(chars))
            if not report.agreed:
                failures.append(report)
    logger.debug('border oracle: %d disagreements up to length %d',
                 len(failures), max_length)
    return failures


def check_factorization(x, analysis, m, lookahead=None):
    """
    Compares greedy cut points of ``x[0..m)`` with the cuts every
    factorization of a longer prefix, last piece possibly cut, induces
    on ``[0, m]``

    :param x: word
    :type x: :py:class:`~prefal.words.InfiniteWord`
    :param analysis: result of a scan
    :type analysis: :py:class:`~prefal.prefactor.UPAnalysis`
    :param m: prefix length
    :type m: int
    :param lookahead: extra symbols parsed past **m**, defaults to the
                      longest unbordered prefix
    :rtype: :py:class:`OracleReport`
    """
    from prefal.prefactor import greedy_factorize
    if lookahead is None:
        lookahead = analysis.n
    end = m + lookahead
    cuts = [0]
    for piece in greedy_factorize(x, analysis, end):
        if cuts[-1] >= end:
            break
        cuts.append(min(end, cuts[-1] + len(piece)))
    fast = tuple(cut for cut in cuts if cut <= m)
    oracle_cuts = {tuple(cut for cut in all_cuts if cut <= m)
                   for all_cuts in oracle_factorization_cuts(
                       x.prefix(end), analysis.up_set, open_end=True)}
    oracle = fast if oracle_cuts == {fast} else tuple(sorted(oracle_cuts))
    return OracleReport(operation='greedy_factorize',
                        input=x.describe() + '[0..' + str(m) + ')',
                        oracle_output=oracle, fast_output=fast)


def check_frontier(x, coloring, n=16):
    """
    Compares frontier reachability with exhaustive splits of every
    prefix up to length **n**

    :return: one report per color
    :rtype: list
    """
    from prefal.coloring import frontier
    report = frontier(x, coloring, n, window=n)
    text = str(x.prefix(n))
    out = []
    for f in report.frontiers:
        oracle = tuple(p for p in range(n + 1)
                       if oracle_mono_factorizations(text[:p], coloring,
                                                     f.color))
        out.append(OracleReport(operation='frontier',
                                input=x.describe() + ' ' + f.color,
                                oracle_output=oracle,
                                fast_output=f.reachable))
    return out
