# -*- coding: utf-8 -*-

"""
Colorings of non-empty factors by first matching rule and a bounded
search for monochromatic factorizations.

A frontier report is bounded evidence, never a proof: it shows how far
factorizations into pieces of one color reach within a prefix.
"""

import logging
from dataclasses import dataclass

from prefal import constants
from prefal.exceptions import PrefalError
from prefal.prefactor import HierarchyStatus
from prefal.prefactor import HierarchyVerdict
from prefal.prefactor import UPAnalysis

logger = logging.getLogger(__name__)

PREDICATE_KINDS = ('prefix', 'prefix_end', 'ends_with', 'begins_with',
                   'shorter_than', 'word', 'factor', 'otherwise')
"""
Predicates a coloring rule may use
"""


@dataclass(frozen=True)
class Predicate(object):
    """
    Test on a piece ``u``. ``prefix`` and ``prefix_end`` refer to the
    reference word, ``factor`` to its materialized prefix
    """
    kind: str
    arg: str = None
    negate: bool = False

    def __post_init__(self):
        if self.kind not in PREDICATE_KINDS:
            raise PrefalError('unknown predicate ' + repr(self.kind))

    def __str__(self):
        text = self.kind if self.arg is None else \
            self.kind + '(' + self.arg + ')'
        return '!' + text if self.negate else text


@dataclass(frozen=True)
class Rule(object):
    predicate: Predicate
    color: str


@dataclass(frozen=True)
class Coloring(object):
    """
    Ordered rules, first match wins, last rule must be ``otherwise``.
    **reference** is the word ``prefix`` and ``factor`` refer to, the
    colored word itself when ``None``
    """
    rules: tuple
    reference: object = None

    def __post_init__(self):
        if not self.rules or self.rules[-1].predicate.kind != 'otherwise' \
                or self.rules[-1].predicate.negate:
            raise PrefalError('coloring must end with an otherwise rule')

    @property
    def colors(self):
        seen = []
        for rule in self.rules:
            if rule.color not in seen:
                seen.append(rule.color)
        return seen

    def describe(self):
        return ('coloring{ ' + '; '.join(str(r.predicate) + '->' + r.color
                                         for r in self.rules) + ' }')


def thue_morse_coloring():
    """
    ``0`` for prefixes ending with ``0``, ``1`` for prefixes ending with
    ``1``, ``2`` otherwise
    """
    return Coloring((Rule(Predicate('prefix_end', '0'), '0'),
                     Rule(Predicate('prefix_end', '1'), '1'),
                     Rule(Predicate('otherwise'), '2')))


def prefix_coloring():
    """
    Two colors: ``prefix`` and ``other``
    """
    return Coloring((Rule(Predicate('prefix'), 'prefix'),
                     Rule(Predicate('otherwise'), 'other')))


def separating_coloring(base):
    """
    ``inf`` on non-prefixes, the color of **base** on prefixes
    """
    return Coloring((Rule(Predicate('prefix', negate=True), 'inf'),) +
                    tuple(base.rules), base.reference)


def first_letter_coloring(reference, blank='*'):
    """
    Color of a factor of **reference** is its first letter, **blank** for
    words that are not factors
    """
    glyphs = reference.alphabet.glyphs
    return Coloring((Rule(Predicate('factor', negate=True), blank),) +
                    tuple(Rule(Predicate('begins_with', g), g)
                          for g in glyphs) +
                    (Rule(Predicate('otherwise'), blank),),
                    reference)


def _reference_text(coloring, x, length):
    ref = coloring.reference if coloring.reference is not None else x
    return str(ref.prefix(length))


def _matches(predicate, u, ref_text):
    kind = predicate.kind
    if kind == 'otherwise':
        result = True
    elif kind == 'prefix':
        result = ref_text.startswith(u)
    elif kind == 'prefix_end':
        result = ref_text.startswith(u) and u.endswith(predicate.arg)
    elif kind == 'ends_with':
        result = u.endswith(predicate.arg)
    elif kind == 'begins_with':
        result = u.startswith(predicate.arg)
    elif kind == 'shorter_than':
        result = len(u) < int(predicate.arg)
    elif kind == 'word':
        result = u == predicate.arg
    else:
        result = u in ref_text
    return result != predicate.negate


def color(coloring, u, x):
    """
    Color of non-empty word **u** in the context of word **x**

    :param coloring: coloring
    :type coloring: :py:class:`Coloring`
    :param u: piece
    :type u: :py:class:`~prefal.words.FiniteWord`
    :param x: context word for ``prefix`` predicates
    :type x: :py:class:`~prefal.words.InfiniteWord`
    :raises PrefalError: if **u** is empty
    :rtype: str
    """
    if len(u) == 0:
        raise PrefalError('empty word has no color')
    text = str(u)
    length = max(len(u), constants.DEFAULT_VERIFY_LENGTH)
    ref_text = _reference_text(coloring, x, length)
    for rule in coloring.rules:
        if _matches(rule.predicate, text, ref_text):
            return rule.color
    return coloring.rules[-1].color


def _z_array(text):
    n = len(text)
    z = [0] * n
    if n:
        z[0] = n
    left = right = 0
    for i in range(1, n):
        if i < right:
            z[i] = min(right - i, z[i - left])
        while i + z[i] < n and text[z[i]] == text[i + z[i]]:
            z[i] += 1
        if i + z[i] > right:
            left, right = i, i + z[i]
    return z


class _PieceColorer(object):
    """
    Colors of pieces ``x[q..p)`` with prefix tests answered from one
    longest common prefix table
    """

    def __init__(self, coloring, x, n):
        self._coloring = coloring
        self._text = str(x.prefix(n))
        ref = coloring.reference
        if ref is None:
            lcp = _z_array(self._text)
            self._ref_text = self._text
        else:
            self._ref_text = str(ref.prefix(
                max(n, constants.DEFAULT_VERIFY_LENGTH)))
            # separator outside every alphabet
            joined = self._ref_text[:n] + '\x00' + self._text
            z = _z_array(joined)
            lcp = z[n + 1:]
        self._lcp = lcp
        self._cache = {}

    def color(self, q, p):
        key = (q, p)
        if key not in self._cache:
            self._cache[key] = self._evaluate(q, p)
        return self._cache[key]

    def _evaluate(self, q, p):
        text = self._text
        is_prefix = p - q <= self._lcp[q]
        for rule in self._coloring.rules:
            pred = rule.predicate
            kind = pred.kind
            if kind == 'otherwise':
                hit = True
            elif kind == 'prefix':
                hit = is_prefix
            elif kind == 'prefix_end':
                hit = is_prefix and text[p - 1] == pred.arg
            elif kind == 'ends_with':
                hit = text[p - 1] == pred.arg
            elif kind == 'begins_with':
                hit = text[q] == pred.arg
            elif kind == 'shorter_than':
                hit = p - q < int(pred.arg)
            elif kind == 'word':
                hit = text[q:p] == pred.arg
            else:
                hit = text[q:p] in self._ref_text
            if hit != pred.negate:
                return rule.color
        return self._coloring.rules[-1].color


@dataclass(frozen=True)
class ColorFrontier(object):
    """
    Cut points reachable by factorizations into pieces of **color**
    """
    color: str
    reachable: tuple
    last: int
    dead: bool

    @property
    def dead_at(self):
        return self.last if self.dead else None


@dataclass(frozen=True)
class FrontierReport(object):
    """
    Per color frontiers over a prefix of length **length**, pieces at
    most **window** long. Always bounded evidence
    """
    length: int
    window: int
    frontiers: tuple
    note: str = None

    def frontier(self, c):
        for f in self.frontiers:
            if f.color == c:
                return f
        raise PrefalError('no color ' + repr(c) + ' in report')

    @property
    def all_dead(self):
        return all(f.dead for f in self.frontiers)


def frontier(x, coloring, n, window=None):
    """
    Dynamic programming over cut points: for each color ``c``,
    ``R_c = {0} u {p | q in R_c, color(x[q..p)) = c}`` with pieces at
    most **window** long. A color is dead when no reachable cut point
    lies in ``(n - window, n]``.

    :param x: word
    :type x: :py:class:`~prefal.words.InfiniteWord`
    :param coloring: coloring
    :type coloring: :py:class:`Coloring`
    :param n: prefix length
    :type n: int
    :param window: longest piece and liveness window, defaults to
                   ``n // 4``
    :type window: int
    :rtype: :py:class:`FrontierReport`
    """
    if n < 1:
        raise PrefalError('frontier length must be at least 1')
    if window is None:
        window = max(1, n // 4)
    colorer = _PieceColorer(coloring, x, n)
    frontiers = []
    for c in coloring.colors:
        reach = [False] * (n + 1)
        reach[0] = True
        for q in range(n):
            if not reach[q]:
                continue
            for p in range(q + 1, min(n, q + window) + 1):
                if not reach[p] and colorer.color(q, p) == c:
                    reach[p] = True
        points = tuple(p for p in range(n + 1) if reach[p])
        last = points[-1]
        frontiers.append(ColorFrontier(color=c, reachable=points, last=last,
                                       dead=last <= n - window))
        logger.debug('color %s reaches %d of %d', c, last, n)
    return FrontierReport(length=n, window=window, frontiers=tuple(frontiers))


@dataclass(frozen=True)
class SeparatingWitness(object):
    coloring: Coloring
    report: FrontierReport


def refute_via_P1(x, verdict, n=128, window=None):
    """
    For a word certified outside ``P1``, the prefix/non-prefix coloring
    and the frontier report showing its prefix color die

    :param verdict: ``NotInP_n`` verdict with ``n = 1`` or an analysis
                    carrying a refutation
    :type verdict: :py:class:`~prefal.prefactor.HierarchyVerdict` or
                   :py:class:`~prefal.prefactor.UPAnalysis`
    :raises PrefalError: if **verdict** does not refute ``P1``
    :rtype: :py:class:`SeparatingWitness`
    """
    refutes = False
    if isinstance(verdict, HierarchyVerdict):
        refutes = (verdict.status == HierarchyStatus.NOT_IN_P_N and
                   verdict.level == 1)
    elif isinstance(verdict, UPAnalysis):
        refutes = verdict.refutation is not None
    if not refutes:
        raise PrefalError('verdict does not refute P1 for ' + x.describe())
    coloring = prefix_coloring()
    report = frontier(x, coloring, n, window)
    if not report.frontier('prefix').dead:
        logger.warning('prefix color of %s still alive at %d', x.describe(), n)
    return SeparatingWitness(coloring, report)
