# -*- coding: utf-8 -*-

"""
Unbordered prefixes, the greedy unbordered prefix factorization,
derived words and the hierarchy ``P1 > P2 > ... > Pinf``.
"""

import bisect
import logging
from dataclasses import dataclass
from dataclasses import field
from dataclasses import replace
from enum import Enum

from prefal import constants
from prefal.exceptions import DerivedMorphismError
from prefal.exceptions import FactorizationStallError
from prefal.exceptions import PrefalError
from prefal.exceptions import WordGenerationError
from prefal.morphic import CodeTable
from prefal.morphic import MorphicFixedPoint
from prefal.morphic import decode
from prefal.morphic import derived_morphism
from prefal.words import FiniteWord
from prefal.words import InfiniteWord
from prefal.words import Periodic
from prefal.words import find_square
from prefal.words import unbordered_prefix_lengths
from prefal.words import word_isomorphic

logger = logging.getLogger(__name__)


class Completeness(Enum):
    """
    Whether the unbordered prefixes found are all of them
    """
    CERTIFIED = 'Certified'
    BOUNDED_ONLY = 'BoundedOnly'


@dataclass(frozen=True)
class Certificate(object):
    """
    Why an analysis is complete. **derived_word** is the structural
    derived word the certificate exhibits, if any
    """
    kind: str
    detail: str
    derived_word: InfiniteWord = field(default=None, compare=False)
    derived_morphism: object = None


@dataclass(frozen=True)
class UPAnalysis(object):
    """
    Unbordered prefixes of a word up to **scan_bound**, the pieces
    **up_prime** used by its factorization ordered by first
    occurrence, and the code table **phi** built from them.

    **verified** is how far the greedy factorization was run,
    **stall** where it stalled if it did. **refutation** explains a
    certified proof that the word has no prefixal factorization.
    """
    up_set: tuple
    n: int
    up_prime: tuple
    phi: CodeTable
    completeness: Completeness
    scan_bound: int
    verify_length: int
    verified: int
    stall: int = None
    certificate: Certificate = None
    refutation: str = None

    @property
    def certified(self):
        return self.completeness == Completeness.CERTIFIED

    def lengths(self):
        return [len(u) for u in self.up_set]


def _lcp(a, b):
    n = min(len(a), len(b))
    i = 0
    while i < n and a[i] == b[i]:
        i += 1
    return i


def _greedy_cuts(x, lengths):
    """
    Yields ``(position, length)`` of the greedy factorization of **x**
    over unbordered prefixes with the given ascending **lengths**: at
    each position the longest one that is a prefix of the remaining
    suffix. Lengths are distinct so the choice is unique.
    """
    longest = lengths[-1]
    head = x.prefix(longest).symbols
    pos = 0
    while True:
        try:
            window = x.slice(pos, pos + longest).symbols
        except FactorizationStallError as e:
            raise WordGenerationError('input word stalls: ' + str(e)) from e
        k = bisect.bisect_right(lengths, _lcp(window, head))
        if k == 0:
            raise FactorizationStallError(pos)
        yield pos, lengths[k - 1]
        pos += lengths[k - 1]


def scan_up(x, scan_bound=constants.DEFAULT_SCAN_BOUND,
            verify_length=constants.DEFAULT_VERIFY_LENGTH):
    """
    Finds all unbordered prefixes of **x** of length at most
    **scan_bound** in one failure function pass, then runs the greedy
    factorization over the first **verify_length** symbols to collect
    the pieces actually used, in order of first occurrence.

    :param x: word
    :type x: :py:class:`~prefal.words.InfiniteWord`
    :param scan_bound: longest prefix scanned
    :type scan_bound: int
    :param verify_length: prefix length factorized
    :type verify_length: int
    :raises PrefalError: if **scan_bound** < 2
    :return: analysis with completeness ``BoundedOnly``
    :rtype: :py:class:`UPAnalysis`
    """
    if scan_bound < 2:
        raise PrefalError('scan bound must be at least 2')
    w = x.prefix(scan_bound)
    lengths = unbordered_prefix_lengths(w)
    up_set = tuple(w[:k] for k in lengths)

    used = []
    stall = None
    verified = 0
    try:
        for pos, k in _greedy_cuts(x, lengths):
            if pos >= verify_length:
                break
            if k not in used:
                used.append(k)
            verified = pos + k
    except FactorizationStallError as e:
        stall = e.position
        logger.debug('factorization of %s stalls at %d', x.describe(),
                     stall)
    except WordGenerationError as e:
        logger.info('factorization of %s verified to %d only: %s',
                    x.describe(), verified, str(e))
    up_prime = tuple(w[:k] for k in used)
    logger.debug('%s: N >= %d, %d unbordered prefixes, %d used',
                 x.describe(), lengths[-1], len(up_set), len(up_prime))
    return UPAnalysis(up_set=up_set, n=lengths[-1], up_prime=up_prime,
                      phi=CodeTable(up_prime),
                      completeness=Completeness.BOUNDED_ONLY,
                      scan_bound=scan_bound, verify_length=verify_length,
                      verified=min(verified, verify_length), stall=stall)


def greedy_factorize(x, analysis, m):
    """
    First **m** pieces ``U0 U1 ...`` of the greedy factorization of
    **x** over ``analysis.up_set``; ``U0`` is the longest unbordered
    prefix found

    :raises FactorizationStallError: if no member matches at some point
    :rtype: list
    """
    if not analysis.up_set:
        raise PrefalError('analysis has no unbordered prefixes')
    pieces = []
    if m <= 0:
        return pieces
    for pos, k in _greedy_cuts(x, analysis.lengths()):
        pieces.append(analysis.up_set[analysis.lengths().index(k)])
        if len(pieces) == m:
            break
    return pieces


class DerivedWord(InfiniteWord):
    """
    Lazy derived word: code letters of the greedy factorization of
    **word** under ``analysis.phi``
    """

    def __init__(self, word, analysis):
        super().__init__(analysis.phi.alphabet)
        self.word = word
        self.analysis = analysis
        self._codes = {len(u): i for i, u in enumerate(analysis.up_prime)}

    def describe(self):
        return 'derived(' + self.word.describe() + ')'

    def _generate(self):
        try:
            for pos, k in _greedy_cuts(self.word, self.analysis.lengths()):
                if k not in self._codes:
                    raise WordGenerationError('piece of length ' + str(k) +
                                              ' at ' + str(pos) +
                                              ' is not in the code table')
                yield self._codes[k]
        except FactorizationStallError as e:
            raise WordGenerationError('derived word undefined past the '
                                      'stall of ' + self.word.describe() +
                                      ' at ' + str(e.position)) from e


def derive(x, analysis):
    """
    The derived word of **x**. Certified analyses hand back the
    structural derived word they exhibit, otherwise the word is decoded
    lazily from the greedy factorization and stalls surface when its
    symbols are requested

    :rtype: :py:class:`~prefal.words.InfiniteWord`
    """
    if analysis.certificate is not None and \
            analysis.certificate.derived_word is not None:
        return analysis.certificate.derived_word
    return DerivedWord(x, analysis)


def _smallest_period(w):
    n = len(w)
    for p in range(1, n + 1):
        if n % p == 0 and w.symbols[:p] * (n // p) == w.symbols:
            return p
    return n


def _certify_periodic(x, analysis):
    p = _smallest_period(x.word)
    if p > analysis.scan_bound:
        return analysis
    # the UP factorization refines the prefixal factorization v v v ...
    code = decode(analysis.phi, x.prefix(p))
    if code is None:
        return analysis
    return replace(analysis, completeness=Completeness.CERTIFIED,
                   certificate=Certificate(
                       kind='periodic',
                       detail='prefixal factorization (' +
                              str(x.prefix(p)) + ')^w',
                       derived_word=Periodic(code)))


def _certify_morphic(x, analysis, verify_length):
    try:
        tau = derived_morphism(x.morphism, analysis.phi)
    except DerivedMorphismError as e:
        logger.info('no certificate for %s: %s', x.describe(), str(e))
        return analysis
    if not tau.is_prolongable(0):
        logger.info('derived morphism %s of %s is not prolongable',
                    tau, x.describe())
        return analysis
    y = MorphicFixedPoint(tau, 0)
    m = 1
    while len(analysis.phi.encode(y.prefix(m).symbols)) < verify_length:
        m *= 2
    image = analysis.phi.encode(y.prefix(m).symbols)[:verify_length]
    if image != x.prefix(verify_length):
        logger.warning('derived morphism of %s closes but its fixed point '
                       'does not reproduce the word', x.describe())
        return analysis
    return replace(analysis, completeness=Completeness.CERTIFIED,
                   certificate=Certificate(kind='derived-morphism',
                                           detail=str(tau),
                                           derived_word=y,
                                           derived_morphism=tau))


def certify_up(x, analysis, verify_length=None):
    """
    Tries to prove that ``analysis.up_set`` is all of ``UP(x)``.
    Periodic words exhibit their periodic prefixal factorization,
    morphic fixed points a closing derived morphism whose fixed point
    reproduces **x**, Sturmian specs are decided exactly. Any prefixal
    factorization bounds unbordered prefix lengths by its first piece.
    Never upgrades wrongly; on failure the analysis comes back as is.

    :rtype: :py:class:`UPAnalysis`
    """
    if verify_length is None:
        verify_length = analysis.verify_length
    if analysis.certified or analysis.refutation is not None:
        return analysis
    if isinstance(x, Periodic):
        return _certify_periodic(x, analysis)
    if isinstance(x, MorphicFixedPoint):
        return _certify_morphic(x, analysis, verify_length)
    from prefal import sturmian
    if isinstance(x, sturmian.SturmianWord):
        return sturmian.certify_analysis(x, analysis)
    return analysis


@dataclass(frozen=True)
class ChainLevel(object):
    index: int
    word: InfiniteWord
    analysis: UPAnalysis


@dataclass(frozen=True)
class NuEntry(object):
    """
    ``N`` of one level, exact only for certified levels
    """
    value: int
    exact: bool

    def __str__(self):
        return str(self.value) if self.exact else '>=' + str(self.value)


@dataclass(frozen=True)
class DerivedChain(object):
    """
    Levels ``x, delta(x), delta^2(x), ...`` with ``nu`` and the first
    pair ``(j, k)`` of certified levels whose prefixes are isomorphic
    """
    levels: tuple
    nu: tuple
    cycle: tuple = None
    failure: str = None


def _check_square_free(word, bound, index):
    prefix = word.prefix(bound)
    square = find_square(prefix)
    if square is not None:
        raise PrefalError('level ' + str(index) + ' is flagged square-free '
                          'but has a square of period ' + str(square[1]) +
                          ' at ' + str(square[0]))
    return ('level flagged square-free (no square in prefix of length ' +
            str(bound) + '); the shortest piece of a prefixal '
            'factorization followed by the next piece forms a square')


def _find_cycle(levels):
    prefixes = []
    for level in levels:
        if not level.analysis.certified:
            break
        try:
            prefixes.append(level.word.prefix(constants.CYCLE_PREFIX_LENGTH))
        except PrefalError as e:
            logger.info('cannot realize level %d for cycle check: %s',
                        level.index, str(e))
            break
    for k in range(1, len(prefixes)):
        for j in range(k):
            if word_isomorphic(prefixes[j], prefixes[k]) is not None:
                return j, k
    return None


def derived_chain(x, depth, scan_bound=constants.DEFAULT_SCAN_BOUND,
                  verify_length=constants.DEFAULT_VERIFY_LENGTH,
                  square_free_levels=()):
    """
    Computes up to **depth** levels ``x, delta(x), ...``, stopping early
    when a level refutes ``P1`` or stalls, and looks for a cycle up to
    letter bijection among certified levels.

    :param square_free_levels: level indices known to be square-free
    :type square_free_levels: iterable
    :rtype: :py:class:`DerivedChain`
    """
    if depth < 1:
        raise PrefalError('depth must be at least 1')
    square_free_levels = set(square_free_levels)
    levels = []
    failure = None
    word = x
    for index in range(depth):
        try:
            analysis = certify_up(word, scan_up(word, scan_bound,
                                                verify_length))
        except WordGenerationError as e:
            failure = 'level ' + str(index) + ' cannot be generated: ' + str(e)
            logger.info(failure)
            break
        if index in square_free_levels and analysis.refutation is None:
            analysis = replace(analysis, refutation=_check_square_free(
                word, scan_bound, index))
        levels.append(ChainLevel(index, word, analysis))
        logger.debug('level %d: N=%d %s', index, analysis.n,
                     analysis.completeness.value)
        if analysis.refutation is not None:
            break
        if analysis.stall is not None and not analysis.certified:
            break
        if index + 1 < depth:
            word = derive(word, analysis)
    nu = tuple(NuEntry(level.analysis.n, level.analysis.certified)
               for level in levels)
    return DerivedChain(levels=tuple(levels), nu=nu,
                        cycle=_find_cycle(levels), failure=failure)


class HierarchyStatus(Enum):
    IN_P_INFINITY_CERTIFIED = 'InPInfinity_Certified'
    NOT_IN_P_N = 'NotInP_n'
    BOUNDED_MEMBER = 'BoundedMember'
    UNRESOLVED = 'Unresolved'


@dataclass(frozen=True)
class HierarchyVerdict(object):
    """
    Outcome of :py:func:`classify_hierarchy`. **level** is ``n`` for
    ``NotInP_n`` and ``BoundedMember`` (membership in ``P_n`` shown up
    to the bounds) and the stalled level for ``Unresolved``
    """
    status: HierarchyStatus
    level: int = None
    evidence: str = ''
    certified: bool = False
    chain: DerivedChain = field(default=None, compare=False)


def classify_hierarchy(x, depth=constants.DEFAULT_DEPTH,
                       scan_bound=constants.DEFAULT_SCAN_BOUND,
                       verify_length=constants.DEFAULT_VERIFY_LENGTH,
                       square_free_levels=()):
    """
    Places **x** in the hierarchy. A cycle of certified levels gives
    membership in every ``P_n``; a certified refutation of ``P1`` at
    level ``k`` gives ``NotInP_n`` with ``n = k + 1``; a stall of an
    uncertified level is unresolved, anything else is bounded evidence.

    :rtype: :py:class:`HierarchyVerdict`
    """
    chain = derived_chain(x, depth, scan_bound, verify_length,
                          square_free_levels)
    for level in chain.levels:
        if level.analysis.refutation is not None:
            return HierarchyVerdict(HierarchyStatus.NOT_IN_P_N,
                                    level=level.index + 1,
                                    evidence='level ' + str(level.index) +
                                             ': ' + level.analysis.refutation,
                                    certified=True, chain=chain)
    if chain.cycle is not None:
        j, k = chain.cycle
        return HierarchyVerdict(HierarchyStatus.IN_P_INFINITY_CERTIFIED,
                                evidence='certified levels ' + str(j) +
                                         ' and ' + str(k) +
                                         ' are isomorphic',
                                certified=True, chain=chain)
    last = chain.levels[-1] if chain.levels else None
    if last is None or chain.failure is not None or \
            (last.analysis.stall is not None and not last.analysis.certified):
        where = last.index if last is not None else 0
        reason = chain.failure
        if reason is None:
            reason = ('greedy factorization stalls at ' +
                      str(last.analysis.stall) + ' with scan bound ' +
                      str(scan_bound))
        return HierarchyVerdict(HierarchyStatus.UNRESOLVED, level=where,
                                evidence=reason, chain=chain)
    certified = all(level.analysis.certified for level in chain.levels)
    return HierarchyVerdict(HierarchyStatus.BOUNDED_MEMBER,
                            level=len(chain.levels),
                            evidence='factorizations verified to ' +
                                     str(verify_length) + ' on ' +
                                     str(len(chain.levels)) + ' levels',
                            certified=certified, chain=chain)


def refine_prefixal(x, pieces, analysis):
    """
    For each piece ``V_i`` of a prefixal factorization of a prefix of
    **x**, the factor ``v_i`` of the derived word with
    ``phi(v_i) = V_i``. Every cut point of the pieces is a cut point of
    the unbordered prefix factorization.

    :raises PrefalError: if a piece is not a prefix of **x** or a piece
                         boundary falls inside an unbordered prefix
    :rtype: list
    """
    if not analysis.certified:
        raise PrefalError('refinement needs a certified analysis')
    total = sum(len(p) for p in pieces)
    head = x.prefix(max([len(p) for p in pieces] + [0]))
    for p in pieces:
        if len(p) == 0 or not p.is_prefix_of(head):
            raise PrefalError('piece ' + str(p) + ' is not a prefix of ' +
                              x.describe())
    codes = {len(u): i for i, u in enumerate(analysis.up_prime)}
    cuts = []
    if total > 0:
        for pos, k in _greedy_cuts(x, analysis.lengths()):
            cuts.append((pos + k, codes[k]))
            if pos + k >= total:
                break
    result = []
    start = 0
    i = 0
    for p in pieces:
        end = start + len(p)
        letters = []
        while i < len(cuts) and cuts[i][0] <= end:
            letters.append(cuts[i][1])
            i += 1
        if not letters or cuts[i - 1][0] != end:
            raise PrefalError('piece boundary at ' + str(end) +
                              ' falls inside an unbordered prefix')
        result.append(FiniteWord(tuple(letters), analysis.phi.alphabet))
        start = end
    return result
