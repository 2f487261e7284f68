# -*- coding: utf-8 -*-

"""
Finite word algorithms and the lazy infinite word abstraction.

Letters are dense integer indices into an :py:class:`Alphabet`; glyphs
are only used for parsing and rendering.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass
from itertools import cycle

import numpy as np

from prefal.exceptions import PrefalError
from prefal.exceptions import BorderError
from prefal.exceptions import NotSturmianError
from prefal.exceptions import WordGenerationError
from prefal.exceptions import WordSpecError

logger = logging.getLogger(__name__)

CODE_GLYPHS = '123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ'
"""
Glyphs used, in order, for code letters of derived words
"""


@dataclass(frozen=True)
class Alphabet(object):
    """
    Ordered tuple of single character glyphs. Letter ``i``
    renders as ``glyphs[i]``
    """
    glyphs: tuple

    @property
    def size(self):
        return len(self.glyphs)

    def index(self, glyph):
        """
        Gets letter index of **glyph**

        :raises WordSpecError: if **glyph** is not in this alphabet
        """
        try:
            return self.glyphs.index(glyph)
        except ValueError:
            raise WordSpecError('letter ' + repr(glyph) +
                                ' is not in alphabet ' +
                                ''.join(self.glyphs))

    def glyph(self, letter):
        return self.glyphs[letter]

    def render(self, symbols):
        return ''.join(self.glyphs[s] for s in symbols)

    def extended(self, glyphs):
        """
        Gets alphabet with any glyph of **glyphs** not already present
        appended at the end, existing indices are unchanged
        """
        extra = []
        for g in glyphs:
            if g not in self.glyphs and g not in extra:
                extra.append(g)
        if not extra:
            return self
        return Alphabet(self.glyphs + tuple(extra))

    @staticmethod
    def of(text):
        """
        Alphabet made of the sorted distinct characters of **text**
        """
        return Alphabet(tuple(sorted(set(text))))

    @staticmethod
    def code(size):
        """
        Code alphabet ``1..size`` used by derived words
        """
        if size > len(CODE_GLYPHS):
            raise PrefalError('code alphabet of size ' + str(size) +
                              ' exceeds available glyphs')
        return Alphabet(tuple(CODE_GLYPHS[:size]))


BINARY = Alphabet(('0', '1'))
"""
The alphabet ``{0, 1}``
"""


@dataclass(frozen=True)
class FiniteWord(object):
    """
    Immutable finite word over an :py:class:`Alphabet`
    """
    symbols: tuple
    alphabet: Alphabet

    def __post_init__(self):
        if self.symbols and (max(self.symbols) >= self.alphabet.size or
                             min(self.symbols) < 0):
            raise WordSpecError('symbol outside alphabet ' +
                                ''.join(self.alphabet.glyphs))

    @staticmethod
    def from_string(text, alphabet=None):
        """
        Builds word from glyph string **text**. If **alphabet** is
        ``None`` the sorted distinct characters of **text** are used
        """
        if alphabet is None:
            alphabet = Alphabet.of(text)
        return FiniteWord(tuple(alphabet.index(c) for c in text), alphabet)

    def __len__(self):
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return FiniteWord(self.symbols[item], self.alphabet)
        return self.symbols[item]

    def __add__(self, other):
        if other.alphabet != self.alphabet:
            raise PrefalError('cannot concatenate words over different '
                              'alphabets')
        return FiniteWord(self.symbols + other.symbols, self.alphabet)

    def __str__(self):
        return self.alphabet.render(self.symbols)

    def is_prefix_of(self, other):
        return other.symbols[:len(self.symbols)] == self.symbols

    def count(self, letter):
        return self.symbols.count(letter)


def _symbols_of(w):
    if isinstance(w, FiniteWord):
        return w.symbols
    return tuple(w)


def border_table(w):
    """
    Failure function of **w**: entry ``i`` is the length of the longest
    proper border of ``w[0..i]``

    :param w: word
    :type w: :py:class:`FiniteWord` or sequence of letters
    :rtype: :py:class:`numpy.ndarray`
    """
    symbols = _symbols_of(w)
    table = np.zeros(len(symbols), dtype=np.int64)
    k = 0
    for i in range(1, len(symbols)):
        while k > 0 and symbols[i] != symbols[k]:
            k = int(table[k - 1])
        if symbols[i] == symbols[k]:
            k += 1
        table[i] = k
    return table


def shortest_border(w):
    """
    Gets the shortest non-empty proper border of **w**

    :param w: word
    :type w: :py:class:`FiniteWord`
    :raises BorderError: if **w** is empty
    :return: the border or ``None`` if **w** is unbordered
    :rtype: :py:class:`FiniteWord`
    """
    if len(w) == 0:
        raise BorderError('empty word has no border status')
    table = border_table(w)
    b = int(table[-1])
    if b == 0:
        return None
    # follow failure links down to the last non-zero border
    while int(table[b - 1]) > 0:
        b = int(table[b - 1])
    return w[:b]


def is_unbordered(w):
    """
    Tells if **w** has no non-empty proper border. Single letters are
    unbordered

    :raises BorderError: if **w** is empty
    :rtype: bool
    """
    if len(w) == 0:
        raise BorderError('empty word has no border status')
    return int(border_table(w)[-1]) == 0


def unbordered_prefix_lengths(w):
    """
    Lengths of all unbordered prefixes of **w** from one
    failure function pass, ascending
    """
    table = border_table(w)
    return [int(i) + 1 for i in np.flatnonzero(table == 0)]


def find_square(w):
    """
    Finds leftmost square ``vv`` in **w**

    :return: ``(position, period)`` or ``None`` if **w** is square-free
    :rtype: tuple
    """
    symbols = _symbols_of(w)
    n = len(symbols)
    for i in range(n):
        for p in range(1, (n - i) // 2 + 1):
            if symbols[i:i + p] == symbols[i + p:i + 2 * p]:
                return i, p
    return None


def word_isomorphic(x, y):
    """
    Looks for a letter bijection mapping **x** onto **y** symbol by symbol

    :return: mapping of glyphs of **x** to glyphs of **y** or ``None``
    :rtype: dict
    """
    if len(x) != len(y):
        return None
    forward = {}
    backward = {}
    for a, b in zip(x.symbols, y.symbols):
        if forward.setdefault(a, b) != b or backward.setdefault(b, a) != a:
            return None
    return {x.alphabet.glyph(a): y.alphabet.glyph(b)
            for a, b in sorted(forward.items())}


@dataclass(frozen=True)
class FactorStats(object):
    """
    Factor statistics of length **length** over a prefix of
    length **window**. Counts are lower bounds on the factor complexity
    """
    length: int
    window: int
    count: int
    left_special: tuple
    right_special: tuple
    bispecial: tuple


@dataclass(frozen=True)
class BalanceReport(object):
    """
    Result of :py:func:`is_balanced`, **witness** holds the first
    pair of equal length factors whose count of letter ``0`` differ
    by more than one
    """
    balanced: bool
    bound: int
    witness: tuple = None


class InfiniteWord(object):
    """
    Deterministic lazy infinite word. Subclasses implement
    :py:meth:`_generate` as a generator of letters and
    :py:meth:`describe`.

    Symbols are kept in an append-only buffer, so :py:meth:`prefix`
    is idempotent and ``prefix(m)`` is a prefix of ``prefix(n)``
    for ``m <= n``. Buffer extension is single writer.
    """

    def __init__(self, alphabet):
        """
        Constructor

        :param alphabet: alphabet of the word
        :type alphabet: :py:class:`Alphabet`
        """
        self._alphabet = alphabet
        self._buffer = []
        self._source = None
        self._failure = None

    @property
    def alphabet(self):
        return self._alphabet

    def describe(self):
        """
        Structural description in word spec syntax

        :raises PrefalError: will always raise this
        """
        raise PrefalError('Must be implemented by subclass')

    def _generate(self):
        raise PrefalError('Must be implemented by subclass')

    def __str__(self):
        return self.describe()

    def _extend(self, n):
        if self._source is None:
            self._source = self._generate()
        target = max(n, 2 * len(self._buffer))
        while len(self._buffer) < target and self._failure is None:
            try:
                self._buffer.append(next(self._source))
            except StopIteration:
                self._failure = WordGenerationError(
                    self.describe() + ' stopped after ' +
                    str(len(self._buffer)) + ' symbols')
            except PrefalError as e:
                # kept and re-raised once a caller needs the missing symbols
                self._failure = e
        if len(self._buffer) < n:
            raise self._failure

    def prefix(self, n):
        """
        Gets the first **n** symbols

        :param n: length
        :type n: int
        :raises WordGenerationError: if the generator cannot produce **n**
                                     symbols
        :rtype: :py:class:`FiniteWord`
        """
        if n < 0:
            raise PrefalError('prefix length must be non-negative: ' + str(n))
        if len(self._buffer) < n:
            self._extend(n)
        return FiniteWord(tuple(self._buffer[:n]), self._alphabet)

    def letter_at(self, i):
        if len(self._buffer) <= i:
            self._extend(i + 1)
        return self._buffer[i]

    def slice(self, start, stop):
        """
        Gets factor ``x[start..stop)``
        """
        if len(self._buffer) < stop:
            self._extend(stop)
        return FiniteWord(tuple(self._buffer[start:stop]), self._alphabet)

    def iter_symbols(self):
        i = 0
        while True:
            yield self.letter_at(i)
            i += 1


class Periodic(InfiniteWord):
    """
    The word ``w w w ...``
    """

    def __init__(self, word):
        if len(word) == 0:
            raise WordSpecError('periodic word needs a non-empty period')
        super().__init__(word.alphabet)
        self.word = word

    def describe(self):
        return 'periodic(' + str(self.word) + ')'

    def _generate(self):
        return cycle(self.word.symbols)


class Concat(InfiniteWord):
    """
    Finite word **head** followed by infinite word **inner**. New
    glyphs of **head** are appended to the alphabet of **inner**
    """

    def __init__(self, head, inner):
        alphabet = inner.alphabet.extended(head.alphabet.glyphs)
        super().__init__(alphabet)
        self.head = FiniteWord(tuple(alphabet.index(head.alphabet.glyph(s))
                                     for s in head.symbols), alphabet)
        self.inner = inner

    def describe(self):
        return 'concat(' + str(self.head) + ';' + self.inner.describe() + ')'

    def _generate(self):
        yield from self.head.symbols
        yield from self.inner.iter_symbols()


@dataclass(frozen=True)
class Directive(object):
    """
    Eventually periodic directive sequence over ``{0, 1}``,
    **preperiod** followed by **period** repeated forever
    """
    preperiod: tuple
    period: tuple

    def validate(self):
        """
        :raises NotSturmianError: if the sequence is eventually constant
        """
        if len(self.period) == 0:
            raise NotSturmianError('directive needs a non-empty period')
        if len(set(self.period)) < 2:
            raise NotSturmianError('ultimately periodic word, not Sturmian')
        return self

    def letter(self, i):
        if i < len(self.preperiod):
            return self.preperiod[i]
        return self.period[(i - len(self.preperiod)) % len(self.period)]

    def first(self):
        return self.letter(0)

    def tail(self):
        """
        Directive without its first letter
        """
        if self.preperiod:
            return Directive(self.preperiod[1:], self.period)
        return Directive((), self.period[1:] + self.period[:1])

    def prepend(self, letter):
        return Directive((letter,) + self.preperiod, self.period)

    def exchanged(self):
        return Directive(tuple(1 - a for a in self.preperiod),
                         tuple(1 - a for a in self.period))

    def canonical(self):
        """
        Shortest equivalent representation, used for comparisons
        """
        period = self.period
        for p in range(1, len(period) + 1):
            repeats = len(period) // p
            if len(period) % p == 0 and period[:p] * repeats == period:
                period = period[:p]
                break
        pre = self.preperiod
        while pre and pre[-1] == period[-1]:
            pre = pre[:-1]
            period = period[-1:] + period[:-1]
        return Directive(pre, period)

    def __str__(self):
        return (''.join(str(a) for a in self.preperiod) + '(' +
                ''.join(str(a) for a in self.period) + ')*')


class StandardSturmian(InfiniteWord):
    """
    Standard Sturmian word ``lim L_a1 o L_a2 o ... o L_an`` for an
    eventually periodic directive ``a1 a2 ...`` with
    ``L_a: a -> a, b -> ab``.

    Writing ``P_n = L_a1 o ... o L_an``, ``P_(n+1)(a) = P_n(a)`` and
    ``P_(n+1)(b) = P_n(a) P_n(b)`` for ``a = a_(n+1)``; ``P_n(a_n)`` is
    always a prefix of the limit.
    """

    def __init__(self, directive):
        super().__init__(BINARY)
        self.directive = directive.validate()

    def describe(self):
        return 'sturm_std(' + str(self.directive) + ')'

    def _generate(self):
        images = {0: [0], 1: [1]}
        emitted = 0
        i = 0
        while True:
            a = self.directive.letter(i)
            images[1 - a] = images[a] + images[1 - a]
            known = images[a]
            while emitted < len(known):
                yield known[emitted]
                emitted += 1
            i += 1


def factor_stats(x, n, window):
    """
    Statistics over the distinct factors of length **n** occurring in
    the first **window** symbols of **x**.

    The counts never claim exactness; for the generators in the corpus
    a window of ``64 * n`` is enough for words of complexity ``n + 1``
    and ``2n + 1``.

    :raises PrefalError: if **window** < **n**
    :rtype: :py:class:`FactorStats`
    """
    if n < 1:
        raise PrefalError('factor length must be positive: ' + str(n))
    if window < n:
        raise PrefalError('window ' + str(window) +
                          ' is shorter than factor length ' + str(n))
    w = x.prefix(window)
    arr = np.asarray(w.symbols, dtype=np.int64)
    factors = np.unique(np.lib.stride_tricks.sliding_window_view(arr, n),
                        axis=0)
    lefts = defaultdict(set)
    rights = defaultdict(set)
    if window > n:
        extended = np.unique(
            np.lib.stride_tricks.sliding_window_view(arr, n + 1), axis=0)
        for row in extended:
            row = tuple(int(v) for v in row)
            lefts[row[1:]].add(row[0])
            rights[row[:-1]].add(row[-1])

    def _words(keys):
        return tuple(FiniteWord(k, w.alphabet) for k in sorted(keys))

    left = {k for k, v in lefts.items() if len(v) > 1}
    right = {k for k, v in rights.items() if len(v) > 1}
    logger.debug('%d factors of length %d in window %d',
                 len(factors), n, window)
    return FactorStats(length=n, window=window, count=len(factors),
                       left_special=_words(left),
                       right_special=_words(right),
                       bispecial=_words(left & right))


def is_balanced(x, bound):
    """
    Checks that any two factors of equal length of the first **bound**
    symbols of binary word **x** contain a number of ``0`` letters
    differing by at most one

    :raises PrefalError: if **x** is not binary or **bound** < 2
    :rtype: :py:class:`BalanceReport`
    """
    if x.alphabet.size != 2:
        raise PrefalError('balance is only defined for binary words, '
                          'alphabet has ' + str(x.alphabet.size) + ' letters')
    if bound < 2:
        raise PrefalError('balance bound must be at least 2')
    w = x.prefix(bound)
    arr = np.asarray(w.symbols, dtype=np.int64)
    sums = np.concatenate(([0], np.cumsum(arr == 0)))
    for k in range(1, bound):
        counts = sums[k:] - sums[:-k]
        if counts.max() - counts.min() > 1:
            i = int(np.argmax(counts))
            j = int(np.argmin(counts))
            return BalanceReport(False, bound, (w[i:i + k], w[j:j + k]))
    return BalanceReport(True, bound)


def occurrences(x, u, bound):
    """
    Start positions of **u** in the first **bound** symbols of **x**
    """
    w = np.asarray(x.prefix(bound).symbols, dtype=np.int64)
    if len(u) > len(w):
        return np.zeros(0, dtype=np.int64)
    windows = np.lib.stride_tricks.sliding_window_view(w, len(u))
    return np.flatnonzero((windows == np.asarray(u.symbols)).all(axis=1))


def uniform_recurrence_gap(x, u, bound):
    """
    Largest distance between consecutive occurrence starts of **u** in
    the first **bound** symbols of **x**, counting the distance from
    position ``0`` to the first occurrence

    :raises PrefalError: if **u** is empty or longer than **bound**
    :return: the gap or ``None`` if **u** occurs less than twice
    :rtype: int
    """
    if len(u) == 0:
        raise PrefalError('recurrence gap needs a non-empty factor')
    if bound < len(u):
        raise PrefalError('bound ' + str(bound) + ' is shorter than factor')
    occ = occurrences(x, u, bound)
    if len(occ) < 2:
        return None
    return int(np.diff(np.concatenate(([0], occ))).max())


def is_prefixal_factorization(x, pieces):
    """
    Tells if **pieces** are non-empty prefixes of **x** whose
    concatenation is a prefix of **x**
    """
    total = sum(len(p) for p in pieces)
    w = x.prefix(total)
    pos = 0
    for p in pieces:
        if len(p) == 0 or not p.is_prefix_of(w):
            return False
        if w.symbols[pos:pos + len(p)] != p.symbols:
            return False
        pos += len(p)
    return True
