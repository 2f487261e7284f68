# -*- coding: utf-8 -*-

"""
Morphisms, their fixed points and images, decoding over code tables
and the derived morphism.
"""

import logging
from dataclasses import dataclass

from prefal.exceptions import DecodingError
from prefal.exceptions import DerivedMorphismError
from prefal.exceptions import PrefalError
from prefal.exceptions import WordGenerationError
from prefal.exceptions import WordSpecError
from prefal.words import Alphabet
from prefal.words import BINARY
from prefal.words import FiniteWord
from prefal.words import InfiniteWord
from prefal.words import is_unbordered

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Morphism(object):
    """
    Non-erasing morphism, letter ``i`` of **domain** maps to the
    word ``images[i]`` over **codomain**
    """
    images: tuple
    domain: Alphabet
    codomain: Alphabet

    def __post_init__(self):
        if len(self.images) != self.domain.size:
            raise WordSpecError('morphism needs one image per letter of ' +
                                ''.join(self.domain.glyphs))
        for letter, image in enumerate(self.images):
            if len(image) == 0:
                raise WordGenerationError('erasing morphism: letter ' +
                                          self.domain.glyph(letter) +
                                          ' maps to the empty word')
            if max(image) >= self.codomain.size:
                raise WordSpecError('image letter outside codomain')

    @staticmethod
    def from_rules(rules, domain=None, codomain=None):
        """
        Builds morphism from a mapping of glyph to image glyph string

        :param rules: e.g. ``{'0': '01', '1': '0'}``
        :type rules: dict
        """
        glyphs = set(rules.keys())
        for image in rules.values():
            glyphs.update(image)
        if domain is None:
            domain = Alphabet(tuple(sorted(glyphs)))
        if codomain is None:
            codomain = domain
        missing = [g for g in domain.glyphs if g not in rules]
        if missing:
            raise WordSpecError('morphism has no rule for letter ' +
                                ', '.join(missing))
        images = tuple(tuple(codomain.index(c) for c in rules[g])
                       for g in domain.glyphs)
        return Morphism(images, domain, codomain)

    def image(self, letter):
        return FiniteWord(self.images[letter], self.codomain)

    def apply_finite(self, w):
        """
        Image of finite word **w**
        """
        out = []
        for s in w.symbols:
            out.extend(self.images[s])
        return FiniteWord(tuple(out), self.codomain)

    def is_prolongable(self, seed):
        image = self.images[seed]
        return image[0] == seed and len(image) >= 2

    def compose(self, other):
        """
        Gets ``self o other``
        """
        return Morphism(tuple(self.apply_finite(other.image(a)).symbols
                              for a in range(other.domain.size)),
                        other.domain, self.codomain)

    def __str__(self):
        return ','.join(self.domain.glyph(a) + '->' + str(self.image(a))
                        for a in range(self.domain.size))


IDENTITY_BINARY = Morphism(((0,), (1,)), BINARY, BINARY)

LR_TAGS = ('L0', 'L1', 'R0', 'R1')
"""
Tags of the Sturmian morphisms ``L_a: a -> a, b -> ab`` and
``R_a: a -> a, b -> ba``
"""


def lr_morphism(tag):
    """
    Gets the binary morphism for tag ``L0``, ``L1``, ``R0`` or ``R1``

    :raises WordSpecError: on unknown tag
    """
    if tag not in LR_TAGS:
        raise WordSpecError('unknown Sturmian morphism ' + repr(tag))
    a = int(tag[1])
    b = 1 - a
    images = [None, None]
    images[a] = (a,)
    images[b] = (a, b) if tag[0] == 'L' else (b, a)
    return Morphism(tuple(images), BINARY, BINARY)


EXCHANGE = Morphism(((1,), (0,)), BINARY, BINARY)
"""
Letter exchange ``0 <-> 1``
"""


class MorphicFixedPoint(InfiniteWord):
    """
    Fixed point of a morphism prolongable on **seed**, generated with a
    work queue of letters still to be substituted
    """

    def __init__(self, morphism, seed):
        if morphism.domain != morphism.codomain:
            raise WordGenerationError('fixed point needs an endomorphism')
        if not morphism.is_prolongable(seed):
            raise WordGenerationError(
                'morphism ' + str(morphism) + ' is not prolongable on ' +
                morphism.domain.glyph(seed) +
                ' (image must start with it and have length >= 2)')
        super().__init__(morphism.codomain)
        self.morphism = morphism
        self.seed = seed

    def describe(self):
        return ('morphic(' + str(self.morphism) + ';' +
                self.morphism.domain.glyph(self.seed) + ')')

    def _generate(self):
        produced = list(self.morphism.images[self.seed])
        yield from produced
        i = 1
        while True:
            image = self.morphism.images[produced[i]]
            produced.extend(image)
            yield from image
            i += 1


class MorphismImage(InfiniteWord):
    """
    Lazy image of infinite word **inner** under **morphism**
    """

    def __init__(self, morphism, inner, label=None):
        missing = [g for g in inner.alphabet.glyphs
                   if g not in morphism.domain.glyphs]
        if missing:
            raise WordSpecError('morphism domain ' +
                                ''.join(morphism.domain.glyphs) +
                                ' does not cover ' + ''.join(missing))
        super().__init__(morphism.codomain)
        self.morphism = morphism
        self.inner = inner
        self.label = label
        # inner letter index to morphism domain index, matched by glyph
        self._letters = tuple(morphism.domain.index(g)
                              for g in inner.alphabet.glyphs)

    def describe(self):
        label = self.label if self.label is not None else str(self.morphism)
        return 'image(' + label + ';' + self.inner.describe() + ')'

    def _generate(self):
        for s in self.inner.iter_symbols():
            yield from self.morphism.images[self._letters[s]]


def fixed_point(m, seed):
    """
    The infinite word ``x = m(x)`` starting with **seed**

    :param m: morphism
    :type m: :py:class:`Morphism`
    :param seed: letter index
    :type seed: int
    :raises WordGenerationError: if **m** is not prolongable on **seed**
    :rtype: :py:class:`MorphicFixedPoint`
    """
    return MorphicFixedPoint(m, seed)


def apply(m, x):
    """
    Lazy image ``m(x)``

    :rtype: :py:class:`MorphismImage`
    """
    return MorphismImage(m, x)


def apply_lr(tags, x):
    """
    Applies a sequence of ``L0/L1/R0/R1`` tags to binary word **x**,
    first tag outermost
    """
    if any(g not in BINARY.glyphs for g in x.alphabet.glyphs):
        raise WordSpecError('Sturmian morphisms apply to words over {0,1}, '
                            'not ' + ''.join(x.alphabet.glyphs))
    word = x
    for tag in reversed(tags):
        word = MorphismImage(lr_morphism(tag), word, label=tag)
    return word


def letter_exchange(x):
    """
    Exchange of letters of binary word **x**
    """
    if x.alphabet.size != 2:
        raise WordSpecError('letter exchange needs a binary word')
    return MorphismImage(Morphism(((1,), (0,)), x.alphabet, x.alphabet), x,
                         label='E')


@dataclass(frozen=True)
class CodeTable(object):
    """
    Ordered codewords, code letter ``i`` stands for ``codewords[i]``.
    Codewords are pairwise distinct; a parse over them is unique when
    they are unbordered prefixes of one word
    """
    codewords: tuple

    def __post_init__(self):
        if len(set(self.codewords)) != len(self.codewords):
            raise PrefalError('code table codewords must be distinct')

    @property
    def alphabet(self):
        return Alphabet.code(len(self.codewords))

    @property
    def size(self):
        return len(self.codewords)

    def codeword(self, letter):
        return self.codewords[letter]

    def encode(self, code):
        """
        Gets ``phi(code)`` for a code letter sequence
        """
        out = []
        for c in code:
            out.extend(self.codewords[c].symbols)
        return FiniteWord(tuple(out), self.codewords[0].alphabet)

    def as_strings(self):
        return [str(c) for c in self.codewords]

    def __str__(self):
        return ', '.join(self.alphabet.glyph(i) + '->' + str(c)
                         for i, c in enumerate(self.codewords))


def decode(table, w):
    """
    Unique factorization of **w** over the codewords of **table**,
    by dynamic programming over cut positions.

    :param table: code table
    :type table: :py:class:`CodeTable`
    :param w: word to decode
    :type w: :py:class:`FiniteWord`
    :raises DecodingError: if two distinct parses exist
    :return: code letters as a word over the table alphabet or ``None``
    :rtype: :py:class:`FiniteWord`
    """
    symbols = w.symbols
    n = len(symbols)
    ways = [0] * (n + 1)
    back = [None] * (n + 1)
    ways[0] = 1
    for p in range(n):
        if ways[p] == 0:
            continue
        for letter, cw in enumerate(table.codewords):
            end = p + len(cw)
            if end <= n and symbols[p:end] == cw.symbols:
                if ways[end] == 0:
                    back[end] = (p, letter)
                ways[end] = min(2, ways[end] + ways[p])
    if ways[n] == 0:
        return None
    if ways[n] > 1:
        raise DecodingError('code table not uniquely decodable: ' +
                            str(w) + ' has two parses over ' + str(table))
    code = []
    p = n
    while p > 0:
        p, letter = back[p]
        code.append(letter)
    return FiniteWord(tuple(reversed(code)), table.alphabet)


def derived_morphism(m, table):
    """
    Gets ``tau' = phi^-1 o tau o phi``: code letter ``i`` maps to the
    decoding of ``m(phi(i))`` over **table**

    :raises DerivedMorphismError: if some image does not decode
    :rtype: :py:class:`Morphism`
    """
    images = []
    for letter, cw in enumerate(table.codewords):
        image = m.apply_finite(cw)
        code = decode(table, image)
        if code is None:
            raise DerivedMorphismError('derived morphism does not close: ' +
                                       str(image) + ' = image of ' +
                                       str(cw) + ' has no parse over ' +
                                       str(table))
        images.append(code.symbols)
    derived = Morphism(tuple(images), table.alphabet, table.alphabet)
    logger.debug('derived morphism of %s is %s', m, derived)
    return derived


def gamma_fixed_point(chain):
    """
    Fixed point of ``i -> u_i`` for a chain ``u_1, ..., u_k`` of
    unbordered words over ``1..k``, each ``u_(i+1)`` a proper prefix of
    ``u_i`` and ``u_1`` starting with ``1``. Its derived word is
    itself.

    :param chain: words ``u_1`` first, as strings over ``1..k`` or
                  :py:class:`FiniteWord`
    :type chain: list
    :raises WordSpecError: if the chain violates prefix order or
                           some word is bordered
    :rtype: :py:class:`MorphicFixedPoint`
    """
    k = len(chain)
    if k < 2:
        raise WordSpecError('chain needs at least two words')
    alphabet = Alphabet.code(k)
    words = [w if isinstance(w, FiniteWord) else
             FiniteWord.from_string(w, alphabet) for w in chain]
    for i, w in enumerate(words):
        if w.alphabet != alphabet:
            raise WordSpecError('chain words must be over ' +
                                ''.join(alphabet.glyphs))
        if len(w) == 0 or not is_unbordered(w):
            raise WordSpecError('chain word ' + str(w) + ' is bordered')
        if i > 0 and (len(w) >= len(words[i - 1]) or
                      not w.is_prefix_of(words[i - 1])):
            raise WordSpecError('chain word ' + str(w) +
                                ' is not a proper prefix of ' +
                                str(words[i - 1]))
    if words[0][0] != 0:
        raise WordSpecError('first chain word must start with ' +
                            alphabet.glyph(0))
    m = Morphism(tuple(w.symbols for w in words), alphabet, alphabet)
    return MorphicFixedPoint(m, 0)
