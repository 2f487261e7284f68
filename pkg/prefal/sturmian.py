# -*- coding: utf-8 -*-

"""
Exact Sturmian machinery.

A spec describes ``g1 o ... o gm (u . T^k(S))`` where ``S`` is the
standard word of an eventually periodic directive, ``T`` the shift and
``g_i`` the morphisms ``L_a: a -> a, b -> ab`` and
``R_a: a -> a, b -> ba``. Specs are pushed to the normal form
``u . T^k(S)`` (``u`` empty when ``k > 0``) using

* ``L_c(S)`` is the standard word of directive ``c d``
* ``R_c(y) = c^-1 L_c(y)`` for infinite ``y``

and letter cancellation. The word is singular iff ``k = 0`` and ``u``
is non-empty, and outside ``P1`` iff moreover ``|u| = 1``.
"""

import logging
from dataclasses import dataclass
from dataclasses import replace

from prefal import constants
from prefal.exceptions import BaseCaseError
from prefal.exceptions import NotSturmianError
from prefal.exceptions import PrefalError
from prefal.exceptions import ReductionError
from prefal.exceptions import WordGenerationError
from prefal.morphic import LR_TAGS
from prefal.morphic import MorphismImage
from prefal.morphic import Morphism
from prefal.morphic import lr_morphism
from prefal.prefactor import Certificate
from prefal.prefactor import Completeness
from prefal.prefactor import HierarchyStatus
from prefal.prefactor import HierarchyVerdict
from prefal.prefactor import scan_up
from prefal.words import Alphabet
from prefal.words import BINARY
from prefal.words import Directive
from prefal.words import FiniteWord
from prefal.words import InfiniteWord
from prefal.words import StandardSturmian
from prefal.words import factor_stats
from prefal.words import is_balanced
from prefal.words import occurrences
from prefal.words import unbordered_prefix_lengths

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SturmianSpec(object):
    """
    Structural Sturmian word ``chain(prepend . T^shift(S))`` with ``S``
    the standard word of **directive**. **chain** tags are applied
    first tag outermost
    """
    directive: Directive
    prepend: tuple = ()
    chain: tuple = ()
    shift: int = 0

    def __post_init__(self):
        for tag in self.chain:
            if tag not in LR_TAGS:
                raise NotSturmianError('unknown Sturmian morphism ' +
                                       repr(tag))
        if self.shift < 0:
            raise NotSturmianError('shift must be non-negative')

    @property
    def singular(self):
        """
        Singularity of a spec in normal form
        """
        return self.shift == 0 and len(self.prepend) > 0

    def describe(self):
        text = ('sturm(dir=' + str(self.directive) + ';pre=' +
                ''.join(str(a) for a in self.prepend))
        if self.shift:
            text += ';shift=' + str(self.shift)
        return text + ';chain=' + ' '.join(self.chain) + ')'

    def __str__(self):
        return self.describe()


@dataclass(frozen=True)
class Singularity(object):
    """
    Singularity of a spec with its normal form ``(u, S)``
    """
    singular: bool
    normal_form: SturmianSpec

    @property
    def prefix(self):
        return FiniteWord(self.normal_form.prepend, BINARY)


class SturmianWord(InfiniteWord):
    """
    Realized stream of a :py:class:`SturmianSpec`. **letter_map** sends
    spec letters ``0, 1`` to letters of **alphabet**
    """

    def __init__(self, spec, alphabet=BINARY, letter_map=(0, 1),
                 label=None):
        super().__init__(alphabet)
        self.spec = spec
        self.letter_map = tuple(letter_map)
        self.label = label

    def describe(self):
        if self.label is not None:
            return self.label
        return self.spec.describe()

    def _generate(self):
        core = StandardSturmian(self.spec.directive)
        composite = None
        for tag in self.spec.chain:
            g = lr_morphism(tag)
            composite = g if composite is None else composite.compose(g)
        mapping = self.letter_map
        for s in self.spec.prepend:
            for t in _images(composite, s):
                yield mapping[t]
        i = self.spec.shift
        while True:
            for t in _images(composite, core.letter_at(i)):
                yield mapping[t]
            i += 1


def _images(morphism, letter):
    if morphism is None:
        return (letter,)
    return morphism.images[letter]


def _spec_of(x):
    if isinstance(x, SturmianSpec):
        return x
    if isinstance(x, SturmianWord):
        return x.spec
    raise NotSturmianError(_describe(x) + ' has no Sturmian structural '
                           'description')


def _describe(x):
    if isinstance(x, InfiniteWord):
        return x.describe()
    return str(x)


def _cancel(prepend, shift, directive):
    if shift > 0 and prepend:
        head = StandardSturmian(directive).prefix(shift).symbols
        while shift > 0 and prepend and prepend[-1] == head[shift - 1]:
            prepend = prepend[:-1]
            shift -= 1
        if shift > 0 and prepend:
            raise NotSturmianError(
                'not Sturmian: ' +
                ''.join(str(a) for a in prepend) + ' before a suffix of '
                'a standard word that is not left special')
    return SturmianSpec(directive, prepend, (), shift)


def _push(tag, nf):
    c = int(tag[1])
    g = lr_morphism(tag)
    shift = 0
    if nf.shift:
        head = StandardSturmian(nf.directive).prefix(nf.shift)
        shift = len(lr_morphism('L' + tag[1]).apply_finite(head))
    if tag[0] == 'R':
        shift += 1
    prepend = g.apply_finite(FiniteWord(nf.prepend, BINARY)).symbols
    return _cancel(prepend, shift, nf.directive.prepend(c))


def normal_form(spec):
    """
    Pushes the morphism chain of **spec** inward

    :raises NotSturmianError: if the directive is eventually constant or
                              the spec does not describe a Sturmian word
    :return: equivalent spec with empty chain and empty prepend when
             shifted
    :rtype: :py:class:`SturmianSpec`
    """
    spec = _spec_of(spec)
    spec.directive.validate()
    nf = _cancel(tuple(spec.prepend), spec.shift, spec.directive)
    for tag in reversed(spec.chain):
        nf = _push(tag, nf)
    return nf


def realize(spec, validate_word=True):
    """
    Stream of **spec** over ``{0, 1}``, validated by default

    :rtype: :py:class:`SturmianWord`
    """
    if validate_word:
        validate(spec)
    return SturmianWord(spec)


def validate(spec, bound=constants.STURMIAN_VALIDATION_BOUND):
    """
    Gate for user supplied specs: normal form exists, the realized word
    is balanced on **bound** symbols and has no more than ``n + 1``
    factors of length ``n`` for ``n`` up to
    :py:const:`~prefal.constants.STURMIAN_COMPLEXITY_MAX_N`

    :raises NotSturmianError: if a check fails
    :return: normal form of **spec**
    :rtype: :py:class:`SturmianSpec`
    """
    nf = normal_form(spec)
    word = SturmianWord(spec)
    report = is_balanced(word, bound)
    if not report.balanced:
        u, v = report.witness
        raise NotSturmianError(spec.describe() + ' is not balanced: ' +
                               str(u) + ' vs ' + str(v))
    for n in range(1, constants.STURMIAN_COMPLEXITY_MAX_N + 1):
        stats = factor_stats(word, n, bound)
        if stats.count > n + 1:
            raise NotSturmianError(spec.describe() + ' has ' +
                                   str(stats.count) + ' factors of length ' +
                                   str(n))
        if stats.count < n + 1:
            logger.warning('%s shows only %d factors of length %d in %d '
                           'symbols', spec.describe(), stats.count, n, bound)
    return nf


def sturmian_type(x, bound=constants.STURMIAN_VALIDATION_BOUND):
    """
    The letter ``a`` such that ``aa`` is a factor of **x**. Specs get it
    exactly from the first letter of their normal form directive,
    streams from the first **bound** symbols

    :raises NotSturmianError: if neither or both squares of letters occur
    :return: letter index
    :rtype: int
    """
    if isinstance(x, SturmianSpec):
        return normal_form(x).directive.first()
    if x.alphabet.size != 2:
        raise NotSturmianError(x.describe() + ' is not binary')
    found = [a for a in (0, 1)
             if len(occurrences(x, FiniteWord((a, a), x.alphabet), bound))]
    if len(found) != 1:
        raise NotSturmianError('not Sturmian at this bound: ' +
                               x.describe() + ' at ' + str(bound))
    return found[0]


class FirstReturnDecoding(InfiniteWord):
    """
    Inverse image of binary **word** under ``L_a`` (left first returns
    to ``a``: ``a -> a``, ``ab -> b``) or ``R_a`` (right first returns:
    ``a -> a``, ``ba -> b``), decoded symbol by symbol
    """

    def __init__(self, word, a, left=True):
        super().__init__(word.alphabet)
        self.word = word
        self.a = a
        self.left = left

    def describe(self):
        tag = ('L' if self.left else 'R') + self.word.alphabet.glyph(self.a)
        return 'desubstitute(' + tag + ';' + self.word.describe() + ')'

    def _generate(self):
        a = self.a
        b = 1 - a
        i = 0
        x = self.word
        while True:
            s = x.letter_at(i)
            if self.left:
                if s != a:
                    raise WordGenerationError('not an image of L at ' + str(i))
                if x.letter_at(i + 1) == b:
                    yield b
                    i += 2
                else:
                    yield a
                    i += 1
            elif s == a:
                yield a
                i += 1
            elif x.letter_at(i + 1) == a:
                yield b
                i += 2
            else:
                raise WordGenerationError('not an image of R at ' + str(i))


def desubstitute(x, bound=constants.STURMIAN_VALIDATION_BOUND):
    """
    Writes Sturmian **x** of type ``a`` with ``N(x) > 2`` as
    ``x = L_a(y)`` when it begins with ``a`` and ``x = R_a(y)``
    otherwise. Then ``N(y) < N(x)`` and ``delta(y) = delta(x)``

    :raises BaseCaseError: if ``N(x) = 2``
    :raises PrefalError: if **x** begins with ``ab``
    :return: ``(tag, y)``
    :rtype: tuple
    """
    a = sturmian_type(x, bound)
    analysis = scan_up(x)
    if analysis.n == 2:
        raise BaseCaseError('base case, use delta_base: N(' + x.describe() +
                            ') = 2')
    head = x.prefix(2).symbols
    glyph = x.alphabet.glyph(a)
    if head == (a, 1 - a):
        raise PrefalError('internal contradiction: ' + x.describe() +
                          ' begins with ab for type ' + glyph +
                          ' and has N = ' + str(analysis.n))
    if head[0] == a:
        return 'L' + glyph, FirstReturnDecoding(x, a, left=True)
    return 'R' + glyph, FirstReturnDecoding(x, a, left=False)


def delta_base(x):
    """
    Derived word of binary **x** with ``UP(x) = {a, ab}``: the left first
    return coding ``ab -> 1``, ``a -> 2``

    :raises PrefalError: if ``UP(x)`` is not ``{a, ab}``
    :rtype: :py:class:`~prefal.words.InfiniteWord`
    """
    if x.alphabet.size != 2:
        raise NotSturmianError(x.describe() + ' is not binary')
    analysis = scan_up(x)
    a, b = x.prefix(2).symbols
    if analysis.lengths() != [1, 2] or a == b:
        raise PrefalError('delta_base needs UP(x) = {a, ab}, found ' +
                          ', '.join(str(u) for u in analysis.up_set))
    images = [None, None]
    images[a] = (1,)
    images[b] = (0,)
    relabel = Morphism(tuple(images), x.alphabet, Alphabet.code(2))
    return MorphismImage(relabel, FirstReturnDecoding(x, a, left=True),
                         label='code')


def _letters(spec, n):
    if spec.shift:
        return StandardSturmian(spec.directive).slice(
            spec.shift, spec.shift + n).symbols
    head = spec.prepend[:n]
    rest = StandardSturmian(spec.directive).prefix(n - len(head)).symbols
    return tuple(head) + rest


def _inverse_blocks(word, a, left):
    b = 1 - a
    out = []
    i = 0
    while i < len(word):
        if left:
            if word[i] != a:
                return None
            if i + 1 < len(word) and word[i + 1] == b:
                out.append(b)
                i += 2
            else:
                out.append(a)
                i += 1
        elif word[i] == a:
            out.append(a)
            i += 1
        elif i + 1 < len(word) and word[i + 1] == a:
            out.append(b)
            i += 2
        else:
            return None
    return tuple(out)


def _desubstitute_spec(nf):
    """
    One exact desubstitution step on a normal form
    """
    a = nf.directive.first()
    tail = nf.directive.tail()
    glyph = str(a)
    if nf.shift == 0:
        u = nf.prepend
        if not u or u[0] == a:
            blocks = _inverse_blocks(u, a, left=True)
            tag = 'L' + glyph
        else:
            blocks = _inverse_blocks(u + (a,), a, left=False)
            tag = 'R' + glyph
        if blocks is None:
            raise NotSturmianError(nf.describe() + ' is not an image of ' +
                                   tag)
        return tag, SturmianSpec(tail, blocks, (), 0)
    k = nf.shift
    head = StandardSturmian(nf.directive).prefix(k + 1).symbols
    if head[k] == a:
        return 'L' + glyph, SturmianSpec(tail, (), (), head[:k].count(a))
    return 'R' + glyph, SturmianSpec(tail, (), (), head[:k - 1].count(a))


def is_in_P1(x):
    """
    Tells if the Sturmian word admits a prefixal factorization, that is
    it is not a single letter followed by a standard word

    :rtype: bool
    """
    nf = normal_form(x)
    return not (nf.shift == 0 and len(nf.prepend) == 1)


def is_singular(x):
    """
    Singularity of **x** with its normal form ``(u, S)``

    :rtype: :py:class:`Singularity`
    """
    nf = normal_form(x)
    return Singularity(nf.singular, nf)


def _reduce(nf):
    """
    Desubstitutes until the word begins with ``ab`` for its type ``a``

    :return: ``(tags, base normal form)``
    """
    if not is_in_P1(nf):
        raise PrefalError(nf.describe() + ' is not in P1')
    tags = []
    for _ in range(constants.REDUCTION_STEP_CAP):
        a = nf.directive.first()
        if _letters(nf, 2) == (a, 1 - a):
            return tags, nf
        tag, nf = _desubstitute_spec(nf)
        tags.append(tag)
    raise ReductionError('reduction did not terminate for ' + nf.describe())


def delta_spec(x):
    """
    Derived word at the spec level

    :return: ``(spec, letter_map)`` where ``letter_map`` sends spec letters
             to code letters ``0 -> '1'`` and ``1 -> '2'``
    :rtype: tuple
    """
    tags, base = _reduce(normal_form(x))
    a = base.directive.first()
    _, y = _desubstitute_spec(base)
    letter_map = [None, None]
    letter_map[a] = 1
    letter_map[1 - a] = 0
    logger.debug('delta of %s reduced through %s to %s', _describe(x),
                 ' '.join(tags) or 'nothing', y.describe())
    return y, tuple(letter_map)


def sturmian_delta(x):
    """
    The derived word of a Sturmian word in ``P1``, exact, over code
    letters ``1, 2``

    :raises NotSturmianError: if **x** has no Sturmian description
    :rtype: :py:class:`SturmianWord`
    """
    spec = _spec_of(x)
    y, letter_map = delta_spec(spec)
    return SturmianWord(y, Alphabet.code(2), letter_map,
                        label='delta(' + _describe(x) + ')')


def exact_longest_unbordered(x):
    """
    Longest unbordered prefix ``U`` from ``U(L_a(y)) = L_a(U(y))``,
    ``U(R_a(y)) = R_a(U(y))`` and ``U = ab`` in the base case

    :rtype: :py:class:`~prefal.words.FiniteWord`
    """
    tags, base = _reduce(normal_form(x))
    a = base.directive.first()
    u = FiniteWord((a, 1 - a), BINARY)
    for tag in reversed(tags):
        u = lr_morphism(tag).apply_finite(u)
    return u


def up_pair(x):
    """
    The two pieces ``(U, V)`` of the factorization of a Sturmian word
    in ``P1``: ``U`` its longest unbordered prefix, ``V`` the longest
    proper unbordered prefix of ``U``

    :rtype: tuple
    """
    u = exact_longest_unbordered(x)
    v = u[:unbordered_prefix_lengths(u[:-1])[-1]]
    return u, v


def classify_sturmian(x):
    """
    Nonsingular words are in ``Pinf``; singular ones leave ``P1`` after
    finitely many derivations and the exit level is returned as
    ``NotInP_n``

    :rtype: :py:class:`~prefal.prefactor.HierarchyVerdict`
    """
    nf = normal_form(x)
    if not nf.singular:
        return HierarchyVerdict(HierarchyStatus.IN_P_INFINITY_CERTIFIED,
                                evidence='nonsingular: ' + nf.describe(),
                                certified=True)
    current = nf
    for level in range(constants.REDUCTION_STEP_CAP):
        if not is_in_P1(current):
            return HierarchyVerdict(HierarchyStatus.NOT_IN_P_N,
                                    level=level + 1,
                                    evidence='singular: ' + nf.describe() +
                                             '; level ' + str(level) +
                                             ' is ' + current.describe(),
                                    certified=True)
        current = normal_form(delta_spec(current)[0])
    raise ReductionError('singular word did not leave P1 within ' +
                         str(constants.REDUCTION_STEP_CAP) + ' levels')


def certify_analysis(x, analysis):
    """
    Exact completeness for realized Sturmian specs, used by
    :py:func:`prefal.prefactor.certify_up`
    """
    nf = normal_form(x.spec)
    if not is_in_P1(nf):
        return replace(analysis, refutation='Sturmian word of the form aS: ' +
                                            nf.describe())
    u, _ = up_pair(nf)
    if len(u) > analysis.scan_bound or len(u) != analysis.n:
        logger.info('exact N = %d of %s not matched by scan (N >= %d)',
                    len(u), x.describe(), analysis.n)
        return analysis
    return replace(analysis, completeness=Completeness.CERTIFIED,
                   certificate=Certificate(kind='sturmian',
                                           detail=nf.describe(),
                                           derived_word=sturmian_delta(x)))
