# -*- coding: utf-8 -*-

"""
Parsers for word specs, Sturmian specs and colorings.

Word specs::

    morphic(0->01,1->0;0)
    periodic(01)
    concat(10;morphic(0->01,1->0;0))
    image(L0 R1;sturm_std((01)*))
    image(0->01,1->0;morphic(0->01,1->10;0))
    sturm_std(0(01)*)
    sturm(dir=(01)*;pre=0;shift=0;chain=R0)

Colorings::

    coloring{ prefix_end(0)->0; prefix_end(1)->1; otherwise->2 }
"""

import logging
import re

from prefal.coloring import Coloring
from prefal.coloring import Predicate
from prefal.coloring import PREDICATE_KINDS
from prefal.coloring import Rule
from prefal.exceptions import PrefalError
from prefal.exceptions import WordSpecError
from prefal.morphic import LR_TAGS
from prefal.morphic import Morphism
from prefal.morphic import MorphicFixedPoint
from prefal.morphic import MorphismImage
from prefal.morphic import apply_lr
from prefal.words import Concat
from prefal.words import Directive
from prefal.words import FiniteWord
from prefal.words import Periodic
from prefal.words import StandardSturmian

logger = logging.getLogger(__name__)

GLYPH_RE = re.compile(r'[^\s,;(){}=*!\->]')
LABEL_RE = re.compile(r'[^\s;{}]+')
NAME_RE = re.compile(r'[a-z_]+')
INT_RE = re.compile(r'\d+')
TAG_RE = re.compile(r'[LR][01]')
WS_RE = re.compile(r'\s*')


class _Parser(object):
    """
    Recursive descent over **text** with a cursor
    """

    def __init__(self, text):
        if text is None:
            raise WordSpecError('no spec given')
        self.text = text
        self.pos = 0

    def error(self, message):
        return WordSpecError('at position ' + str(self.pos) + ' of ' +
                             repr(self.text) + ': ' + message)

    def skip(self):
        self.pos = WS_RE.match(self.text, self.pos).end()

    def peek(self, literal):
        self.skip()
        return self.text.startswith(literal, self.pos)

    def expect(self, literal):
        if not self.peek(literal):
            raise self.error('expected ' + repr(literal))
        self.pos += len(literal)

    def match(self, regex, what):
        self.skip()
        m = regex.match(self.text, self.pos)
        if m is None or m.end() == self.pos:
            raise self.error('expected ' + what)
        self.pos = m.end()
        return m.group(0)

    def glyphs(self, what='letters'):
        out = []
        self.skip()
        while True:
            m = GLYPH_RE.match(self.text, self.pos)
            if m is None:
                break
            out.append(m.group(0))
            self.pos = m.end()
        if not out:
            raise self.error('expected ' + what)
        return ''.join(out)

    def optional_glyphs(self):
        self.skip()
        if GLYPH_RE.match(self.text, self.pos) is None:
            return ''
        return self.glyphs()

    def finish(self):
        self.skip()
        if self.pos != len(self.text):
            raise self.error('unexpected trailing text')

    def until(self, stops):
        """
        Raw text up to the first character of **stops** at nesting
        depth zero
        """
        depth = 0
        start = self.pos
        while self.pos < len(self.text):
            c = self.text[self.pos]
            if depth == 0 and c in stops:
                break
            if c == '(':
                depth += 1
            elif c == ')':
                depth -= 1
            self.pos += 1
        return self.text[start:self.pos]

    def rules(self):
        rules = {}
        while True:
            glyph = self.match(GLYPH_RE, 'letter')
            self.expect('->')
            if glyph in rules:
                raise self.error('second rule for letter ' + glyph)
            rules[glyph] = self.glyphs('image')
            if not self.peek(','):
                return rules
            self.expect(',')

    def directive(self):
        self.skip()
        pre = self.optional_glyphs()
        self.expect('(')
        period = self.glyphs('directive period')
        self.expect(')')
        if self.peek('*'):
            self.expect('*')
        for c in pre + period:
            if c not in '01':
                raise self.error('directive letters are 0 and 1')
        return Directive(tuple(int(c) for c in pre),
                         tuple(int(c) for c in period))

    def tags(self, raw):
        compact = re.sub(r'\s+', '', raw)
        found = TAG_RE.findall(compact)
        if ''.join(found) != compact:
            raise self.error('chain must be made of ' + ', '.join(LR_TAGS))
        return tuple(found)

    def word(self):
        name = self.match(NAME_RE, 'word constructor')
        self.expect('(')
        if name == 'morphic':
            rules = self.rules()
            self.expect(';')
            seed = self.match(GLYPH_RE, 'seed letter')
            self.expect(')')
            m = Morphism.from_rules(rules)
            return MorphicFixedPoint(m, m.domain.index(seed))
        if name == 'periodic':
            period = self.glyphs('period')
            self.expect(')')
            return Periodic(FiniteWord.from_string(period))
        if name == 'concat':
            head = self.glyphs('head')
            self.expect(';')
            inner = self.word()
            self.expect(')')
            return Concat(FiniteWord.from_string(head), inner)
        if name == 'image':
            self.skip()
            raw = self.until(';')
            if '->' in raw:
                m = Morphism.from_rules(_Parser(raw)._rules_only())
                self.expect(';')
                inner = self.word()
                self.expect(')')
                return MorphismImage(m, inner)
            tags = self.tags(raw)
            self.expect(';')
            inner = self.word()
            self.expect(')')
            return apply_lr(tags, inner)
        if name == 'sturm_std':
            directive = self.directive()
            self.expect(')')
            return StandardSturmian(directive)
        if name == 'sturm':
            from prefal.sturmian import realize
            spec = self.sturm_fields()
            return realize(spec)
        raise self.error('unknown word constructor ' + repr(name))

    def _rules_only(self):
        rules = self.rules()
        self.finish()
        return rules

    def sturm_fields(self):
        from prefal.sturmian import SturmianSpec
        fields = {}
        while not self.peek(')'):
            key = self.match(NAME_RE, 'field name')
            self.expect('=')
            if key in fields:
                raise self.error('field ' + key + ' given twice')
            if key == 'dir':
                fields[key] = self.directive()
            elif key == 'pre':
                pre = self.optional_glyphs()
                if any(c not in '01' for c in pre):
                    raise self.error('prepended letters are 0 and 1')
                fields[key] = tuple(int(c) for c in pre)
            elif key == 'shift':
                fields[key] = int(self.match(INT_RE, 'shift'))
            elif key == 'chain':
                fields[key] = self.tags(self.until(';)'))
            else:
                raise self.error('unknown field ' + repr(key))
            if self.peek(';'):
                self.expect(';')
        self.expect(')')
        if 'dir' not in fields:
            raise self.error('sturm needs dir=')
        return SturmianSpec(directive=fields['dir'],
                            prepend=fields.get('pre', ()),
                            chain=fields.get('chain', ()),
                            shift=fields.get('shift', 0))

    def predicate(self):
        negate = False
        if self.peek('!'):
            self.expect('!')
            negate = True
        kind = self.match(NAME_RE, 'predicate')
        if kind not in PREDICATE_KINDS:
            raise self.error('unknown predicate ' + repr(kind))
        arg = None
        if kind in ('prefix_end', 'ends_with', 'begins_with'):
            self.expect('(')
            arg = self.match(GLYPH_RE, 'letter')
            self.expect(')')
        elif kind == 'shorter_than':
            self.expect('(')
            arg = self.match(INT_RE, 'length')
            self.expect(')')
        elif kind == 'word':
            self.expect('(')
            arg = self.glyphs('word')
            self.expect(')')
        return Predicate(kind, arg, negate)

    def coloring(self):
        self.expect('coloring')
        self.expect('{')
        rules = []
        while not self.peek('}'):
            predicate = self.predicate()
            self.expect('->')
            rules.append(Rule(predicate, self.match(LABEL_RE, 'color')))
            if self.peek(';'):
                self.expect(';')
            elif not self.peek('}'):
                raise self.error("expected ';' or '}'")
        self.expect('}')
        return tuple(rules)


def _wrap(parse, text):
    try:
        return parse(text)
    except WordSpecError:
        raise
    except PrefalError as e:
        raise WordSpecError('invalid spec ' + repr(text) + ': ' +
                            str(e)) from e


def parse_word(text):
    """
    Parses a word spec

    :param text: spec such as ``morphic(0->01,1->0;0)``
    :type text: str
    :raises WordSpecError: on syntax errors or invalid words
    :rtype: :py:class:`~prefal.words.InfiniteWord`
    """
    def _parse(t):
        parser = _Parser(t)
        word = parser.word()
        parser.finish()
        logger.debug('parsed %s as %s', t, word.describe())
        return word
    return _wrap(_parse, text)


def parse_morphism(text):
    """
    Parses rules such as ``0->01,1->0``

    :rtype: :py:class:`~prefal.morphic.Morphism`
    """
    return _wrap(lambda t: Morphism.from_rules(_Parser(t)._rules_only()),
                 text)


def parse_directive(text):
    """
    Parses ``pre(period)*``

    :rtype: :py:class:`~prefal.words.Directive`
    """
    def _parse(t):
        parser = _Parser(t)
        directive = parser.directive()
        parser.finish()
        return directive.validate()
    return _wrap(_parse, text)


def parse_sturmian(text):
    """
    Parses ``sturm(dir=...; pre=...; chain=...)`` without realizing it

    :rtype: :py:class:`~prefal.sturmian.SturmianSpec`
    """
    def _parse(t):
        parser = _Parser(t)
        parser.expect('sturm')
        parser.expect('(')
        spec = parser.sturm_fields()
        parser.finish()
        spec.directive.validate()
        return spec
    return _wrap(_parse, text)


def parse_coloring(text, reference=None):
    """
    Parses ``coloring{ predicate->color; ... }``

    :param reference: word ``prefix`` and ``factor`` refer to, the
                      colored word when ``None``
    :rtype: :py:class:`~prefal.coloring.Coloring`
    """
    def _parse(t):
        parser = _Parser(t)
        rules = parser.coloring()
        parser.finish()
        return Coloring(rules, reference)
    return _wrap(_parse, text)
