#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Tests for `prefal.words` module."""

import itertools
import unittest

from prefal.exceptions import BorderError
from prefal.exceptions import NotSturmianError
from prefal.exceptions import PrefalError
from prefal.exceptions import WordGenerationError
from prefal.exceptions import WordSpecError
from prefal.dsl import parse_word
from prefal.oracle import oracle_borders
from prefal.words import Alphabet
from prefal.words import BINARY
from prefal.words import Concat
from prefal.words import Directive
from prefal.words import FiniteWord
from prefal.words import InfiniteWord
from prefal.words import Periodic
from prefal.words import StandardSturmian
from prefal.words import border_table
from prefal.words import factor_stats
from prefal.words import find_square
from prefal.words import is_balanced
from prefal.words import is_prefixal_factorization
from prefal.words import is_unbordered
from prefal.words import occurrences
from prefal.words import shortest_border
from prefal.words import unbordered_prefix_lengths
from prefal.words import uniform_recurrence_gap
from prefal.words import word_isomorphic

FIBONACCI = 'morphic(0->01,1->0;0)'
TRIBONACCI = 'morphic(1->12,2->13,3->1;1)'
THUE_MORSE = 'morphic(0->01,1->10;0)'


def fw(text, alphabet=BINARY):
    return FiniteWord.from_string(text, alphabet)


class BlockGrowth(InfiniteWord):
    """
    0 1 00 11 000 111 ..., not uniformly recurrent
    """

    def __init__(self):
        super().__init__(BINARY)

    def describe(self):
        return 'blocks'

    def _generate(self):
        k = 1
        while True:
            yield from [0] * k
            yield from [1] * k
            k += 1


class StopsEarly(InfiniteWord):

    def __init__(self):
        super().__init__(BINARY)

    def describe(self):
        return 'stops'

    def _generate(self):
        yield from (0, 1, 0)


class TestWords(unittest.TestCase):
    """Tests for `prefal.words` module."""

    def setUp(self):
        """Set up test fixtures, if any."""

    def tearDown(self):
        """Tear down test fixtures, if any."""

    def test_alphabet(self):
        alpha = Alphabet.of('2131')
        self.assertEqual(('1', '2', '3'), alpha.glyphs)
        self.assertEqual(1, alpha.index('2'))
        self.assertEqual(('1', '2'), Alphabet.code(2).glyphs)
        self.assertEqual(('0', '1', '2'),
                         BINARY.extended('21').glyphs)
        try:
            alpha.index('x')
            self.fail('Expected exception')
        except WordSpecError as e:
            self.assertTrue("'x' is not in alphabet 123" in str(e))

    def test_finite_word(self):
        w = fw('0110')
        self.assertEqual(4, len(w))
        self.assertEqual('011', str(w[:3]))
        self.assertEqual(1, w[1])
        self.assertEqual('01100', str(w + fw('0')))
        self.assertTrue(fw('01').is_prefix_of(w))
        self.assertFalse(fw('1').is_prefix_of(w))
        self.assertEqual(2, w.count(1))
        try:
            FiniteWord((0, 2), BINARY)
            self.fail('Expected exception')
        except WordSpecError as e:
            self.assertTrue('symbol outside alphabet' in str(e))

    def test_shortest_border(self):
        self.assertEqual('0', str(shortest_border(fw('0110'))))
        self.assertIsNone(shortest_border(fw('01')))
        self.assertEqual('0', str(shortest_border(fw('010'))))
        self.assertEqual('01', str(shortest_border(fw('0101'))))
        try:
            shortest_border(fw(''))
            self.fail('Expected exception')
        except BorderError as e:
            self.assertEqual('empty word has no border status', str(e))

    def test_is_unbordered(self):
        self.assertTrue(is_unbordered(FiniteWord.from_string('1213')))
        self.assertTrue(is_unbordered(fw('1')))
        self.assertFalse(is_unbordered(fw('0101')))
        try:
            is_unbordered(fw(''))
            self.fail('Expected exception')
        except BorderError as e:
            self.assertTrue('empty word' in str(e))

    def test_borders_against_oracle_exhaustive(self):
        for n in range(1, 15):
            for letters in itertools.product('01', repeat=n):
                text = ''.join(letters)
                w = fw(text)
                borders = oracle_borders(text)
                self.assertEqual(len(borders) == 0, is_unbordered(w), text)
                self.assertEqual(int(border_table(w)[-1]) == 0,
                                 len(borders) == 0, text)
                sb = shortest_border(w)
                if borders:
                    self.assertEqual(borders[0], str(sb), text)
                else:
                    self.assertIsNone(sb, text)

    def test_unbordered_prefix_lengths(self):
        w = parse_word(TRIBONACCI).prefix(64)
        self.assertEqual([1, 2, 4], unbordered_prefix_lengths(w))
        w = parse_word(THUE_MORSE).prefix(64)
        self.assertEqual([1, 2, 3], unbordered_prefix_lengths(w))

    def test_prefix(self):
        self.assertEqual('010010100100',
                         str(parse_word(FIBONACCI).prefix(12)))
        self.assertEqual('01010', str(Periodic(fw('01')).prefix(5)))
        self.assertEqual('0110100110010110',
                         str(parse_word(THUE_MORSE).prefix(16)))
        self.assertEqual('', str(Periodic(fw('01')).prefix(0)))
        try:
            Periodic(fw('01')).prefix(-1)
            self.fail('Expected exception')
        except PrefalError as e:
            self.assertTrue('non-negative' in str(e))

    def test_prefix_monotone(self):
        for spec in (FIBONACCI, TRIBONACCI, THUE_MORSE, 'periodic(011)',
                     'concat(10;morphic(0->01,1->0;0))',
                     'sturm_std(0(01)*)'):
            x = parse_word(spec)
            long_prefix = x.prefix(512)
            for m in (0, 1, 7, 100, 511):
                self.assertTrue(x.prefix(m).is_prefix_of(long_prefix), spec)
            self.assertEqual(long_prefix, x.prefix(512))

    def test_generator_stops(self):
        x = StopsEarly()
        self.assertEqual('010', str(x.prefix(3)))
        try:
            x.prefix(4)
            self.fail('Expected exception')
        except WordGenerationError as e:
            self.assertTrue('stopped after 3 symbols' in str(e))

    def test_concat(self):
        x = Concat(FiniteWord.from_string('2'), Periodic(fw('01')))
        self.assertEqual(('0', '1', '2'), x.alphabet.glyphs)
        self.assertEqual('20101', str(x.prefix(5)))
        self.assertEqual('concat(2;periodic(01))', x.describe())

    def test_directive(self):
        d = Directive((1,), (0, 1))
        self.assertEqual('1(01)*', str(d))
        self.assertEqual([1, 0, 1, 0], [d.letter(i) for i in range(4)])
        self.assertEqual(Directive((), (0, 1)), d.tail())
        self.assertEqual(Directive((), (1, 0)), d.tail().tail())
        self.assertEqual(Directive((0,), (1, 0)), d.exchanged())
        self.assertEqual(Directive((), (1, 0)),
                         Directive((1, 0), (1, 0, 1, 0)).canonical())
        try:
            Directive((0,), (1, 1)).validate()
            self.fail('Expected exception')
        except NotSturmianError as e:
            self.assertEqual('ultimately periodic word, not Sturmian',
                             str(e))

    def test_standard_sturmian(self):
        f = StandardSturmian(Directive((), (0, 1)))
        self.assertEqual(str(parse_word(FIBONACCI).prefix(100)),
                         str(f.prefix(100)))
        # prefixes of a standard word are left special
        for k in range(1, 7):
            stats = factor_stats(f, k, 400)
            self.assertTrue(str(f.prefix(k)) in
                            [str(u) for u in stats.left_special])

    def test_factor_stats(self):
        fib = parse_word(FIBONACCI)
        self.assertEqual(6, factor_stats(fib, 5, 200).count)
        self.assertEqual(9, factor_stats(parse_word(TRIBONACCI), 4,
                                         400).count)
        self.assertEqual(2, factor_stats(Periodic(fw('01')), 3, 20).count)
        stats = factor_stats(fib, 3, 200)
        self.assertEqual(1, len(stats.right_special))
        self.assertEqual(1, len(stats.left_special))
        try:
            factor_stats(fib, 5, 4)
            self.fail('Expected exception')
        except PrefalError as e:
            self.assertTrue('shorter than factor length' in str(e))

    def test_factor_complexity(self):
        fib = parse_word(FIBONACCI)
        trib = parse_word(TRIBONACCI)
        for n in range(1, 13):
            self.assertEqual(n + 1, factor_stats(fib, n, 64 * n).count)
            self.assertEqual(2 * n + 1, factor_stats(trib, n, 64 * n).count)

    def test_is_balanced(self):
        self.assertTrue(is_balanced(parse_word(FIBONACCI), 200).balanced)
        self.assertTrue(is_balanced(Periodic(fw('01')), 50).balanced)
        report = is_balanced(parse_word(THUE_MORSE), 16)
        self.assertFalse(report.balanced)
        self.assertEqual(('00', '11'), tuple(str(u) for u in report.witness))
        try:
            is_balanced(parse_word(TRIBONACCI), 16)
            self.fail('Expected exception')
        except PrefalError as e:
            self.assertTrue('binary' in str(e))

    def test_uniform_recurrence_gap(self):
        self.assertEqual(2, uniform_recurrence_gap(parse_word(FIBONACCI),
                                                   fw('0'), 100))
        self.assertEqual(2, uniform_recurrence_gap(Periodic(fw('01')),
                                                   fw('01'), 40))
        blocks = BlockGrowth()
        short = uniform_recurrence_gap(blocks, fw('01'), 50)
        longer = uniform_recurrence_gap(blocks, fw('01'), 200)
        self.assertTrue(longer > short)
        self.assertIsNone(uniform_recurrence_gap(Periodic(fw('01')),
                                                 fw('11'), 40))
        try:
            uniform_recurrence_gap(blocks, fw(''), 10)
            self.fail('Expected exception')
        except PrefalError as e:
            self.assertTrue('non-empty' in str(e))

    def test_occurrences(self):
        occ = occurrences(parse_word(THUE_MORSE), fw('11'), 16)
        self.assertEqual([1, 7, 13], list(occ))

    def test_word_isomorphic(self):
        code = Alphabet.code(2)
        self.assertEqual({'1': '0', '2': '1'},
                         word_isomorphic(FiniteWord.from_string('1211', code),
                                         fw('0100')))
        self.assertIsNone(word_isomorphic(FiniteWord.from_string('12', code),
                                          FiniteWord.from_string('11',
                                                                 code)))
        self.assertIsNone(word_isomorphic(fw('01'), fw('011')))

    def test_find_square(self):
        self.assertEqual((1, 1), find_square(fw('0110')))
        self.assertEqual((0, 2), find_square(fw('0101')))
        hall = parse_word('morphic(1->123,2->13,3->2;1)')
        self.assertIsNone(find_square(hall.prefix(128)))

    def test_is_prefixal_factorization(self):
        fib = parse_word(FIBONACCI)
        self.assertTrue(is_prefixal_factorization(
            fib, [fw('01'), fw('0'), fw('01'), fw('01')]))
        self.assertFalse(is_prefixal_factorization(fib, [fw('01'),
                                                         fw('01')]))
        self.assertFalse(is_prefixal_factorization(fib, [fw('1')]))
        self.assertFalse(is_prefixal_factorization(fib, [fw('')]))
