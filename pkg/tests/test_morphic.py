#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Tests for `prefal.morphic` module."""

import itertools
import unittest

from prefal.exceptions import DecodingError
from prefal.exceptions import DerivedMorphismError
from prefal.exceptions import PrefalError
from prefal.exceptions import WordGenerationError
from prefal.exceptions import WordSpecError
from prefal import morphic
from prefal.morphic import CodeTable
from prefal.morphic import IDENTITY_BINARY
from prefal.morphic import Morphism
from prefal.morphic import decode
from prefal.morphic import derived_morphism
from prefal.prefactor import derive
from prefal.prefactor import scan_up
from prefal.words import Alphabet
from prefal.words import BINARY
from prefal.words import FiniteWord
from prefal.words import Periodic

FIBONACCI = Morphism.from_rules({'0': '01', '1': '0'})
TRIBONACCI = Morphism.from_rules({'1': '12', '2': '13', '3': '1'})
THUE_MORSE = Morphism.from_rules({'0': '01', '1': '10'})


def table(*codewords, alphabet=BINARY):
    return CodeTable(tuple(FiniteWord.from_string(c, alphabet)
                           for c in codewords))


TRIBONACCI_TABLE = table('1213', '12', '1', alphabet=TRIBONACCI.domain)
THUE_MORSE_TABLE = table('011', '01', '0')
FIBONACCI_TABLE = table('01', '0')


class TestMorphic(unittest.TestCase):
    """Tests for `prefal.morphic` module."""

    def setUp(self):
        """Set up test fixtures, if any."""

    def tearDown(self):
        """Tear down test fixtures, if any."""

    def test_from_rules(self):
        self.assertEqual('0->01,1->0', str(FIBONACCI))
        self.assertEqual(('1', '2', '3'), TRIBONACCI.domain.glyphs)
        try:
            Morphism.from_rules({'0': '01'})
            self.fail('Expected exception')
        except WordSpecError as e:
            self.assertEqual('morphism has no rule for letter 1', str(e))
        try:
            Morphism.from_rules({'0': '01', '1': ''})
            self.fail('Expected exception')
        except WordGenerationError as e:
            self.assertTrue('erasing morphism' in str(e))

    def test_compose(self):
        square = FIBONACCI.compose(FIBONACCI)
        self.assertEqual('0->010,1->01', str(square))
        self.assertEqual(FIBONACCI, IDENTITY_BINARY.compose(FIBONACCI))

    def test_fixed_point(self):
        fib = morphic.fixed_point(FIBONACCI, 0)
        self.assertEqual('010010100100', str(fib.prefix(12)))
        self.assertEqual('morphic(0->01,1->0;0)', fib.describe())
        trib = morphic.fixed_point(TRIBONACCI, 0)
        self.assertEqual('1213121121312', str(trib.prefix(13)))

    def test_fixed_point_not_prolongable(self):
        for rules, seed in (({'0': '0', '1': '1'}, 0),
                            ({'0': '10', '1': '0'}, 0),
                            ({'0': '01', '1': '0'}, 1)):
            try:
                morphic.fixed_point(Morphism.from_rules(rules), seed)
                self.fail('Expected exception')
            except WordGenerationError as e:
                self.assertTrue('is not prolongable on' in str(e))

    def test_apply(self):
        t = morphic.fixed_point(THUE_MORSE, 0)
        self.assertEqual('01000100101000101001000',
                         str(morphic.apply(FIBONACCI, t).prefix(23)))
        fib = morphic.fixed_point(FIBONACCI, 0)
        self.assertEqual(fib.prefix(200),
                         morphic.apply(IDENTITY_BINARY, fib).prefix(200))
        one = Periodic(FiniteWord.from_string('1', BINARY))
        self.assertEqual('0101010101',
                         str(morphic.apply(morphic.lr_morphism('L0'),
                                           one).prefix(10)))

    def test_apply_matches_letters_by_glyph(self):
        one = Periodic(FiniteWord.from_string('1'))
        self.assertEqual(('1',), one.alphabet.glyphs)
        image = morphic.apply(morphic.lr_morphism('L0'), one)
        self.assertEqual('010101', str(image.prefix(6)))
        zero = Periodic(FiniteWord.from_string('0'))
        self.assertEqual('101010',
                         str(morphic.apply_lr(['L1'], zero).prefix(6)))
        ones = Periodic(FiniteWord.from_string('3'))
        self.assertEqual('1111', str(morphic.apply(TRIBONACCI,
                                                   ones).prefix(4)))

    def test_apply_alphabet_mismatch(self):
        trib = morphic.fixed_point(TRIBONACCI, 0)
        try:
            morphic.apply(FIBONACCI, trib)
            self.fail('Expected exception')
        except WordSpecError as e:
            self.assertTrue('does not cover 23' in str(e))
        try:
            morphic.apply_lr(['L0'], trib)
            self.fail('Expected exception')
        except WordSpecError as e:
            self.assertTrue('words over {0,1}' in str(e))

    def test_lr_morphism(self):
        self.assertEqual('0->0,1->01', str(morphic.lr_morphism('L0')))
        self.assertEqual('0->10,1->1', str(morphic.lr_morphism('L1')))
        self.assertEqual('0->0,1->10', str(morphic.lr_morphism('R0')))
        self.assertEqual('0->01,1->1', str(morphic.lr_morphism('R1')))
        try:
            morphic.lr_morphism('X0')
            self.fail('Expected exception')
        except WordSpecError as e:
            self.assertTrue("unknown Sturmian morphism 'X0'" in str(e))

    def test_apply_lr_first_tag_outermost(self):
        fib = morphic.fixed_point(FIBONACCI, 0)
        nested = morphic.apply(morphic.lr_morphism('L0'),
                               morphic.apply(morphic.lr_morphism('R1'), fib))
        tagged = morphic.apply_lr(['L0', 'R1'], fib)
        self.assertEqual(nested.prefix(100), tagged.prefix(100))
        self.assertEqual('image(L0;image(R1;morphic(0->01,1->0;0)))',
                         tagged.describe())

    def test_letter_exchange(self):
        fib = morphic.fixed_point(FIBONACCI, 0)
        swapped = morphic.letter_exchange(fib)
        self.assertEqual('1011010110', str(swapped.prefix(10)))
        self.assertEqual('image(E;morphic(0->01,1->0;0))', swapped.describe())
        try:
            morphic.letter_exchange(morphic.fixed_point(TRIBONACCI, 0))
            self.fail('Expected exception')
        except WordSpecError as e:
            self.assertTrue('binary' in str(e))

    def test_code_table(self):
        self.assertEqual(('1', '2', '3'), THUE_MORSE_TABLE.alphabet.glyphs)
        self.assertEqual('1->011, 2->01, 3->0', str(THUE_MORSE_TABLE))
        self.assertEqual('0110', str(THUE_MORSE_TABLE.encode([0, 2])))
        try:
            table('0', '0')
            self.fail('Expected exception')
        except PrefalError as e:
            self.assertTrue('distinct' in str(e))

    def test_decode(self):
        w = FiniteWord.from_string('1213121', TRIBONACCI.domain)
        self.assertEqual('123', str(decode(TRIBONACCI_TABLE, w)))
        w = FiniteWord.from_string('0110', BINARY)
        self.assertEqual('13', str(decode(THUE_MORSE_TABLE, w)))
        w = FiniteWord.from_string('10', BINARY)
        self.assertIsNone(decode(FIBONACCI_TABLE, w))
        self.assertEqual('', str(decode(FIBONACCI_TABLE,
                                        FiniteWord((), BINARY))))

    def test_decode_ambiguous(self):
        try:
            decode(table('0', '00'), FiniteWord.from_string('00', BINARY))
            self.fail('Expected exception')
        except DecodingError as e:
            self.assertTrue('code table not uniquely decodable' in str(e))

    def test_decode_inverts_encode(self):
        for t in (TRIBONACCI_TABLE, THUE_MORSE_TABLE, FIBONACCI_TABLE):
            for n in range(0, 8):
                for code in itertools.product(range(t.size), repeat=n):
                    decoded = decode(t, t.encode(code))
                    self.assertEqual(code, decoded.symbols)

    def test_derived_morphism(self):
        self.assertEqual('1->123,2->1,3->2',
                         str(derived_morphism(TRIBONACCI, TRIBONACCI_TABLE)))
        self.assertEqual('1->123,2->13,3->2',
                         str(derived_morphism(THUE_MORSE, THUE_MORSE_TABLE)))
        self.assertEqual('1->12,2->1',
                         str(derived_morphism(FIBONACCI, FIBONACCI_TABLE)))

    def test_derived_morphism_does_not_close(self):
        try:
            derived_morphism(FIBONACCI, table('01'))
            self.fail('Expected exception')
        except DerivedMorphismError as e:
            self.assertTrue('derived morphism does not close' in str(e))

    def test_derived_morphism_conjugates(self):
        for m, t in ((TRIBONACCI, TRIBONACCI_TABLE),
                     (THUE_MORSE, THUE_MORSE_TABLE),
                     (FIBONACCI, FIBONACCI_TABLE)):
            x = morphic.fixed_point(m, 0)
            y = morphic.fixed_point(derived_morphism(m, t), 0)
            image = t.encode(y.prefix(256).symbols)
            self.assertEqual(x.prefix(256), image[:256])

    def test_gamma_fixed_point(self):
        x = morphic.gamma_fixed_point(['12', '1'])
        self.assertEqual('1211212112', str(x.prefix(10)))
        for chain in (['12', '1'], ['123', '12', '1'],
                      ['1213', '12', '1'], ['1234', '123', '12', '1']):
            x = morphic.gamma_fixed_point(chain)
            derived = derive(x, scan_up(x, 64, 512))
            self.assertEqual(str(x.prefix(128)), str(derived.prefix(128)),
                             str(chain))

    def test_gamma_fixed_point_errors(self):
        for chain, message in ((['11', '1'], 'is bordered'),
                               (['12', '12'], 'is not a proper prefix'),
                               (['12', '2'], 'is not a proper prefix'),
                               (['1'], 'at least two words'),
                               (['21', '2'], 'must start with 1')):
            try:
                morphic.gamma_fixed_point(chain)
                self.fail('Expected exception for ' + str(chain))
            except WordSpecError as e:
                self.assertTrue(message in str(e), str(e))
        code = Alphabet.code(2)
        self.assertEqual(2, len(morphic.gamma_fixed_point(
            [FiniteWord.from_string('12', code),
             FiniteWord.from_string('1', code)]).prefix(2)))
