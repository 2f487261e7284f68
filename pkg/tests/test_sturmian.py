#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Tests for `prefal.sturmian` module."""

import unittest

from prefal.exceptions import BaseCaseError
from prefal.exceptions import NotSturmianError
from prefal.exceptions import PrefalError
from prefal.dsl import parse_word
from prefal.morphic import letter_exchange
from prefal.morphic import lr_morphism
from prefal.prefactor import DerivedWord
from prefal.prefactor import HierarchyStatus
from prefal.prefactor import certify_up
from prefal.prefactor import classify_hierarchy
from prefal.prefactor import scan_up
from prefal import sturmian
from prefal.sturmian import SturmianSpec
from prefal.words import BINARY
from prefal.words import Directive
from prefal.words import FiniteWord
from prefal.words import Periodic
from prefal.words import factor_stats
from prefal.words import is_balanced
from prefal.words import word_isomorphic

FIB = Directive((), (0, 1))


def spec(directive=FIB, prepend=(), chain=(), shift=0):
    return SturmianSpec(directive, tuple(prepend), tuple(chain), shift)


IN_P1 = (spec(), spec(prepend=(1, 0)), spec(Directive((), (0, 0, 1))),
         spec(Directive((1,), (0, 1))), spec(shift=3),
         spec(prepend=(0,), chain=('R0',)), spec(chain=('L0', 'L1')))


class TestSturmian(unittest.TestCase):
    """Tests for `prefal.sturmian` module."""

    def setUp(self):
        """Set up test fixtures, if any."""

    def tearDown(self):
        """Tear down test fixtures, if any."""

    def test_describe(self):
        self.assertEqual('sturm(dir=(01)*;pre=10;chain=R0)',
                         spec(prepend=(1, 0), chain=('R0',)).describe())
        self.assertEqual('sturm(dir=(01)*;pre=;shift=3;chain=)',
                         str(spec(shift=3)))

    def test_spec_errors(self):
        try:
            spec(chain=('X1',))
            self.fail('Expected exception')
        except NotSturmianError as e:
            self.assertTrue('unknown Sturmian morphism' in str(e))
        try:
            spec(shift=-1)
            self.fail('Expected exception')
        except NotSturmianError as e:
            self.assertEqual('shift must be non-negative', str(e))

    def test_standard_word(self):
        self.assertEqual('010010100100',
                         str(sturmian.realize(spec()).prefix(12)))
        x = sturmian.realize(spec(Directive((1,), (1, 0))))
        self.assertTrue(is_balanced(x, 512).balanced)
        for n in range(1, 13):
            self.assertEqual(n + 1, factor_stats(x, n, 512).count)
        try:
            sturmian.realize(spec(Directive((), (0,))))
            self.fail('Expected exception')
        except NotSturmianError as e:
            self.assertEqual('ultimately periodic word, not Sturmian',
                             str(e))

    def test_validate_rejects_unbalanced(self):
        try:
            sturmian.validate(spec(prepend=(1, 1)))
            self.fail('Expected exception')
        except NotSturmianError as e:
            self.assertTrue('is not balanced' in str(e))
        try:
            sturmian.normal_form(spec(prepend=(1,), shift=1))
            self.fail('Expected exception')
        except NotSturmianError as e:
            self.assertTrue('not left special' in str(e))

    def test_sturmian_type(self):
        fib = parse_word('morphic(0->01,1->0;0)')
        self.assertEqual(0, sturmian.sturmian_type(fib, 16))
        self.assertEqual(1, sturmian.sturmian_type(letter_exchange(fib)))
        self.assertEqual(1, sturmian.sturmian_type(
            spec(Directive((1,), (1, 0)))))
        try:
            sturmian.sturmian_type(Periodic(FiniteWord((0, 1), BINARY)))
            self.fail('Expected exception')
        except NotSturmianError as e:
            self.assertTrue('not Sturmian at this bound' in str(e))

    def test_normal_form(self):
        nf = sturmian.normal_form(spec(prepend=(0,), chain=('R0',)))
        self.assertEqual((), nf.prepend)
        self.assertEqual(0, nf.shift)
        self.assertEqual(Directive((0,), (0, 1)), nf.directive)
        nf = sturmian.normal_form(spec(chain=('R1',)))
        self.assertEqual(1, nf.shift)
        self.assertFalse(nf.singular)

    def test_normal_form_realizes_same_word(self):
        for s in IN_P1 + (spec(prepend=(0,)), spec(prepend=(1,), chain=(
                'R0',)), spec(prepend=(0,), chain=('L1',))):
            nf = sturmian.normal_form(s)
            self.assertEqual(sturmian.realize(s, False).prefix(256),
                             sturmian.realize(nf, False).prefix(256),
                             s.describe())

    def test_is_in_P1(self):
        self.assertFalse(sturmian.is_in_P1(spec(prepend=(0,))))
        self.assertTrue(sturmian.is_in_P1(spec(prepend=(1, 0))))
        self.assertTrue(sturmian.is_in_P1(spec()))
        self.assertFalse(sturmian.is_in_P1(spec(prepend=(1,), chain=('R0',))))

    def test_is_singular(self):
        self.assertFalse(sturmian.is_singular(spec()).singular)
        result = sturmian.is_singular(spec(prepend=(1, 0)))
        self.assertTrue(result.singular)
        self.assertEqual('10', str(result.prefix))
        self.assertEqual(FIB, result.normal_form.directive)
        self.assertFalse(sturmian.is_singular(
            spec(prepend=(0,), chain=('R0',))).singular)
        # L_a preserves singularity
        self.assertTrue(sturmian.is_singular(
            spec(prepend=(0,), chain=('L0',))).singular)

    def test_classify_sturmian(self):
        verdict = sturmian.classify_sturmian(spec())
        self.assertEqual(HierarchyStatus.IN_P_INFINITY_CERTIFIED,
                         verdict.status)
        verdict = sturmian.classify_sturmian(spec(prepend=(0,)))
        self.assertEqual(HierarchyStatus.NOT_IN_P_N, verdict.status)
        self.assertEqual(1, verdict.level)
        verdict = sturmian.classify_sturmian(spec(prepend=(1, 0)))
        self.assertEqual(HierarchyStatus.NOT_IN_P_N, verdict.status)
        self.assertEqual(2, verdict.level)
        self.assertTrue(verdict.evidence.startswith('singular: '))

    def test_classify_agrees_with_hierarchy(self):
        for s in (spec(), spec(prepend=(0,)), spec(prepend=(1, 0)),
                  spec(Directive((), (0, 0, 1)))):
            exact = sturmian.classify_sturmian(s)
            verdict = classify_hierarchy(sturmian.realize(s), 4)
            self.assertEqual(exact.status, verdict.status, s.describe())
            self.assertEqual(exact.level, verdict.level, s.describe())

    def test_desubstitute(self):
        x = sturmian.realize(spec(prepend=(1, 0)))
        tag, y = sturmian.desubstitute(x)
        self.assertEqual('R0', tag)
        self.assertEqual('1', str(y.prefix(1)))
        self.assertTrue(scan_up(y, 64).n < 3)
        try:
            sturmian.desubstitute(sturmian.realize(spec()))
            self.fail('Expected exception')
        except BaseCaseError as e:
            self.assertTrue('base case, use delta_base' in str(e))

    def test_desubstitute_left(self):
        # type 0 word beginning with 00
        x = sturmian.realize(spec(Directive((), (0, 0, 1))))
        tag, y = sturmian.desubstitute(x)
        self.assertEqual('L0', tag)
        self.assertTrue(scan_up(y, 64).n < scan_up(x, 64).n)
        image = [s for c in y.prefix(100).symbols
                 for s in ((0, 1) if c == 1 else (0,))]
        self.assertEqual(x.prefix(len(image)).symbols, tuple(image))

    def test_left_desubstitution_carries_up_set(self):
        for text in ('sturm(dir=(001)*;pre=;chain=)',
                     'sturm(dir=(01)*;pre=0;chain=)',
                     'sturm(dir=(01)*;pre=0;chain=L0)'):
            x = parse_word(text)
            tag, y = sturmian.desubstitute(x)
            self.assertEqual('L0', tag, text)
            m = lr_morphism(tag)
            self.assertEqual([str(u) for u in scan_up(x).up_set],
                             sorted((str(m.apply_finite(u))
                                     for u in scan_up(y).up_set), key=len),
                             text)

    def test_right_desubstitution_drops_first_letter(self):
        for text in ('sturm(dir=(01)*;pre=10;chain=)',
                     'sturm(dir=(001)*;pre=1;chain=)'):
            x = parse_word(text)
            tag, y = sturmian.desubstitute(x)
            self.assertEqual('R0', tag, text)
            m = lr_morphism(tag)
            self.assertEqual([str(u) for u in scan_up(x).up_set[1:]],
                             sorted((str(m.apply_finite(u))
                                     for u in scan_up(y).up_set), key=len),
                             text)
            self.assertEqual('1', str(scan_up(x).up_set[0]))

    def test_delta_base(self):
        fib = parse_word('morphic(0->01,1->0;0)')
        delta = sturmian.delta_base(fib)
        self.assertEqual('1211212112112121121', str(delta.prefix(19)))
        other = sturmian.delta_base(letter_exchange(fib))
        self.assertIsNotNone(word_isomorphic(delta.prefix(256),
                                             other.prefix(256)))
        try:
            sturmian.delta_base(sturmian.realize(spec(prepend=(1, 0))))
            self.fail('Expected exception')
        except PrefalError as e:
            self.assertTrue('delta_base needs UP(x) = {a, ab}' in str(e))

    def test_sturmian_delta(self):
        self.assertEqual('1211212112112121121',
                         str(sturmian.sturmian_delta(spec()).prefix(19)))
        x = sturmian.realize(spec(prepend=(1, 0)))
        delta = sturmian.sturmian_delta(x)
        self.assertEqual(('1', '2'), delta.alphabet.glyphs)
        try:
            sturmian.sturmian_delta(parse_word('morphic(1->12,2->13,3->1;1)'))
            self.fail('Expected exception')
        except NotSturmianError as e:
            self.assertTrue('has no Sturmian structural description' in str(e))

    def test_sturmian_delta_matches_derived_word(self):
        for s in IN_P1:
            x = sturmian.realize(s)
            lazy = DerivedWord(x, scan_up(x))
            self.assertEqual(lazy.prefix(256),
                             sturmian.sturmian_delta(s).prefix(256),
                             s.describe())

    def test_sturmian_delta_is_sturmian(self):
        for s in IN_P1:
            y = sturmian.sturmian_delta(s)
            self.assertTrue(is_balanced(y, 512).balanced, s.describe())
            for n in range(1, 13):
                self.assertEqual(n + 1, factor_stats(y, n, 512).count)

    def test_sturmian_delta_of_standard_is_standard(self):
        for s in (spec(), spec(Directive((), (0, 0, 1))),
                  spec(Directive((1,), (0, 1)))):
            y = sturmian.sturmian_delta(s)
            for k in range(1, 13):
                left = [str(u) for u in
                        factor_stats(y, k, 1024).left_special]
                self.assertTrue(str(y.prefix(k)) in left, s.describe())

    def test_up_pair(self):
        u, v = sturmian.up_pair(spec())
        self.assertEqual(('01', '0'), (str(u), str(v)))
        u, v = sturmian.up_pair(spec(prepend=(1, 0)))
        self.assertEqual(('100', '10'), (str(u), str(v)))
        u, v = sturmian.up_pair(spec(Directive((0,), (0, 1))))
        self.assertTrue(str(u).startswith('00'))
        self.assertTrue(str(u).endswith('1'))

    def test_two_codewords(self):
        for s in IN_P1:
            x = sturmian.realize(s)
            analysis = certify_up(x, scan_up(x))
            self.assertEqual(2, analysis.phi.size, s.describe())
            self.assertTrue(analysis.certified, s.describe())
            u, v = sturmian.up_pair(s)
            self.assertEqual(sorted([str(u), str(v)], key=len),
                             sorted(analysis.phi.as_strings(), key=len))

    def test_certify_refutes_a_standard(self):
        x = sturmian.realize(spec(prepend=(0,)))
        analysis = certify_up(x, scan_up(x))
        self.assertTrue(analysis.refutation.startswith(
            'Sturmian word of the form aS'))

    def test_exact_longest_unbordered(self):
        self.assertEqual('01', str(sturmian.exact_longest_unbordered(spec())))
        self.assertEqual('100', str(sturmian.exact_longest_unbordered(
            spec(prepend=(1, 0)))))
        for s in IN_P1:
            analysis = scan_up(sturmian.realize(s))
            self.assertEqual(analysis.n,
                             len(sturmian.exact_longest_unbordered(s)),
                             s.describe())

    def test_delta_spec(self):
        y, letter_map = sturmian.delta_spec(spec())
        self.assertTrue(isinstance(y, SturmianSpec))
        self.assertEqual((1, 0), letter_map)
        for s in IN_P1:
            y, letter_map = sturmian.delta_spec(s)
            self.assertEqual(sorted(letter_map), [0, 1])
            realized = sturmian.SturmianWord(y, letter_map=letter_map)
            self.assertEqual(
                sturmian.sturmian_delta(s).prefix(128).symbols,
                realized.prefix(128).symbols, s.describe())
