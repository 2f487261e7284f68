#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Tests for `prefal.prefalcmd` module."""

import io
import unittest
from unittest.mock import MagicMock
from unittest.mock import patch

from prefal import constants
from prefal import prefalcmd
from prefal.prefactor import HierarchyStatus


def run_main(*args):
    """
    Runs main with stdout and stderr captured
    """
    with patch('sys.stdout', new_callable=io.StringIO) as out, \
            patch('sys.stderr', new_callable=io.StringIO) as err:
        exitcode = prefalcmd.main(['prefalcmd.py'] + list(args))
    return exitcode, out.getvalue(), err.getvalue()


class TestPrefalcmd(unittest.TestCase):
    """Tests for `prefal.prefalcmd` module."""

    def setUp(self):
        """Set up test fixtures, if any."""

    def tearDown(self):
        """Tear down test fixtures, if any."""

    def test_parse_arguments(self):
        res = prefalcmd._parse_arguments('hi', ['generate', 'periodic(01)',
                                                '4'])
        self.assertEqual('generate', res.command)
        self.assertEqual(1, res.verbose)
        self.assertIsNone(res.logconf)
        res = prefalcmd._parse_arguments('hi', ['-vvv', 'corpus-run',
                                                '--jobs', '2'])
        self.assertEqual(4, res.verbose)
        self.assertEqual(2, res.jobs)

    def test_parse_arguments_needs_command(self):
        with patch('sys.stderr', new_callable=io.StringIO):
            with self.assertRaises(SystemExit):
                prefalcmd._parse_arguments('hi', [])

    def test_generate(self):
        exitcode, out, _ = run_main('generate', 'morphic(0->01,1->0;0)', '12')
        self.assertEqual(constants.EXIT_OK, exitcode)
        self.assertEqual('010010100100\n', out)
        exitcode, out, _ = run_main('generate', 'periodic(01)', '4')
        self.assertEqual('0101\n', out)
        exitcode, out, _ = run_main('generate',
                                    'morphic(1->12,2->13,3->1;1)', '12')
        self.assertEqual('121312112131\n', out)

    def test_invalid_spec(self):
        exitcode, out, err = run_main('generate', 'morphic(0->01;0)', '5')
        self.assertEqual(constants.EXIT_CONFIG_ERROR, exitcode)
        self.assertEqual('', out)
        self.assertTrue('Invalid spec: ' in err)

    def test_bad_bound(self):
        exitcode, _, err = run_main('derive', 'periodic(01)',
                                    '--scan-bound', '0')
        self.assertEqual(constants.EXIT_CONFIG_ERROR, exitcode)
        self.assertTrue('--scan-bound must be a positive integer' in err)

    def test_classify_unresolved(self):
        exitcode, out, _ = run_main('classify', 'concat(1;periodic(0))',
                                    '--depth', '3', '--scan-bound', '64',
                                    '--verify-len', '512')
        self.assertEqual(constants.EXIT_UNRESOLVED, exitcode)
        self.assertTrue('Unresolved' in out)

    def test_cross_check_failure(self):
        wrong = MagicMock(status=HierarchyStatus.NOT_IN_P_N, level=1,
                          certified=True, evidence='')
        with patch('prefal.analysistool.classify_sturmian',
                   return_value=wrong):
            exitcode, _, err = run_main('classify', 'sturm(dir=(01)*)',
                                        '--depth', '4')
        self.assertEqual(constants.EXIT_CROSS_CHECK_FAILURE, exitcode)
        self.assertTrue('cross-check failure' in err)
