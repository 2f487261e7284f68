# -*- coding: utf-8 -*-
import os
import sys
import logging
from prefal import constants
from prefal import report
from prefal.exceptions import PrefalError

logger = logging.getLogger(__name__)


class BaseCommandLineTool(object):
    """
    Base class for all command line tools.
    Command line tools MUST subclass this
    """

    COMMAND = 'BaseCommandLineTool'

    def __init__(self):
        """
        Constructor
        """
        pass

    def write_report(self, data, output_format, out=None):
        """
        Writes **data** rendered as **output_format** followed by a
        newline

        :param data: report built by :py:func:`prefal.report.make_report`
        :type data: dict
        :param output_format: one of
                              :py:const:`~prefal.constants.OUTPUT_FORMATS`
        :type output_format: str
        :param out: stream, standard out if ``None``
        """
        if out is None:
            out = sys.stdout
        out.write(report.render(data, output_format) + '\n')

    def save_report_to_json(self, outdir, data, file_name):
        """
        Saves report **data** as sorted key JSON in **outdir**

        :param outdir: Output directory where the file will be saved
        :param data: report
        :type data: dict
        :param file_name: Name of the file to save the report in
        """
        json_file_path = os.path.join(outdir, file_name)
        with open(json_file_path, 'w') as json_file:
            json_file.write(report.render(data, constants.JSON_FORMAT))

    def run(self):
        """
        Should contain logic that will be run by command line tool.
        This must be implemented by sub classes and will always raise
        an error

        :raises PrefalError: will always raise this
        :return:
        """
        raise PrefalError('Must be implemented by subclass')

    @staticmethod
    def add_subparser(subparsers):
        """
        Should add any argparse commandline arguments to **subparsers** passed in
        This must be implemented by sub classes and will always raise
        an error

        :param subparsers:
        :type subparsers: argparse
        :return:
        """
        raise PrefalError('Must be implemented by subclass')

    @staticmethod
    def add_bound_arguments(parser, depth=True):
        """
        Adds ``--scan-bound``, ``--verify-len``, ``--format`` and, if
        **depth** is ``True``, ``--depth`` and ``--square-free-level``
        to **parser**
        """
        parser.add_argument('--scan-bound', type=int,
                            default=constants.DEFAULT_SCAN_BOUND,
                            help='Longest prefix scanned for unbordered '
                                 'prefixes')
        parser.add_argument('--verify-len', type=int,
                            default=constants.DEFAULT_VERIFY_LENGTH,
                            help='Prefix length over which the greedy '
                                 'factorization is run and morphic '
                                 'certificates are checked')
        if depth:
            parser.add_argument('--depth', type=int,
                                default=constants.DEFAULT_DEPTH,
                                help='Number of derived levels computed')
            parser.add_argument('--square-free-level', type=int,
                                action='append', default=None,
                                dest='square_free_level',
                                help='Level index known to be square-free. '
                                     'Can be given more than once. If '
                                     'unset, flags of a matching corpus '
                                     'entry are used')
        BaseCommandLineTool.add_format_argument(parser)

    @staticmethod
    def add_format_argument(parser):
        parser.add_argument('--format', choices=constants.OUTPUT_FORMATS,
                            default=constants.TEXT_FORMAT,
                            dest='output_format',
                            help='Output format')


def check_positive(args, names):
    """
    Checks that attributes **names** of **args** are positive integers

    :raises PrefalError: if one is not
    """
    for name in names:
        value = getattr(args, name, None)
        if value is None or value < 1:
            raise PrefalError('--' + name.replace('_', '-') +
                              ' must be a positive integer, got ' +
                              str(value))
