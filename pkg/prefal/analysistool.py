# -*- coding: utf-8 -*-

import sys
import logging
import prefal
from prefal import constants
from prefal import report
from prefal.basecmdtool import BaseCommandLineTool
from prefal.basecmdtool import check_positive
from prefal.coloring import frontier
from prefal.coloring import prefix_coloring
from prefal.coloring import separating_coloring
from prefal.coloring import thue_morse_coloring
from prefal.corpus import find_entry
from prefal.dsl import parse_coloring
from prefal.dsl import parse_word
from prefal.exceptions import CrossCheckError
from prefal.exceptions import PrefalError
from prefal.prefactor import HierarchyStatus
from prefal.prefactor import classify_hierarchy
from prefal.prefactor import derived_chain
from prefal.sturmian import SturmianSpec
from prefal.sturmian import SturmianWord
from prefal.sturmian import classify_sturmian
from prefal.sturmian import is_singular
from prefal.words import StandardSturmian

logger = logging.getLogger(__name__)


NAMED_COLORINGS = {'thue-morse': thue_morse_coloring,
                   'prefix': prefix_coloring,
                   'separating': lambda: separating_coloring(
                       prefix_coloring())}
"""
Colorings the ``color`` command accepts by name
"""


def as_sturmian(word):
    """
    Gets **word** as a :py:class:`~prefal.sturmian.SturmianWord` when it
    has a Sturmian structural description, ``None`` otherwise
    """
    if isinstance(word, SturmianWord):
        return word
    if isinstance(word, StandardSturmian):
        return SturmianWord(SturmianSpec(word.directive))
    return None


def cross_check(hierarchy, sturmian):
    """
    Compares the verdict of the unbordered prefix pipeline with the
    exact Sturmian verdict

    :raises CrossCheckError: if the two verdicts contradict each other
    """
    if sturmian is None or hierarchy.status == HierarchyStatus.UNRESOLVED:
        return
    status = hierarchy.status
    if status == HierarchyStatus.NOT_IN_P_N:
        agree = (sturmian.status == HierarchyStatus.NOT_IN_P_N and
                 sturmian.level == hierarchy.level)
    elif status == HierarchyStatus.IN_P_INFINITY_CERTIFIED:
        agree = sturmian.status == HierarchyStatus.IN_P_INFINITY_CERTIFIED
    else:
        agree = not (hierarchy.certified and
                     sturmian.status == HierarchyStatus.NOT_IN_P_N and
                     sturmian.level <= hierarchy.level)
    if not agree:
        raise CrossCheckError('cross-check failure: hierarchy says ' +
                              status.value + '(' + str(hierarchy.level) +
                              '), Sturmian theorem says ' +
                              sturmian.status.value + '(' +
                              str(sturmian.level) + ')')


def classify_word(spec_text, word=None, depth=constants.DEFAULT_DEPTH,
                  scan_bound=constants.DEFAULT_SCAN_BOUND,
                  verify_length=constants.DEFAULT_VERIFY_LENGTH,
                  square_free_levels=None, entries=None):
    """
    Runs the hierarchy pipeline on **spec_text** and, for Sturmian
    specs, the exact Sturmian classification, then cross-checks them

    :param square_free_levels: levels flagged square-free, taken from
                               the matching corpus entry if ``None``
    :type square_free_levels: list
    :param entries: corpus searched for **spec_text**
    :type entries: list
    :raises CrossCheckError: if the two pipelines disagree
    :return: ``(final verdict, report body)``
    :rtype: tuple
    """
    if word is None:
        word = parse_word(spec_text)
    if square_free_levels is None:
        entry = find_entry(spec_text, entries)
        square_free_levels = entry.square_free_levels if entry else ()
    hierarchy = classify_hierarchy(word, depth, scan_bound, verify_length,
                                   square_free_levels)
    body = {'hierarchy': report.verdict_to_dict(hierarchy),
            'chain': report.chain_to_dict(hierarchy.chain),
            'square_free_levels': sorted(square_free_levels),
            'sturmian': None}
    final = hierarchy
    sturm = as_sturmian(word)
    if sturm is not None:
        sturmian = classify_sturmian(sturm)
        singularity = is_singular(sturm)
        body['sturmian'] = report.verdict_to_dict(sturmian)
        body['sturmian']['singular'] = singularity.singular
        body['sturmian']['normal_form'] = singularity.normal_form.describe()
        cross_check(hierarchy, sturmian)
        final = sturmian
    body['verdict'] = report.verdict_to_dict(final)
    return final, body


class GenerateCommand(BaseCommandLineTool):
    """
    Prints a prefix of a word
    """
    COMMAND = 'generate'

    def __init__(self, theargs):
        """
        Constructor

        :param theargs: Command line arguments with **spec**, **length**
                        and **output_format**
        :type theargs: :py:class:`~python.argparse.Namespace`
        """
        super().__init__()
        self._spec = theargs.spec
        self._length = theargs.length
        self._format = theargs.output_format

    def run(self):
        """
        Writes the prefix

        :return: 0
        :rtype: int
        """
        if self._length < 0:
            raise PrefalError('length must be >= 0')
        word = parse_word(self._spec)
        prefix = str(word.prefix(self._length))
        if self._format == constants.JSON_FORMAT:
            self.write_report(report.make_report(
                self.COMMAND, self._spec,
                {'word': word.describe(), 'length': self._length,
                 'prefix': prefix}), self._format)
        else:
            sys.stdout.write(prefix + '\n')
        return constants.EXIT_OK

    @staticmethod
    def add_subparser(subparsers):
        """
        Adds the ``generate`` subparser

        :return: parser
        """
        desc = """

        Version {version}

        {cmd} prints the first <length> letters of the word
        described by <spec>, for example

        {cmd} "morphic(0->01,1->0;0)" 12
        """.format(version=prefal.__version__,
                   cmd=GenerateCommand.COMMAND)
        parser = subparsers.add_parser(GenerateCommand.COMMAND,
                                       help='Prints a prefix of a word',
                                       description=desc,
                                       formatter_class=constants.ArgParseFormatter)
        parser.add_argument('spec', help='Word spec')
        parser.add_argument('length', type=int, help='Prefix length')
        BaseCommandLineTool.add_format_argument(parser)
        return parser


class DeriveCommand(BaseCommandLineTool):
    """
    Prints the chain of derived words with their unbordered prefix
    analyses
    """
    COMMAND = 'derive'

    def __init__(self, theargs):
        """
        Constructor

        :param theargs: Command line arguments with **spec**,
                        **depth**, **scan_bound**, **verify_len**,
                        **square_free_level** and **output_format**
        :type theargs: :py:class:`~python.argparse.Namespace`
        """
        super().__init__()
        self._theargs = theargs
        self._spec = theargs.spec
        self._format = theargs.output_format

    def run(self):
        """
        Computes the chain

        :return: 0
        :rtype: int
        """
        check_positive(self._theargs, ['depth', 'scan_bound', 'verify_len'])
        word = parse_word(self._spec)
        levels = self._theargs.square_free_level
        if levels is None:
            entry = find_entry(self._spec)
            levels = entry.square_free_levels if entry else ()
        chain = derived_chain(word, self._theargs.depth,
                              self._theargs.scan_bound,
                              self._theargs.verify_len,
                              square_free_levels=levels)
        for level in chain.levels:
            if level.analysis.stall is not None:
                logger.warning('level %d stalls at %d', level.index,
                               level.analysis.stall)
        self.write_report(report.make_report(self.COMMAND, self._spec,
                                             report.chain_to_dict(chain)),
                          self._format)
        return constants.EXIT_OK

    @staticmethod
    def add_subparser(subparsers):
        """
        Adds the ``derive`` subparser

        :return: parser
        """
        desc = """

        Version {version}

        {cmd} computes x, delta(x), delta(delta(x)), ... and prints for
        each level its unbordered prefixes, the code table and the
        longest unbordered prefix length, then any cycle found
        """.format(version=prefal.__version__,
                   cmd=DeriveCommand.COMMAND)
        parser = subparsers.add_parser(DeriveCommand.COMMAND,
                                       help='Computes derived words',
                                       description=desc,
                                       formatter_class=constants.ArgParseFormatter)
        parser.add_argument('spec', help='Word spec')
        BaseCommandLineTool.add_bound_arguments(parser)
        return parser


class ClassifyCommand(BaseCommandLineTool):
    """
    Places a word in the hierarchy, cross-checked against the
    Sturmian classification for Sturmian specs
    """
    COMMAND = 'classify'

    def __init__(self, theargs):
        """
        Constructor

        :param theargs: Command line arguments with **spec**,
                        **depth**, **scan_bound**, **verify_len**,
                        **square_free_level** and **output_format**
        :type theargs: :py:class:`~python.argparse.Namespace`
        """
        super().__init__()
        self._theargs = theargs
        self._spec = theargs.spec
        self._format = theargs.output_format

    def run(self):
        """
        Classifies the word

        :raises CrossCheckError: if the pipelines disagree
        :return: 0 or 2 if the verdict is ``Unresolved``
        :rtype: int
        """
        check_positive(self._theargs, ['depth', 'scan_bound', 'verify_len'])
        final, body = classify_word(
            self._spec, depth=self._theargs.depth,
            scan_bound=self._theargs.scan_bound,
            verify_length=self._theargs.verify_len,
            square_free_levels=self._theargs.square_free_level)
        self.write_report(report.make_report(self.COMMAND, self._spec, body),
                          self._format)
        if final.status == HierarchyStatus.UNRESOLVED:
            return constants.EXIT_UNRESOLVED
        return constants.EXIT_OK

    @staticmethod
    def add_subparser(subparsers):
        """
        Adds the ``classify`` subparser

        :return: parser
        """
        desc = """

        Version {version}

        {cmd} places the word in P1 > P2 > ... > Pinf. Sturmian specs
        are also classified exactly and both verdicts must agree.

        Exit codes: 0 resolved, 1 bad spec or arguments, 2 unresolved,
        3 the two classifications disagree
        """.format(version=prefal.__version__,
                   cmd=ClassifyCommand.COMMAND)
        parser = subparsers.add_parser(ClassifyCommand.COMMAND,
                                       help='Classifies a word in the '
                                            'hierarchy',
                                       description=desc,
                                       formatter_class=constants.ArgParseFormatter)
        parser.add_argument('spec', help='Word spec')
        BaseCommandLineTool.add_bound_arguments(parser)
        return parser


class ColorCommand(BaseCommandLineTool):
    """
    Bounded search for monochromatic factorizations
    """
    COMMAND = 'color'

    def __init__(self, theargs):
        """
        Constructor

        :param theargs: Command line arguments with **spec**,
                        **coloring**, **frontier_len**, **window** and
                        **output_format**
        :type theargs: :py:class:`~python.argparse.Namespace`
        """
        super().__init__()
        self._theargs = theargs
        self._spec = theargs.spec
        self._coloring = theargs.coloring
        self._format = theargs.output_format

    def _get_coloring(self):
        if self._coloring in NAMED_COLORINGS:
            return NAMED_COLORINGS[self._coloring]()
        return parse_coloring(self._coloring)

    def run(self):
        """
        Runs the frontier search

        :return: 0
        :rtype: int
        """
        check_positive(self._theargs, ['frontier_len'])
        word = parse_word(self._spec)
        coloring = self._get_coloring()
        result = frontier(word, coloring, self._theargs.frontier_len,
                          self._theargs.window)
        body = {'coloring': coloring.describe(),
                'frontier': report.frontier_to_dict(result)}
        self.write_report(report.make_report(self.COMMAND, self._spec, body),
                          self._format)
        return constants.EXIT_OK

    @staticmethod
    def add_subparser(subparsers):
        """
        Adds the ``color`` subparser

        :return: parser
        """
        desc = """

        Version {version}

        {cmd} reports, for each color, the cut points of the first
        <frontier-len> letters reachable by factorizations into pieces
        of that color. Results are bounded evidence only.

        <coloring> is one of {names} or a spec such as

        "coloring{{ prefix_end(0)->0; prefix_end(1)->1; otherwise->2 }}"
        """.format(version=prefal.__version__,
                   cmd=ColorCommand.COMMAND,
                   names=', '.join(sorted(NAMED_COLORINGS.keys())))
        parser = subparsers.add_parser(ColorCommand.COMMAND,
                                       help='Searches for monochromatic '
                                            'factorizations',
                                       description=desc,
                                       formatter_class=constants.ArgParseFormatter)
        parser.add_argument('spec', help='Word spec')
        parser.add_argument('coloring', help='Coloring name or spec')
        parser.add_argument('--frontier-len', type=int,
                            default=constants.DEFAULT_FRONTIER_LENGTH,
                            help='Prefix length searched')
        parser.add_argument('--window', type=int, default=None,
                            help='Longest piece; a color is dead when no '
                                 'cut point is reachable in the last '
                                 '<window> positions. Defaults to a '
                                 'quarter of --frontier-len')
        BaseCommandLineTool.add_format_argument(parser)
        return parser
