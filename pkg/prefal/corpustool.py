# -*- coding: utf-8 -*-

import os
import re
import sys
import time
import logging
from multiprocessing import Pool

import pandas as pd
from tqdm import tqdm

import prefal
from prefal import constants
from prefal import logutils
from prefal import report
from prefal.analysistool import classify_word
from prefal.basecmdtool import BaseCommandLineTool
from prefal.basecmdtool import check_positive
from prefal.corpus import get_corpus_path
from prefal.corpus import load_corpus
from prefal.exceptions import CrossCheckError
from prefal.exceptions import PrefalError

logger = logging.getLogger(__name__)


COLUMNS = ['name', 'spec', 'expected_status', 'expected_level', 'status',
           'level', 'singular', 'nu', 'match', 'error']
"""
Columns of the corpus run table
"""

LEVEL_COLUMNS = ['expected_level', 'level']
"""
Integer columns that are empty for ``InPInfinity_Certified``
"""


def run_entry(job):
    """
    Classifies one corpus entry and compares it with its expectation.
    Top level so it can be sent to worker processes

    :param job: ``(entry, depth, scan_bound, verify_length)``
    :type job: tuple
    :return: ``(table row, report)``
    :rtype: tuple
    """
    entry, depth, scan_bound, verify_length = job
    row = {'name': entry.name, 'spec': entry.spec,
           'expected_status': entry.status,
           'expected_level': entry.level,
           'status': None, 'level': None, 'singular': None, 'nu': '',
           'match': False, 'error': ''}
    try:
        final, body = classify_word(entry.spec, depth=depth,
                                    scan_bound=scan_bound,
                                    verify_length=verify_length,
                                    square_free_levels=list(
                                        entry.square_free_levels))
    except CrossCheckError as e:
        row['error'] = str(e)
        return row, None
    except PrefalError as e:
        logger.error('corpus entry ' + entry.name + ' failed: ' + str(e))
        row['error'] = str(e)
        return row, None
    nu = [int(n.lstrip('>=')) for n in body['chain']['nu']]
    row['status'] = final.status.value
    row['level'] = final.level
    row['nu'] = ','.join(body['chain']['nu'])
    if body['sturmian'] is not None:
        row['singular'] = body['sturmian']['singular']
    problems = []
    if final.status.value != entry.status:
        problems.append('status')
    if entry.level is not None and final.level != entry.level:
        problems.append('level')
    if entry.nu and tuple(nu[:len(entry.nu)]) != tuple(entry.nu):
        problems.append('nu')
    if entry.singular is not None and row['singular'] != entry.singular:
        problems.append('singular')
    row['match'] = not problems
    if problems:
        row['error'] = 'mismatch in ' + ', '.join(problems)
    return row, report.make_report('classify', entry.spec, body)


def _report_file_name(name):
    return 'report_' + re.sub(r'[^A-Za-z0-9_.-]', '_', name) + '.json'


class CorpusRunCommand(BaseCommandLineTool):
    """
    Classifies every corpus word and compares the verdicts with the
    recorded expectations
    """
    COMMAND = 'corpus-run'

    def __init__(self, theargs):
        """
        Constructor

        :param theargs: Command line arguments with **corpus**, **jobs**,
                        **outdir**, **depth**, **scan_bound**,
                        **verify_len** and **output_format**
        :type theargs: :py:class:`~python.argparse.Namespace`
        """
        super().__init__()
        self._theargs = theargs
        self._corpus = theargs.corpus
        self._jobs = theargs.jobs
        self._outdir = theargs.outdir
        if self._outdir is not None:
            self._outdir = os.path.abspath(self._outdir)
        self._format = theargs.output_format
        self._start_time = int(time.time())

    def _classify_all(self, entries):
        jobs = [(e, self._theargs.depth, self._theargs.scan_bound,
                 self._theargs.verify_len) for e in entries]
        t = tqdm(total=len(jobs), desc='Corpus', unit='words')
        results = []
        if self._jobs > 1:
            logger.debug('Poolsize for corpus run set to: ' +
                         str(self._jobs))
            with Pool(processes=self._jobs) as pool:
                for res in pool.imap(run_entry, jobs):
                    t.update()
                    results.append(res)
        else:
            for job in jobs:
                results.append(run_entry(job))
                t.update()
        t.close()
        return results

    def _write_outputs(self, df, reports):
        df.to_csv(os.path.join(self._outdir, constants.CORPUS_REPORT_FILE),
                  sep='\t', index=False)
        for name, data in reports:
            if data is not None:
                self.save_report_to_json(self._outdir, data,
                                         _report_file_name(name))

    def run(self):
        """
        Runs the corpus

        :return: 0 if every entry matches, 3 otherwise
        :rtype: int
        """
        check_positive(self._theargs, ['jobs', 'depth', 'scan_bound',
                                       'verify_len'])
        entries = load_corpus(self._corpus)
        if self._outdir is not None:
            os.makedirs(self._outdir, mode=0o755, exist_ok=True)
            logutils.write_task_start_json(
                outdir=self._outdir, start_time=self._start_time,
                version=prefal.__version__,
                data={'corpus': get_corpus_path(self._corpus),
                      'depth': self._theargs.depth,
                      'scan_bound': self._theargs.scan_bound,
                      'verify_len': self._theargs.verify_len})
        exitcode = constants.EXIT_CROSS_CHECK_FAILURE
        try:
            results = self._classify_all(entries)
            df = pd.DataFrame([row for row, _ in results], columns=COLUMNS)
            for col in LEVEL_COLUMNS:
                df[col] = pd.to_numeric(df[col]).astype('Int64')
            if self._format == constants.JSON_FORMAT:
                sys.stdout.write(df.to_json(orient='records', indent=2) +
                                 '\n')
            else:
                sys.stdout.write(df.to_csv(sep='\t', index=False))
            if self._outdir is not None:
                self._write_outputs(df, [(row['name'], data)
                                         for row, data in results])
            mismatches = len(df) - int(df['match'].astype(bool).sum())
            if mismatches:
                logger.error(str(mismatches) + ' of ' + str(len(df)) +
                             ' corpus entries do not match')
            else:
                exitcode = constants.EXIT_OK
            return exitcode
        finally:
            if self._outdir is not None:
                logutils.write_task_finish_json(outdir=self._outdir,
                                                start_time=self._start_time,
                                                status=exitcode)

    @staticmethod
    def add_subparser(subparsers):
        """
        Adds the ``corpus-run`` subparser

        :return: parser
        """
        desc = """

        Version {version}

        {cmd} classifies every entry of the corpus and compares the
        outcome with the expected one. The corpus is --corpus if set,
        else the file named by the {env} environment variable, else the
        corpus shipped with this package.

        With --outdir, {tsv}, one JSON report per entry and task
        start/finish files are written there.

        Exits 3 if any entry does not match.
        """.format(version=prefal.__version__,
                   cmd=CorpusRunCommand.COMMAND,
                   env=constants.CORPUS_ENV_VAR,
                   tsv=constants.CORPUS_REPORT_FILE)
        parser = subparsers.add_parser(CorpusRunCommand.COMMAND,
                                       help='Runs the example corpus',
                                       description=desc,
                                       formatter_class=constants.ArgParseFormatter)
        parser.add_argument('--corpus', default=None,
                            help='Corpus JSON file')
        parser.add_argument('--jobs', type=int, default=1,
                            help='Number of worker processes')
        parser.add_argument('--outdir', default=None,
                            help='Directory to write reports to')
        parser.add_argument('--depth', type=int,
                            default=constants.DEFAULT_DEPTH,
                            help='Number of derived levels computed')
        parser.add_argument('--scan-bound', type=int,
                            default=constants.DEFAULT_SCAN_BOUND,
                            help='Longest prefix scanned for unbordered '
                                 'prefixes')
        parser.add_argument('--verify-len', type=int,
                            default=constants.DEFAULT_VERIFY_LENGTH,
                            help='Prefix length over which the greedy '
                                 'factorization is run')
        BaseCommandLineTool.add_format_argument(parser)
        return parser
