
import argparse


class ArgParseFormatter(argparse.ArgumentDefaultsHelpFormatter,
                        argparse.RawDescriptionHelpFormatter):
    """
    Combine two :py:class:`argparse` Formatters to get help
    and default values
    displayed when showing help

    """
    pass


LOG_FORMAT = "%(asctime)-15s %(levelname)s %(relativeCreated)dms " \
             "%(filename)s::%(funcName)s():%(lineno)d %(message)s"
"""
Sets format of logging messages
"""

DEFAULT_SCAN_BOUND = 256
"""
Longest prefix length scanned for unbordered prefixes
"""

DEFAULT_VERIFY_LENGTH = 4096
"""
Prefix length used to verify certificates and collect
the pieces actually used by the factorization
"""

DEFAULT_DEPTH = 6
"""
Default number of derived levels computed by a chain
"""

CYCLE_PREFIX_LENGTH = 512
"""
Prefix length compared, up to a letter bijection,
when looking for cycles among derived levels
"""

DEFAULT_FRONTIER_LENGTH = 64
"""
Default prefix length for monochromatic frontier search
"""

BORDER_ORACLE_CAP = 14
"""
Largest word length for exhaustive border oracle runs
"""

FACTORIZATION_ORACLE_CAP = 24
"""
Largest prefix length accepted by the factorization oracles
"""

REDUCTION_STEP_CAP = 64
"""
Maximum number of Sturmian desubstitution steps
"""

STURMIAN_VALIDATION_BOUND = 512
"""
Prefix length of the balance check gating Sturmian specs
"""

STURMIAN_COMPLEXITY_MAX_N = 12
"""
Largest factor length checked for n+1 complexity
on Sturmian specs
"""

FRONTIER_FULL_SET_LIMIT = 256
"""
Frontier reports list every reachable cut point up to this length
and only a summary beyond
"""

REPORT_SCHEMA_VERSION = 1
"""
Version of the JSON report schema
"""

CORPUS_ENV_VAR = 'PREFAL_CORPUS'
"""
Environment variable overriding the path of the corpus file
"""

CORPUS_FILE = 'corpus.json'
"""
Name of packaged corpus file
"""

CORPUS_REPORT_FILE = 'corpus_report.tsv'
"""
Name of tab delimited summary written by corpus-run
"""

TASK_FILE_PREFIX = 'task_'
"""
Prefix for task file
"""

TASK_START_FILE_SUFFIX = '_start.json'
"""
Suffix for task start file
"""

TASK_FINISH_FILE_SUFFIX = '_finish.json'
"""
Suffix for task finish file
"""

EXIT_OK = 0
"""
Exit code when a verdict or report was produced
"""

EXIT_CONFIG_ERROR = 1
"""
Exit code for parse or configuration errors
"""

EXIT_UNRESOLVED = 2
"""
Exit code when the hierarchy verdict is unresolved
"""

EXIT_CROSS_CHECK_FAILURE = 3
"""
Exit code when independent pipelines disagree
"""

JSON_FORMAT = 'json'
"""
JSON output format
"""

TEXT_FORMAT = 'text'
"""
Plain text output format
"""

OUTPUT_FORMATS = [JSON_FORMAT, TEXT_FORMAT]
"""
Supported output formats
"""
