#! /usr/bin/env python

import argparse
import sys
import logging
import logging.config
import traceback

import prefal
from prefal import logutils
from prefal import constants
from prefal.exceptions import CrossCheckError
from prefal.exceptions import PrefalError
from prefal.exceptions import WordSpecError
from prefal.analysistool import GenerateCommand
from prefal.analysistool import DeriveCommand
from prefal.analysistool import ClassifyCommand
from prefal.analysistool import ColorCommand
from prefal.corpustool import CorpusRunCommand


logger = logging.getLogger(__name__)

COMMANDS = [GenerateCommand, DeriveCommand, ClassifyCommand, ColorCommand,
            CorpusRunCommand]


def _parse_arguments(desc, args):
    """
    Parses command line arguments

    :param desc: description to display on command line
    :type desc: str
    :param args: command line arguments usually :py:func:`sys.argv[1:]`
    :type args: list
    :return: arguments parsed by :py:mod:`argparse`
    :rtype: :py:class:`argparse.Namespace`
    """
    parser = argparse.ArgumentParser(description=desc,
                                     formatter_class=constants.ArgParseFormatter)

    subparsers = parser.add_subparsers(dest='command',
                                       help='Command to run. '
                                            'Type <command> -h for '
                                            'more help')
    subparsers.required = True

    for command in COMMANDS:
        command.add_subparser(subparsers)

    parser.add_argument('--logconf', default=None,
                        help='Path to python logging configuration file in '
                             'this format: https://docs.python.org/3/library/'
                             'logging.config.html#logging-config-fileformat '
                             'Setting this overrides -v parameter which uses '
                             ' default logger. (default None)')
    parser.add_argument('--verbose', '-v', action='count', default=1,
                        help='Increases verbosity of logger to standard '
                             'error for log messages in this module. Messages are '
                             'output at these python logging levels '
                             '-v = WARNING, -vv = INFO, '
                             '-vvv = DEBUG, -vvvv = NOTSET (default ERROR '
                             'logging)')
    parser.add_argument('--version', action='version',
                        version=('%(prog)s ' +
                                 prefal.__version__))

    return parser.parse_args(args)


def main(args):
    """
    Main entry point for program

    :param args: arguments passed to command line usually :py:func:`sys.argv`
    :type args: list

    :return: ``0`` on success, ``1`` for bad specs or arguments, ``2`` if
             the verdict is unresolved, ``3`` if two classifications
             disagree or corpus entries do not match
    :rtype: int
    """

    desc = """
Version {version}

Prefixal factorizations of infinite words: unbordered prefixes,
derived words, the hierarchy P1 > P2 > ... > Pinf, the exact Sturmian
classification and monochromatic factorization search.

Word specs look like:

  morphic(0->01,1->0;0)
  periodic(01)
  concat(10;morphic(0->01,1->0;0))
  image(L0 R1;sturm_std((01)*))
  sturm(dir=(01)*;pre=0;chain=R0)

    """.format(version=prefal.__version__)
    theargs = _parse_arguments(desc, args[1:])
    theargs.program = args[0]
    theargs.version = prefal.__version__

    try:
        logutils.setup_cmd_logging(theargs)
        logger.debug('Command is: ' + str(theargs.command))
        cmd = None
        for command in COMMANDS:
            if theargs.command == command.COMMAND:
                cmd = command(theargs)
        if cmd is None:
            raise PrefalError('Invalid command: ' + str(theargs.command))
        return cmd.run()
    except WordSpecError as e:
        logger.error('Invalid spec: ' + str(e))
        sys.stderr.write('Invalid spec: ' + str(e) + '\n')
        return constants.EXIT_CONFIG_ERROR
    except CrossCheckError as e:
        logger.critical(str(e))
        sys.stderr.write(str(e) + '\n')
        return constants.EXIT_CROSS_CHECK_FAILURE
    except Exception as e:
        logger.exception('Caught exception: ' + str(e))
        sys.stderr.write('\n\nCaught Exception ' + str(e))
        traceback.print_exc()
        return constants.EXIT_CONFIG_ERROR
    finally:
        logging.shutdown()


if __name__ == '__main__':  # pragma: no cover
    sys.exit(main(sys.argv))
