# -*- coding: utf-8 -*-

"""
Built in corpus of example words with their expected outcomes
"""

import os
import json
import logging

from prefal import constants
from prefal.exceptions import PrefalError

logger = logging.getLogger(__name__)


class CorpusEntry(object):
    """
    One corpus word with the outcome expected for it
    """

    def __init__(self, name=None, spec=None, status=None, level=None,
                 nu=(), square_free_levels=(), singular=None):
        """
        Constructor

        :param name: unique name of the entry
        :type name: str
        :param spec: word spec as accepted by
                     :py:func:`~prefal.dsl.parse_word`
        :type spec: str
        :param status: expected hierarchy status
        :type status: str
        :param level: expected level or ``None`` if not recorded
        :type level: int
        :param nu: expected leading values of ``N`` along the chain,
                   empty if not recorded
        :type nu: tuple
        :param square_free_levels: chain levels known to be square free
        :type square_free_levels: tuple
        :param singular: expected singularity, only set for Sturmian specs
        :type singular: bool
        """
        self.name = name
        self.spec = spec
        self.status = status
        self.level = level
        self.nu = tuple(nu)
        self.square_free_levels = tuple(square_free_levels)
        self.singular = singular

    def __eq__(self, other):
        if not isinstance(other, CorpusEntry):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __repr__(self):
        return 'CorpusEntry(' + repr(self.to_dict()) + ')'

    @property
    def sturmian(self):
        return self.spec.startswith('sturm(')

    @staticmethod
    def from_dict(data):
        """
        :raises PrefalError: if a required field is missing
        """
        for key in ('name', 'spec', 'status'):
            if key not in data:
                raise PrefalError('corpus entry ' + str(data) +
                                  ' has no ' + key)
        return CorpusEntry(name=data['name'], spec=data['spec'],
                           status=data['status'],
                           level=data.get('level'),
                           nu=tuple(data.get('nu', ())),
                           square_free_levels=tuple(
                               data.get('square_free_levels', ())),
                           singular=data.get('singular'))

    def to_dict(self):
        return {'name': self.name, 'spec': self.spec,
                'status': self.status, 'level': self.level,
                'nu': list(self.nu),
                'square_free_levels': list(self.square_free_levels),
                'singular': self.singular}


def get_corpus_path(path=None):
    """
    Gets **path** if set, else the value of the
    :py:const:`~prefal.constants.CORPUS_ENV_VAR` environment variable,
    else the corpus shipped with this package
    """
    if path is not None:
        return path
    if os.environ.get(constants.CORPUS_ENV_VAR):
        return os.environ[constants.CORPUS_ENV_VAR]
    return os.path.join(os.path.dirname(__file__), constants.CORPUS_FILE)


def load_corpus(path=None):
    """
    Loads corpus entries

    :param path: corpus JSON file, see :py:func:`get_corpus_path`
    :type path: str
    :raises PrefalError: if the file cannot be read or is malformed
    :rtype: list
    """
    corpus_path = get_corpus_path(path)
    try:
        with open(corpus_path, 'r') as f:
            data = json.load(f)
    except (OSError, ValueError) as e:
        raise PrefalError('Unable to load corpus ' + str(corpus_path) +
                          ': ' + str(e)) from e
    if 'entries' not in data:
        raise PrefalError('corpus ' + str(corpus_path) + ' has no entries')
    entries = [CorpusEntry.from_dict(d) for d in data['entries']]
    logger.debug('Loaded %d corpus entries from %s', len(entries),
                 corpus_path)
    return entries


def find_entry(spec_text, entries=None):
    """
    Gets the corpus entry with spec **spec_text**, whitespace ignored

    :return: entry or ``None``
    :rtype: :py:class:`CorpusEntry`
    """
    if entries is None:
        try:
            entries = load_corpus()
        except PrefalError as e:
            logger.warning('no corpus available: ' + str(e))
            return None
    key = ''.join(spec_text.split())
    for entry in entries:
        if ''.join(entry.spec.split()) == key:
            return entry
    return None
