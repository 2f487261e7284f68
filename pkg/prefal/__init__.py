# -*- coding: utf-8 -*-

"""Top-level package for prefal."""

__author__ = 'Prefal team'
__email__ = 'prefal@words.dev'
__version__ = '0.1.0'
__repo_url__ = 'https://github.com/prefal/prefal'
__description__ = 'Prefixal factorizations of infinite words'
