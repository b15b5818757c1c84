#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
.. currentmodule:: schubert.config

Configuration module
********************

Implements :class:`Config` and :class:`ConfigManager` to be used as
"configuration holders" and validators.

"""

import os
import shutil
import logging
from configparser import ConfigParser

from schubert.utils import asbool
from schubert.exc import *

log = logging.getLogger(__name__)
HERE = os.path.dirname(os.path.abspath(__file__))
ENV_PREFIX = 'SCHUBERT_'


class Config(dict):
    """Holds config values retrieved from various sources. To load
    configuration from a source use one of :meth:`from_*` methods.
    Class also declares supported options in :attr:`allowed_options`.

    Values are retrieved with help of :meth:`Config.validate` method.

    Example::

        >>> Config.from_env({'SCHUBERT_MAX_DEGREE': '8', 'HOME': '/root'})
        <Config {'max_degree': 8}>

    :attr:`allowed_options` format::

        'name': ('Help ..', obj_type, default_value)

    """

    allowed_options = {
        # 'config_name': ("doc", "type", "default_value"),
        'max_degree': ("Largest degree m accepted by hilbert", int, 12),
        'max_lattice': ("Largest |I(d,n)| accepted by commands that walk the lattice", int, 400),
        'max_roots': ("Largest grid counted face by face, larger grids use the recursion", int, 24),
        'max_enumeration': ("Largest number of monomials or multisets enumerated explicitly", int, 100000),
        'j_max': ("Truncation degree of the tangent cone oracle", int, 5),
        'oracle_max_variables': ("Largest number of cell coordinates the oracle accepts", int, 12),
        'jobs': ("Number of worker processes", int, 1),
        'format': ("Report format: table, json or csv", str, "table"),
        'highlight': ("Pygments formatter used to colorize JSON, none disables", str, "none"),
        'nocolors': ("Disable colorful log output", bool, False),
        'output': ("Write the report to this file instead of stdout", str, ""),
    }

    def __repr__(self):
        return "<Config %s>" % dict.__repr__(self)

    ##  from_config

    @classmethod
    def from_ini(cls, path_to_ini, section='config'):
        """Load config from .ini

        :param path_to_ini: Retrieve dictionary from `path_to_ini` file, from `section`
        :type path_to_ini: file path
        :param section: Name of the section to be used
        :type section: string
        :returns: :class:`Config` instance

        """
        config = ConfigParser()
        config.read(path_to_ini)
        if not config.has_section(section):
            return cls()
        return cls((name, cls.validate(name, value)) for name, value in config.items(section))

    @classmethod
    def from_argparse(cls, options):
        """Load config from argparse options.

        Only names listed in :attr:`allowed_options` are taken.

        :param options: Arguments retrieved from `parser.parse_args()`
        :type options: `argparse.Namespace` instance
        :returns: :class:`Config` instance

        """
        return cls((k, v) for k, v in vars(options).items()
                   if v is not None and k in cls.allowed_options)

    @classmethod
    def from_env(cls, environ=None):
        """Load config from ``SCHUBERT_<OPTION>`` environment variables.

        :param environ: defaults to :data:`os.environ`
        :returns: :class:`Config` instance

        """
        environ = os.environ if environ is None else environ
        found = []
        for name in cls.allowed_options:
            key = ENV_PREFIX + name.upper()
            if key in environ:
                found.append((name, cls.validate(name, environ[key])))
        return cls(found)

    ## validate types
    @classmethod
    def validate(cls, name, value):
        """Validates and parses config value. Will dispatch calls to
        subvalidators based on type of the config option.

        :param name: key from :attr:`Config.allowed_options`
        :type name: string
        :param value: Value to be validated and parsed
        :type value: everything
        :raises: :exc:`schubert.exc.SchubertConfigurationError` for unknown names

        """
        if name not in cls.allowed_options:
            raise SchubertConfigurationError("No such option in Config.allowed_options: %s" % name)
        validator = cls.allowed_options[name][1]
        f = getattr(cls, 'validate_%s' % validator.__name__)
        return f(value)

    @classmethod
    def validate_bool(cls, value):
        """Subvalidator which handles string values into bool

        :raises: :exc:`SchubertValidationError` if not a bool

        """
        try:
            return asbool(value)
        except ValueError:
            raise SchubertValidationError("Not a boolean (write y/n): %r" % value)

    @classmethod
    def validate_int(cls, value):
        """Subvalidator for non-negative integers, accepts their string form

        :raises: :exc:`SchubertValidationError` if not a non-negative integer

        """
        if isinstance(value, bool):
            raise SchubertValidationError("Not an integer: %r" % value)
        try:
            value = int(str(value).strip())
        except ValueError:
            raise SchubertValidationError("Not an integer: %r" % value)
        if value < 0:
            raise SchubertValidationError("Must not be negative: %r" % value)
        return value

    @classmethod
    def validate_str(cls, value):
        """Subvalidator for string.

        :raises: :exc:`SchubertValidationError` if not a string

        """
        if isinstance(value, str):
            return value
        else:
            raise SchubertValidationError("Not a string: %r" % value)


class ConfigManager(object):
    """Holds multiple :class:`Config` instances and retrieves
    values from them.

    :param use: Order of configuration taken in account
    :type use: list of strings
    :raises: :exc:`schubert.exc.SchubertConfigurationError` when:

        * option is retrieved that does not exist in :attr:`Config.allowed_options`
        * `use` does not have unique elements

    :attr:`INI_TEMPLATE_PATH` -- Absolute path to .ini template file

    Example::

        >>> mgr = ConfigManager(['argparse', 'ini'])
        >>> mgr.configs['ini'] = Config({'max_degree': 6, 'jobs': 2})
        >>> mgr.configs['argparse'] = Config({'max_degree': 8})
        >>> mgr.max_degree, mgr.jobs, mgr.max_lattice
        (8, 2, 400)

    """
    INI_TEMPLATE_PATH = os.path.join(HERE, 'templates', 'schubert.ini')
    DEFAULT_USE = ['argparse', 'env', 'ini']

    def __init__(self, use=None):
        use = list(self.DEFAULT_USE if use is None else use)
        for config in use:
            if use.count(config) != 1:
                raise SchubertConfigurationError("ConfigManager could not be setup"
                    ", config order has non-unique member: %s" % config)
        self.use = use
        self.configs = {}

    def __repr__(self):
        return "<ConfigManager configs(%s) use(%s)>" % (sorted(self.configs), self.use)

    def __getattr__(self, name):
        if name.startswith('_'):
            raise AttributeError(name)
        if name not in Config.allowed_options:
            raise SchubertConfigurationError("No such option in Config.allowed_options: %s" % name)

        for config_name in self.use:
            value = self.configs.get(config_name, {}).get(name, None)
            if value is not None:
                log.debug("Got %r for %s from %s", value, name, config_name)
                return value

        return Config.allowed_options[name][2]

    def as_dict(self):
        """Resolved value of every allowed option."""
        return dict((name, getattr(self, name)) for name in Config.allowed_options)

    @classmethod
    def load_from_ini(cls, path_to_ini, section="config_manager"):
        """Load :class:`ConfigManager` from ini file. Also populates
        ``configs['ini']`` and ``configs['env']``.

        A missing file is created from :attr:`INI_TEMPLATE_PATH`.

        :param path_to_ini: Filesystem path to ini file
        :type path_to_ini: string
        :param section: ini section to be used for :class:`ConfigManager` configuration
        :type section: string
        """
        if not os.path.exists(path_to_ini):
            shutil.copy(cls.INI_TEMPLATE_PATH, path_to_ini)
            log.info('Config was generated at %s', path_to_ini)

        config = ConfigParser()
        config.read(path_to_ini)

        if config.has_section(section):
            use = config.get(section, 'use', fallback='').split()
        else:
            use = []

        mgr = cls(use or None)
        mgr.configs['ini'] = Config.from_ini(path_to_ini)
        mgr.configs['env'] = Config.from_env()
        return mgr
