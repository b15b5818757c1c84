#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
"""

import logging

from pygments.console import colorize

from schubert.exc import *


def asbool(obj):
    """Do everything to consider ``obj`` as  boolean.

    Example::

        >>> asbool('y')
        True

    :raises: :exc:`ValueError` -- If object could not be booleanized.

    """
    if isinstance(obj, str):
        obj = obj.strip().lower()
        if obj in ['true', 'yes', 'on', 'y', 't', '1']:
            return True
        elif obj in ['false', 'no', 'off', 'n', 'f', '0']:
            return False
        else:
            raise ValueError("String is not true/false: %r" % obj)
    return bool(obj)


def parse_entries(text):
    """Parse a comma separated element such as ``2,4``.

    Example::

        >>> parse_entries(' 1, 3,6 ')
        (1, 3, 6)

    :raises: :exc:`schubert.exc.SchubertInvalidElement` on anything but integers

    """
    try:
        return tuple(int(part) for part in text.split(','))
    except (ValueError, AttributeError):
        raise SchubertInvalidElement("Expected comma separated integers, got %r" % (text,))


class MarkerFormatter(logging.Formatter):
    """Logging formatter that prefixes messages with a colored `` * ``
    marker by level, green for info, yellow for warnings, red for errors.
    Other levels are left as they are.
    """
    MARKERS = {
        logging.INFO: 'green',
        logging.WARNING: 'yellow',
        logging.ERROR: 'red',
        logging.CRITICAL: 'red',
    }

    def format(self, record):
        """format according to logging level"""
        output = super(MarkerFormatter, self).format(record)
        color = self.MARKERS.get(record.levelno)
        if color is None:
            return output
        return colorize(color, " * ") + output
