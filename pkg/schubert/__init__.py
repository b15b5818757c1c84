#!/usr/bin/env python
# -*- coding: utf-8 -*-

from importlib.metadata import version, PackageNotFoundError

try:
    __version__ = version('schubert-tc')
except PackageNotFoundError:
    __version__ = '0.1.0'
