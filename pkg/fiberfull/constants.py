#! /usr/bin/env python3
# -*- coding: utf-8 -*-
# Copyright (c) 2026 by the fiberfull authors
#
#    This file is part of fiberfull.
#
#    fiberfull is free software: you can redistribute it and/or modify
#    it under the terms of the GNU General Public License as published by
#    the Free Software Foundation, either version 3 of the License, or
#    (at your option) any later version.
#
#    fiberfull is distributed in the hope that it will be useful,
#    but WITHOUT ANY WARRANTY; without even the implied warranty of
#    MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#    GNU General Public License for more details.
#
#    You should have received a copy of the GNU General Public License
#    long with fiberfull. If not, see <http://www.gnu.org/licenses/>.


"""
This module contains the defaults of the command line tool and the
storage holding the settings of a run.
"""

import logging
import os

from .commalg.errors import InvalidArgumentException

DEFAULT_PRIME = 32003
DEFAULT_WINDOW_PADDING = 10
DEFAULT_ORDER = 'grevlex'
DEFAULT_THREADS = 1
DEFAULT_LOG_LEVEL = logging.WARNING
SEED_VARIABLE = 'FIBERFULL_SEED'

FORMAT_JSON = 'json'
FORMAT_CSV = 'csv'

EXIT_SUCCESS = 0
EXIT_FAILURE = 1
EXIT_THEOREM_VIOLATION = 2

LOGGER_NAME = 'fiberfull'

class Storage(dict):
    """A key value based storage for application data.

    This is a storage for the settings of the application. It is
    intended to have one instance per class that needs a storage.
    """

    PROJECT_STORAGE = {}

    def __init__(self, *args, **kwargs):
        super(Storage, self).__init__(*args, **kwargs)
        self.__changed_callbacks = {}

    @classmethod
    def get(cls, _object):
        """Get the storage for a class.

        Args:
            _object: Class or instance of the class to get a storage for.

        Returns:
            Storage: The storage instance for the class
        """
        if type(_object) == type:
            name = _object.__name__
        else:
            name = type(_object).__name__
        if name not in cls.PROJECT_STORAGE:
            cls.PROJECT_STORAGE[name] = cls()

        return cls.PROJECT_STORAGE[name]

    @classmethod
    def reset(cls):
        cls.PROJECT_STORAGE.clear()

    def register_changed_callback(self, key, callback):
        if not key in self.__changed_callbacks:
            self.__changed_callbacks[key] = []

        self.__changed_callbacks[key].append(callback)

    def register(self, key, default):
        if not key in self:
            self[key] = default

    def __setitem__(self, key, value):
        super(Storage, self).__setitem__(key, value)
        if key in self.__changed_callbacks:
            for cb in self.__changed_callbacks[key]:
                cb(key, value)

def seed_from_environment(environ=None):
    """Read the seed for random test points from FIBERFULL_SEED.

    Raises:
        InvalidArgumentException: if the variable is not an integer
    """
    environ = os.environ if environ is None else environ
    value = environ.get(SEED_VARIABLE, '0')
    try:
        return int(value)
    except ValueError:
        raise InvalidArgumentException(
            "Error, %s=%s is not an integer" % (SEED_VARIABLE, value))

def set_log_level(key, level):
    logging.getLogger(LOGGER_NAME).setLevel(level)

def register_defaults(storage):
    """Register the default settings in a storage."""
    if 'log_level' not in storage:
        storage.register_changed_callback('log_level', set_log_level)
    storage.register('prime', DEFAULT_PRIME)
    storage.register('window_padding', DEFAULT_WINDOW_PADDING)
    storage.register('default_order', DEFAULT_ORDER)
    storage.register('format', FORMAT_JSON)
    storage.register('threads', DEFAULT_THREADS)
    storage.register('log_level', DEFAULT_LOG_LEVEL)
    storage.register('seed', seed_from_environment())
