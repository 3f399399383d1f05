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


import logging
import unittest
from . import ChangedCallback
from .. import constants as c
from ..commalg import InvalidArgumentException

class StorageTest(unittest.TestCase):
    class Foo(object): pass

    def tearDown(self):
        c.Storage.reset()

    def test_get_storage(self):
        foo = self.Foo()

        s1 = c.Storage.get(self.Foo)
        s2 = c.Storage.get(foo)

        self.assertEqual(s1, s2)
        self.assertIs(s1, s2)

    def test_storage_register_key(self):
        s = c.Storage.get(self.Foo)
        s.register("prime", 101)
        s.register("prime", 7)

        self.assertEqual(s["prime"], 101)

    def test_storage_changed_callback(self):
        s = c.Storage.get(self.Foo)
        changed_callback = ChangedCallback(self, "threads", 4)

        s.register("threads", 1)
        s.register_changed_callback("threads", changed_callback)
        s["threads"] = 4

        self.assertTrue(changed_callback.called)

    def test_register_defaults(self):
        s = c.Storage.get(self.Foo)
        c.register_defaults(s)

        self.assertEqual(s["prime"], c.DEFAULT_PRIME)
        self.assertEqual(s["window_padding"], 10)
        self.assertEqual(s["default_order"], "grevlex")
        self.assertEqual(s["format"], c.FORMAT_JSON)
        self.assertEqual(s["threads"], 1)

    def test_log_level_callback(self):
        logger = logging.getLogger(c.LOGGER_NAME)
        previous = logger.level
        s = c.Storage.get(self.Foo)
        c.register_defaults(s)
        try:
            s["log_level"] = logging.DEBUG
            self.assertEqual(logger.level, logging.DEBUG)
        finally:
            logger.setLevel(previous)

    def test_seed_from_environment(self):
        self.assertEqual(c.seed_from_environment({}), 0)
        self.assertEqual(c.seed_from_environment(
            {c.SEED_VARIABLE: "12"}), 12)
        with self.assertRaises(InvalidArgumentException):
            c.seed_from_environment({c.SEED_VARIABLE: "twelve"})
