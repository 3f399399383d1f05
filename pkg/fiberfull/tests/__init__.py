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

import os
import tempfile

class ChangedCallback(object):
    def __init__(self, test_case, expected_key, expected_value):
        self.called = False
        self._test_case = test_case
        self._expected_key = expected_key
        self._expected_value = expected_value

    def __call__(self, key, value):
        self.called = True
        self._test_case.assertEqual(self._expected_key, key)
        self._test_case.assertEqual(self._expected_value, value)

class TemporaryProblem(object):
    """Writes a problem text to a temporary file for the duration of a
    with block."""
    def __init__(self, text, suffix='.ff'):
        self._text = text
        self._suffix = suffix
        self.path = None

    def __enter__(self):
        handle, self.path = tempfile.mkstemp(suffix=self._suffix)
        with os.fdopen(handle, 'w', encoding='utf-8') as f:
            f.write(self._text)

        return self.path

    def __exit__(self, *args):
        os.remove(self.path)
