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


import collections
import json
import os
import tempfile
import unittest

from .. import reports
from ..commalg import InvalidArgumentException

def hilbert_document():
    return collections.OrderedDict([
        ('command', 'localcohom'),
        ('tables', [collections.OrderedDict([
            ('label', 'H^1'),
            ('window', [-1, 0]),
            ('dims', collections.OrderedDict([('-1', 2), ('0', 1)])),
        ])]),
    ])

class JsonExporterTest(unittest.TestCase):
    def test_key_order(self):
        document = collections.OrderedDict([('z', 1), ('a', [True, None])])
        data = reports.JsonExporter(document).export_to_data()
        self.assertEqual(data, '{\n  "z": 1,\n  "a": [\n    true,\n'
            '    null\n  ]\n}\n')

    def test_export_to_file(self):
        handle, path = tempfile.mkstemp(suffix='.json')
        os.close(handle)
        try:
            reports.JsonExporter(hilbert_document()).export_to_file(path)
            with open(path, encoding='utf-8') as f:
                self.assertEqual(json.load(f), json.loads(json.dumps(
                    hilbert_document())))
        finally:
            os.remove(path)

class CsvExporterTest(unittest.TestCase):
    def test_hilbert_tables(self):
        data = reports.CsvExporter(hilbert_document()).export_to_data()
        self.assertEqual(data, 'table,nu,dim\nH^1,-1,2\nH^1,0,1\n')

    def test_betti_table(self):
        document = {'command': 'betti', 'betti': {
            'table': {'0': {'0': 1}, '1': {'1': 3}}, 'extremal': []}}
        data = reports.CsvExporter(document).export_to_data()
        self.assertEqual(data, 'i,j,beta\n0,0,1\n1,1,3\n')

    def test_no_tables(self):
        with self.assertRaises(InvalidArgumentException):
            reports.CsvExporter({'command': 'gb'}).export_to_data()

    def test_exporters(self):
        self.assertIs(reports.EXPORTERS['json'], reports.JsonExporter)
        self.assertIs(reports.EXPORTERS['csv'], reports.CsvExporter)
