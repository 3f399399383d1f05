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
Exporters writing the documents produced by the commands.
"""

import csv
import io
import json
from abc import ABC, abstractmethod

from .commalg.errors import InvalidArgumentException

class Exporter(ABC):
    """Base class of an exporter for a report document.

    Args:
        document (dict): The report, built from dictionaries, lists,
            strings, integers and booleans
    """
    def __init__(self, document):
        self.__document = document

    def get_document(self):
        return self.__document

    def export_to_data(self):
        """Export the document of this exporter as text.

        Returns:
            str
        """
        return self._build_body(self.__document)

    def export_to_file(self, file_path):
        """Export the document of this exporter to a file

        Args:
            file_path (str): The path of the file to export to.
        """
        self._write_data(file_path, self.export_to_data())

    def _write_data(self, file_path, data):
        with open(file_path, 'w', encoding='utf-8', newline='') as f:
            f.write(data)

    @abstractmethod
    def _build_body(self, document):
        """Convert the document into text.

        Returns:
            str
        """
        pass

class JsonExporter(Exporter):
    """Writes the document as JSON keeping the key order of the
    document."""
    def _build_body(self, document):
        return json.dumps(document, indent=2, ensure_ascii=False) + '\n'

class CsvExporter(Exporter):
    """Writes the Hilbert or Betti tables of a document as CSV.

    Hilbert tables become rows 'table,nu,dim', Betti tables rows
    'i,j,beta'.
    """
    def _build_body(self, document):
        output = io.StringIO()
        writer = csv.writer(output, lineterminator='\n')
        if 'tables' in document:
            writer.writerow(['table', 'nu', 'dim'])
            for table in document['tables']:
                for nu, dim in table['dims'].items():
                    writer.writerow([table['label'], nu, dim])
        elif 'betti' in document and 'table' in document['betti']:
            writer.writerow(['i', 'j', 'beta'])
            for i, row in document['betti']['table'].items():
                for j, beta in row.items():
                    writer.writerow([i, j, beta])
        else:
            raise InvalidArgumentException(
                "Error, the command %s has no tables to write as CSV" %
                document.get('command'))

        return output.getvalue()

EXPORTERS = {
    'json': JsonExporter,
    'csv': CsvExporter,
}
