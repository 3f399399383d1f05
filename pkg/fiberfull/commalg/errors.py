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
Exceptions raised by the commalg package.

Every exception carries a default message, which can be replaced by a
more specific one when raising it.
"""

class FiberfullException(Exception):
    """Base class for all errors of this package.

    Args:
        message (str) (optional): A message replacing the default
            message of the exception class
    """
    MESSAGE = "Error in the computer algebra backend"

    def __init__(self, message=None):
        self.message = message if message else self.MESSAGE
        super().__init__(self.message)

    def to_dict(self):
        """Get a machine readable description of the error.

        Returns:
            dict: The name of the error and its message
        """
        return {'type': type(self).__name__, 'message': self.message}

class InvalidGradingException(FiberfullException):
    MESSAGE = "Error, all variable weights must be positive integers"

class InvalidFieldException(FiberfullException):
    MESSAGE = "Error, the characteristic of a prime field must be a prime"

class RingMismatchException(FiberfullException):
    MESSAGE = "Error, the operands live in different rings"

class OrderMismatchException(FiberfullException):
    MESSAGE = "Error, the operands use different term orders"

class InvalidArgumentException(FiberfullException):
    MESSAGE = "Error, invalid argument"

class WeightVectorMismatchException(FiberfullException):
    MESSAGE = ("Error, the weight vector does not represent the term "
               "order on the Groebner basis")

class InfiniteDimensionException(FiberfullException):
    MESSAGE = ("Error, the graded pieces are not finite dimensional "
               "over the field, specialize the parameter first")

class CohomologicalIndexException(FiberfullException):
    MESSAGE = "Error, the cohomological index is out of range"

class TheoremViolationException(FiberfullException):
    """Raised when a square-free degeneration that passed the fiber-full
    check produces different local cohomology tables.

    Args:
        instance (dict): Everything needed to reproduce the computation
        message (str) (optional): A more specific message
    """
    MESSAGE = ("Error, square-free initial ideal and fiber-full family "
               "but the local cohomology tables differ")

    def __init__(self, instance, message=None):
        super().__init__(message)
        self.instance = instance

    def to_dict(self):
        data = super().to_dict()
        data['instance'] = self.instance

        return data

class ParseException(FiberfullException):
    """A syntax error in a problem file.

    Args:
        message (str): Description of the problem
        line (int): The line of the offending token, starting with 1
        column (int): The column of the offending token, starting with 1
    """
    MESSAGE = "Syntax error"

    def __init__(self, message=None, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = "%s at line %d, column %d" % (
                message or self.MESSAGE, line, column)
        super().__init__(message)

    def to_dict(self):
        data = super().to_dict()
        data['line'] = self.line
        data['column'] = self.column

        return data

class UndeclaredVariableException(ParseException):
    MESSAGE = "Error, undeclared variable"

class UnknownCommandException(FiberfullException):
    MESSAGE = "Error, unknown command"
