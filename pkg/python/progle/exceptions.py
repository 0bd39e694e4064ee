#
#   Copyright 2021 The Progle Authors
#
#   Licensed under the Apache License, Version 2.0 (the "License");
#   you may not use this file except in compliance with the License.
#   You may obtain a copy of the License at
#
#       http://www.apache.org/licenses/LICENSE-2.0
#
#   Unless required by applicable law or agreed to in writing, software
#   distributed under the License is distributed on an "AS IS" BASIS,
#   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#   See the License for the specific language governing permissions and
#   limitations under the License.
#

from .constants import kAlignmentErrorListLength


__all__ = ['ProgleException', 'ParseError', 'ValidationError', 'AlignmentError',
           'ConvergenceError', 'InvariantError']


class ProgleException(RuntimeError):
    """
    The ProgleException class is the base for all errors raised by the
    library. The command line surface maps each subclass onto its own
    exit code.
    """
    pass


class ParseError(ProgleException):
    """
    Thrown whenever an input file contains a line that does not follow
    the expected format.
    """

    def __init__(self, message, path=None, lineNumber=None):
        """
        @param message str, The message of the exception.

        @param path str, The file being read, if known.

        @param lineNumber int, The 1-based number of the offending
        line, if known. It is printed along with the message, so there
        is no need to embed it in the message.
        """
        ProgleException.__init__(self, message)
        self.path = path
        self.lineNumber = lineNumber

    def __str__(self):
        string = ProgleException.__str__(self)
        if self.path is None and self.lineNumber is None:
            return string
        location = str(self.path) if self.path is not None else "<input>"
        if self.lineNumber is not None:
            location = "%s:%d" % (location, self.lineNumber)
        return "%s (%s)" % (string, location)


class ValidationError(ProgleException):
    """
    Thrown when a parameter or input datum lies outside of its domain.
    """
    pass


class AlignmentError(ValidationError):
    """
    Thrown when two labelled inputs (eg. a graph and an embedding) do
    not describe the same set of nodes.
    """

    def __init__(self, message, missing=(), extra=()):
        """
        @param missing list, Labels expected but not found.

        @param extra list, Labels found but not expected.
        """
        ValidationError.__init__(self, message)
        self.missing = list(missing)
        self.extra = list(extra)

    def __str__(self):
        string = ValidationError.__str__(self)
        parts = []
        for name, labels in (("missing", self.missing), ("extra", self.extra)):
            if not labels:
                continue
            shown = ", ".join(str(l) for l in labels[:kAlignmentErrorListLength])
            if len(labels) > kAlignmentErrorListLength:
                shown += ", ... (%d in total)" % len(labels)
            parts.append("%s: %s" % (name, shown))
        return "%s [%s]" % (string, "; ".join(parts)) if parts else string


class ConvergenceError(ProgleException):
    """
    Thrown when an iterative solver stops before reaching its requested
    tolerance.
    """

    def __init__(self, message, residual=None):
        """
        @param residual float, The relative residual achieved when the
        solver gave up, if it could be determined.
        """
        ProgleException.__init__(self, message)
        self.residual = residual

    def __str__(self):
        string = ProgleException.__str__(self)
        if self.residual is None:
            return string
        return "%s (residual %.3e)" % (string, self.residual)


class InvariantError(ProgleException):
    """
    Thrown when an internal consistency check fails. This always
    indicates a defect rather than bad input.
    """
    pass
