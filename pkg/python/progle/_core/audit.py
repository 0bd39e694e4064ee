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

import contextlib
import functools
import os
import threading

from ..constants import kEnvVar_Audit


__all__ = ['auditor', 'auditCall', 'auditing', 'Auditor']

##
# @namespace progle._core.audit
# This module counts the expensive primitive operations performed by
# the numeric kernels (sparse products, matrix-vector products), so
# that their cost contracts can be checked.
# @envvar **PROGLE_AUDIT** *int* [0] If non-zero, counting is enabled
# from import onwards.

## Will hold the singleton Auditor object
__auditor = None


def auditor():
    """
    Returns a singleton Auditor, created on demand.
    """
    global __auditor
    if not __auditor:
        __auditor = Auditor(enabled=os.environ.get(kEnvVar_Audit, "0") != "0")
    return __auditor


def auditCall(key):
    """
    A decorator that counts one call under the supplied key each time
    the decorated function runs whilst the auditor is enabled. Unlike
    tracing, the check happens per call so that counting can be turned
    on around a region of interest.

    @param key str, The name the calls are counted under.
    """

    def _wrapAuditCall(function):

        @functools.wraps(function)
        def _auditCall(*args, **kwargs):
            a = auditor()
            if a.getEnabled():
                a.addCall(key)
            return function(*args, **kwargs)

        return _auditCall

    return _wrapAuditCall


@contextlib.contextmanager
def auditing():
    """
    A context manager that enables and resets the auditor for the
    duration of the block, yielding it so counts can be inspected.
    The previous enabled state is restored on exit.
    """
    a = auditor()
    wasEnabled = a.getEnabled()
    a.reset()
    a.setEnabled(True)
    try:
        yield a
    finally:
        a.setEnabled(wasEnabled)


class Auditor(object):
    """
    A simple accounting mechanism for operation counts. Counts are
    keyed by arbitrary strings and are safe to increment from worker
    threads.
    """

    def __init__(self, enabled=False):
        super(Auditor, self).__init__()

        self.__enabled = enabled
        self.__lock = threading.Lock()
        self.reset()

    def getEnabled(self):
        return self.__enabled

    def setEnabled(self, enabled):
        self.__enabled = enabled

    def reset(self):
        self.__counts = {}

    def addCall(self, key, count=1):
        """
        Adds count calls under key.

        @return int, The new total for the key.
        """
        if not self.__enabled:
            return self.__counts.get(key, 0)

        with self.__lock:
            total = self.__counts.get(key, 0) + count
            self.__counts[key] = total
        return total

    def count(self, key):
        return self.__counts.get(key, 0)

    def counts(self):
        """
        @return dict, A copy of all counts since the last reset.
        """
        return dict(self.__counts)

    def sprintCounts(self):
        """
        @return str, One "key: count" line per recorded key, in key
        order, or an empty string when nothing was counted.
        """
        counts = self.counts()
        return "".join("%s: %d\n" % (key, counts[key]) for key in sorted(counts))
