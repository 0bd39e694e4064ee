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

import functools
import inspect
import os
import time

from ..constants import kEnvVar_Debug
from ..logging import LoggerInterface


__all__ = ['debugApiCall', 'Debuggable', 'Timer']

## @namespace progle._core.debug
## Decorators used to trace the phases of a pipeline run.
##
## @envvar **PROGLE_DEBUG** *int* [1] when non-zero, debug decorators
## will be enabled, allowing pipeline phases to be monitored and timed
## using the kDebugAPI logging severity.
##
## In order to use these decorators the target class must derive from
## Debuggable, and have its `_debugLogFn` set to a callable that
## matches the @ref progle.logging.LoggerInterface.log signature.

enableDebugDecorators = os.environ.get(kEnvVar_Debug, "1") != "0"


class Debuggable:
    """
    A base class for any objects that you wish to make use of the debug
    decorators with.
    """

    ## If enabled, decorated calls on the object will be logged
    _debugCalls = True
    ## Set to a callable that matches @ref progle.logging.LoggerInterface.log
    _debugLogFn = None


def debugApiCall(function):
    """
    Use as a decorator to trace usage of the decorated method through
    the kDebugAPI logging severity, along with its wall-clock duration.
    Arrays are summarised by their shape rather than printed.
    """

    if not enableDebugDecorators:
        return function

    @functools.wraps(function)
    def _debugApiCall(self, *args, **kwargs):
        return _traceCall(function, LoggerInterface.kDebugAPI, self, *args, **kwargs)

    sig = "(DebugAPI) %s%s" % (function.__name__, inspect.signature(function))
    d = function.__doc__
    _debugApiCall.__doc__ = "%s\n%s" % (sig, d) if d else sig

    return _debugApiCall


def _traceCall(function, severity, self, *args, **kwargs):
    if not isinstance(self, Debuggable):
        raise RuntimeError(
            "Debug tracing methods can only be used on instances of a"
            " class derived from Debuggable")

    if not (self._debugCalls and self._debugLogFn is not None):
        return function(self, *args, **kwargs)

    allArgs = [_summarise(a) for a in args]
    allArgs.extend(["%s=%s" % (k, _summarise(v)) for k, v in kwargs.items()])

    self._debugLogFn(
        "-> %s.%s( %s )" % (type(self).__name__, function.__name__, ", ".join(allArgs)),
        severity)

    result = "<exception>"
    timer = Timer()
    try:
        with timer:
            result = function(self, *args, **kwargs)
    finally:
        self._debugLogFn(
            "<- %s.%s [%s] %s" % (
                type(self).__name__, function.__name__, timer, _summarise(result)),
            severity)

    return result


def _summarise(value):
    shape = getattr(value, "shape", None)
    if shape is not None:
        return "<%s %s>" % (type(value).__name__, "x".join(str(s) for s in shape))
    if isinstance(value, (tuple, list)):
        return "(%s)" % ", ".join(_summarise(v) for v in value)
    return repr(value)


class Timer(object):
    """
    A monotonic wall-clock timer, used as a context manager around each
    phase of a run. Intervals are reported in milliseconds.
    """

    def __init__(self):
        object.__init__(self)
        self.start = 0.0
        self.end = None

    def __enter__(self):
        self.start = time.perf_counter()
        self.end = None
        return self

    def __exit__(self, *args):
        self.end = time.perf_counter()

    def milliseconds(self):
        end = self.end if self.end is not None else time.perf_counter()
        return 1000.0 * (end - self.start)

    def __str__(self):
        return "%.3fms" % self.milliseconds()
