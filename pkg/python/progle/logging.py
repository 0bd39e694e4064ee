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

import abc
import os
import sys

from .constants import kEnvVar_LoggingSeverity


__all__ = ['LoggerInterface', 'SeverityFilter', 'ConsoleLogger', 'defaultLogger',
           'setDefaultLogger']


##
# @name Logger Interface
class LoggerInterface(abc.ABC):
    """
    The interface every logger in the library implements. Severities
    are integers, where lower numbers are more severe.
    """

    ##
    # @name Log Severity
    # @{

    kDebugAPI = 6
    kDebug = 5
    kInfo = 4
    kProgress = 3
    kWarning = 2
    kError = 1
    kCritical = 0

    ## Readable labels, indexed by severity.
    kSeverityNames = ('critical', 'error', 'warning', 'progress', 'info', 'debug', 'debugAPI')

    ## @}

    @abc.abstractmethod
    def log(self, message, severity):
        """
        Logs a message.

        @param message str

        @param severity int, One of the kSeverity constants.
        """

    def progress(self, decimalProgress, message=""):
        """
        Logs the progress of a long running task, such as a benchmark
        sweep, as a percentage followed by the message.

        @param decimalProgress float, Between 0 and 1.
        """
        self.log("%3d%% %s" % (int(100 * decimalProgress), message or ""), self.kProgress)


def _severityFromEnvironment(fallback):
    try:
        return int(os.environ[kEnvVar_LoggingSeverity])
    except (KeyError, ValueError):
        return fallback


class SeverityFilter(LoggerInterface):
    """
    Wraps another logger, relaying only the messages at or above a
    display severity.

    @envvar **PROGLE_LOGGING_SEVERITY** *int* [2] The initial display
    severity. Values that are not integers are ignored.
    """

    def __init__(self, upstreamLogger):
        super(SeverityFilter, self).__init__()
        self.__upstreamLogger = upstreamLogger
        self.__displaySeverity = _severityFromEnvironment(self.kWarning)

    def upstreamLogger(self):
        return self.__upstreamLogger

    ## @name Display Severity
    # Greater severities have a lower numerical value.
    ## @{

    def setSeverity(self, severity):
        self.__displaySeverity = severity

    def getSeverity(self):
        return self.__displaySeverity

    ## @}

    def log(self, message, severity):
        if severity <= self.__displaySeverity:
            self.__upstreamLogger.log(message, severity)

    def progress(self, decimalProgress, message=""):
        if self.__displaySeverity >= self.kProgress:
            self.__upstreamLogger.progress(decimalProgress, message)


class ConsoleLogger(LoggerInterface):
    """
    Prints "[severity]: message" lines to the console.
    """

    ## ANSI color of each severity that is highlighted.
    kColorCodes = {
        LoggerInterface.kCritical: 1,
        LoggerInterface.kError: 1,
        LoggerInterface.kWarning: 3,
        LoggerInterface.kDebug: 2,
        LoggerInterface.kDebugAPI: 6,
    }

    def __init__(self, colorOutput=True, stream=None):
        """
        @param colorOutput bool [True] Color the output using terminal
        escape codes.

        @param stream file [None] When set, all messages are written
        here. Otherwise messages more severe than kInfo go to stderr,
        and the rest to stdout. The command line tools route everything
        to stderr so that stdout only carries reports.
        """
        super(ConsoleLogger, self).__init__()
        self.__colorOutput = colorOutput
        self.__stream = stream

    def log(self, message, severity):
        line = "%11s: %s\n" % ("[%s]" % self.kSeverityNames[severity], message)
        code = self.kColorCodes.get(severity)
        if self.__colorOutput and code is not None:
            line = "\033[0;3%dm%s\033[0m" % (code, line)

        stream = self.__stream
        if stream is None:
            stream = sys.stderr if severity < self.kInfo else sys.stdout
        stream.write(line)


__defaultLogger = None


def defaultLogger():
    """
    Returns the logger used by library functions that are not handed
    one explicitly. It is created on demand as a SeverityFilter around
    an uncolored ConsoleLogger writing to stderr.
    """
    global __defaultLogger
    if __defaultLogger is None:
        __defaultLogger = SeverityFilter(ConsoleLogger(colorOutput=False, stream=sys.stderr))
    return __defaultLogger


def setDefaultLogger(logger):
    """
    Replaces the logger returned by @ref defaultLogger. Passing None
    restores the lazily created console logger.
    """
    global __defaultLogger
    __defaultLogger = logger
