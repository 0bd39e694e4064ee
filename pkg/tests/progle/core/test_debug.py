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

from unittest import mock

import numpy as np
import pytest

from progle._core.debug import Debuggable, Timer, debugApiCall
from progle.logging import LoggerInterface


class Traced(Debuggable):

    @debugApiCall
    def scaled(self, matrix, factor=1.0):
        return matrix * factor

    @debugApiCall
    def failing(self):
        raise ValueError("no")


class NotDebuggable(object):

    @debugApiCall
    def method(self):
        return 1


@pytest.fixture
def traced():
    obj = Traced()
    obj._debugLogFn = mock.Mock()
    return obj


class Test_debugApiCall():

    def test_when_called_then_entry_and_exit_are_logged(self, traced):
        result = traced.scaled(np.ones((4, 3)), factor=2.0)

        assert np.array_equal(result, 2 * np.ones((4, 3)))
        calls = traced._debugLogFn.call_args_list
        assert len(calls) == 2
        assert calls[0] == mock.call(
            "-> Traced.scaled( <ndarray 4x3>, factor=2.0 )", LoggerInterface.kDebugAPI)
        exitMessage, severity = calls[1][0]
        assert exitMessage.startswith("<- Traced.scaled [")
        assert exitMessage.endswith("ms] <ndarray 4x3>")
        assert severity == LoggerInterface.kDebugAPI

    def test_when_call_raises_then_exit_is_still_logged(self, traced):
        with pytest.raises(ValueError):
            traced.failing()
        assert traced._debugLogFn.call_args_list[-1][0][0].endswith("'<exception>'")

    def test_when_calls_disabled_then_nothing_is_logged(self, traced):
        traced._debugCalls = False
        traced.scaled(np.ones(2))
        traced._debugLogFn.assert_not_called()

    def test_when_not_Debuggable_then_RuntimeError_raised(self):
        with pytest.raises(RuntimeError):
            NotDebuggable().method()

    def test_docstring_carries_signature(self):
        assert Traced.scaled.__doc__.startswith("(DebugAPI) scaled(self, matrix, factor=1.0)")


class Test_Timer():

    def test_when_exited_then_duration_is_fixed(self):
        with mock.patch("time.perf_counter", side_effect=[1.0, 1.25]):
            with Timer() as timer:
                pass
        assert timer.milliseconds() == 250.0
        assert str(timer) == "250.000ms"
