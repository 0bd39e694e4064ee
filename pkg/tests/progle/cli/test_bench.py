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

import pytest

from progle import RunConfig
from progle.cli import bench
from progle.cli.bench import BenchRow, formatBench, runBench
from progle.logging import LoggerInterface


class Test_runBench():

    def test_each_size_gets_a_completed_row(self, mock_logger):
        rows = runBench([(60, 4), (80, 4)], RunConfig(dim=4), logger=mock_logger)

        assert [(r.nodes, r.degree, r.edges, r.status) for r in rows] == [
            (60, 4, 120, "ok"), (80, 4, 160, "ok")]
        for row in rows:
            assert row.sparseMs >= 0 and row.propagationMs >= 0
            assert row.totalMs >= row.propagationMs
            assert row.peakBytes is None

    @pytest.mark.slow
    def test_time_grows_near_linearly_with_nodes(self, mock_logger):
        rows = runBench([(1000, 10), (10000, 10)], RunConfig(), logger=mock_logger)

        assert [r.status for r in rows] == ["ok", "ok"]
        assert rows[1].totalMs / rows[0].totalMs < 20

    def test_when_tracing_then_peak_memory_is_reported(self, mock_logger):
        rows = runBench([(60, 4)], RunConfig(dim=4), traceMemory=True, logger=mock_logger)
        assert rows[0].peakBytes > 0

    def test_when_a_size_runs_out_of_memory_then_the_sweep_continues(
            self, monkeypatch, mock_logger):
        generate = bench.randomRegularGraph

        def scarce(nodes, degree, seed):
            if nodes == 60:
                raise MemoryError()
            return generate(nodes, degree, seed)

        monkeypatch.setattr(bench, "randomRegularGraph", scarce)

        rows = runBench([(60, 4), (80, 4)], RunConfig(dim=4), traceMemory=True,
                        logger=mock_logger)

        assert [r.status for r in rows] == ["out-of-memory", "ok"]
        assert rows[0].totalMs is None
        mock_logger.log.assert_any_call(
            "Ran out of memory embedding n=60 degree=4", LoggerInterface.kError)

    def test_progress_is_reported_per_size(self, mock_logger):
        runBench([(60, 4), (80, 4)], RunConfig(dim=4), logger=mock_logger)
        fractions = [c[0][0] for c in mock_logger.progress.call_args_list]
        assert fractions == [0.0, 0.5, 1.0]


class Test_formatBench():

    def test_missing_values_are_dashes(self):
        text = formatBench([
            BenchRow(10, 2, 10, 1.0, 2.0, 3.5, 2 ** 20),
            BenchRow(20, 2, 20, status="out-of-memory")])

        lines = [line.split("\t") for line in text.splitlines()]
        assert lines[0] == list(bench.kBenchHeader)
        assert lines[1] == ["10", "2", "10", "1.000", "2.000", "3.500", "1.000", "ok"]
        assert lines[2] == ["20", "2", "20", "-", "-", "-", "-", "out-of-memory"]
