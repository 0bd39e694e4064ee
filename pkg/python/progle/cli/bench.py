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

##
# @namespace progle.cli.bench
# Scalability sweeps over synthetic regular graphs, timing the sparse
# embedding and propagation phases separately.

import tracemalloc

from .._core.debug import Timer
from ..graph.synthetic import randomRegularGraph
from ..logging import LoggerInterface, defaultLogger
from ..pipeline import Pipeline


__all__ = ['BenchRow', 'runBench', 'formatBench', 'kBenchHeader']

kBenchHeader = ("nodes", "degree", "edges", "sparse_ms", "propagation_ms", "total_ms",
                "peak_mib", "status")

kStatus_Ok = "ok"
kStatus_OutOfMemory = "out-of-memory"


class BenchRow(object):
    """
    The measurements of one graph size. Timings are None when the run
    did not complete.
    """

    def __init__(self, nodes, degree, edges=None, sparseMs=None, propagationMs=None,
                 totalMs=None, peakBytes=None, status=kStatus_Ok):
        super(BenchRow, self).__init__()
        self.nodes = nodes
        self.degree = degree
        self.edges = edges
        self.sparseMs = sparseMs
        self.propagationMs = propagationMs
        self.totalMs = totalMs
        self.peakBytes = peakBytes
        self.status = status

    def fields(self):
        def _ms(value):
            return "-" if value is None else "%.3f" % value

        peak = "-" if self.peakBytes is None else "%.3f" % (self.peakBytes / 2.0 ** 20)
        edges = "-" if self.edges is None else "%d" % self.edges
        return ("%d" % self.nodes, "%d" % self.degree, edges, _ms(self.sparseMs),
                _ms(self.propagationMs), _ms(self.totalMs), peak, self.status)


def runBench(sizes, config, traceMemory=False, logger=None):
    """
    Embeds a random regular graph of each size in turn.

    @param sizes list(tuple(int, int)), (nodes, degree) pairs.

    @param config progle.RunConfig, The run parameters. Its seed also
    seeds each graph.

    @param traceMemory bool [False] Record the peak memory allocated
    through Python's allocator during each run. Tracing slows the run,
    so timings of traced and untraced sweeps don't compare.

    @return list(BenchRow) A row per size. A size that runs out of
    memory is reported with that status, and the sweep continues.
    """
    logger = logger or defaultLogger()
    rows = []
    for index, (nodes, degree) in enumerate(sizes):
        logger.progress(index / len(sizes), "n=%d degree=%d" % (nodes, degree))
        pipeline = Pipeline(config, logger=logger)
        edges = nodes * degree // 2

        if traceMemory:
            tracemalloc.start()
        try:
            graph, _ = randomRegularGraph(nodes, degree, config.seed)
            with Timer() as timer:
                pipeline.embedGraph(graph)
        except MemoryError:
            logger.log("Ran out of memory embedding n=%d degree=%d" % (nodes, degree),
                       LoggerInterface.kError)
            rows.append(BenchRow(nodes, degree, edges, status=kStatus_OutOfMemory))
            continue
        finally:
            peak = tracemalloc.get_traced_memory()[1] if traceMemory else None
            if traceMemory:
                tracemalloc.stop()

        phases = pipeline.phaseMilliseconds()
        rows.append(BenchRow(
            nodes, degree, edges, pipeline.sparseMilliseconds(),
            phases.get(Pipeline.kPhase_Propagation), timer.milliseconds(), peak))
    logger.progress(1.0, "done")
    return rows


def formatBench(rows):
    """
    @return str, The rows as a tab separated table with a header.
    """
    lines = ["\t".join(kBenchHeader)]
    lines.extend("\t".join(row.fields()) for row in rows)
    return "\n".join(lines) + "\n"
