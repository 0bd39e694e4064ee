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
# @namespace progle.pipeline
# The end-to-end embedding pipeline: proximity, shifted log, truncated
# SVD and scaling make the sparse embedding, which is then propagated
# through the modulated network.

from ._core.audit import auditor
from ._core.debug import Debuggable, Timer, debugApiCall
from .Embedding import Embedding
from .RunConfig import RunConfig
from .factorization.pmi import buildShiftedLog
from .factorization.proximity import buildProximity
from .factorization.svd import scaleEmbedding, truncatedSvd
from .graph.io import writeCoordinateText
from .logging import LoggerInterface, defaultLogger
from .spectral.FilterSpec import FilterSpec
from .spectral.propagation import enhance, propagate


__all__ = ['Pipeline']


class Pipeline(Debuggable):
    """
    Runs the phases of an embedding with the parameters of a RunConfig,
    timing each one.

    After a run, @ref phaseMilliseconds holds the wall-clock duration of
    each phase that ran, keyed by one of the kPhase constants, and
    @ref entryCounts the stored entry count of each sparse matrix that
    was formed.

    @code
    pipeline = Pipeline(RunConfig(dim=32))
    raw, final = pipeline.embedGraph(graph, nodeIdMap.labels())
    @endcode
    """

    ##
    # @name Phases
    # @{
    kPhase_Proximity = "proximity"
    kPhase_ShiftedLog = "shiftedLog"
    kPhase_Svd = "svd"
    kPhase_Propagation = "propagation"
    ## @}

    kSparsePhases = (kPhase_Proximity, kPhase_ShiftedLog, kPhase_Svd)

    def __init__(self, config=None, logger=None, dumpProximityPath=None, dumpShiftedPath=None):
        """
        @param config progle.RunConfig [None] Defaults throughout when
        not given.

        @param dumpProximityPath str [None] When set, the proximity
        matrix is written here as coordinate text.

        @param dumpShiftedPath str [None] As above, for the shifted log
        matrix.
        """
        super(Pipeline, self).__init__()
        self.__config = config if config is not None else RunConfig()
        self.__config.validate()
        self.__logger = logger or defaultLogger()
        self.__dumpProximityPath = dumpProximityPath
        self.__dumpShiftedPath = dumpShiftedPath
        self.__phaseMilliseconds = {}
        self.__entryCounts = {}
        self._debugLogFn = self.__logger.log

    def config(self):
        return self.__config

    def filterSpec(self):
        """
        @return progle.spectral.FilterSpec, Built from the mu, theta and
        chebK of the config.
        """
        config = self.__config
        return FilterSpec(config.mu, config.theta, config.chebK)

    def phaseMilliseconds(self):
        return dict(self.__phaseMilliseconds)

    def sparseMilliseconds(self):
        """
        @return float, The total duration of the phases that make the
        sparse embedding.
        """
        return sum(self.__phaseMilliseconds.get(p, 0.0) for p in self.kSparsePhases)

    def entryCounts(self):
        return dict(self.__entryCounts)

    def __timed(self, phase):
        return _PhaseTimer(self.__phaseMilliseconds, phase)

    @debugApiCall
    def sparseEmbedding(self, graph, labels=None):
        """
        Computes the raw sparse-factorization embedding of a graph.

        @param graph progle.graph.SparseGraph

        @param labels list(str) [None] Row labels for the result.

        @return progle.Embedding, With raw-svd provenance.
        """
        config = self.__config
        logger = self.__logger

        with self.__timed(self.kPhase_Proximity):
            proximity = buildProximity(
                graph, config.order, config.dropout, config.seed, threads=config.threads,
                logger=logger)
        self.__entryCounts[self.kPhase_Proximity] = proximity.entryCount()
        logger.log(
            "Proximity matrix: %d entries (density %.3g), per-term %s" % (
                proximity.entryCount(), proximity.density(), list(proximity.termEntryCounts())),
            LoggerInterface.kInfo)
        if self.__dumpProximityPath:
            writeCoordinateText(proximity.matrix(), self.__dumpProximityPath)

        with self.__timed(self.kPhase_ShiftedLog):
            shifted = buildShiftedLog(proximity, config.negativeRatio, config.clampNegative)
        self.__entryCounts[self.kPhase_ShiftedLog] = shifted.entryCount()
        logger.log("Shifted log matrix: %d entries" % shifted.entryCount(), LoggerInterface.kInfo)
        if self.__dumpShiftedPath:
            writeCoordinateText(shifted.matrix(), self.__dumpShiftedPath)

        with self.__timed(self.kPhase_Svd):
            u, sigma, _ = truncatedSvd(shifted.matrix(), config.dim, config.tolerance, config.seed)
            raw = scaleEmbedding(u, sigma, logger=logger)

        if labels is not None:
            raw = Embedding(raw.vectors(), Embedding.kProvenance_RawSvd, labels, logger=logger)
        return raw

    @debugApiCall
    def propagateEmbedding(self, graph, embedding):
        """
        Propagates an embedding whose rows are already in the graph's
        index order.

        @return progle.Embedding, With propagated provenance.
        """
        with self.__timed(self.kPhase_Propagation):
            return propagate(
                graph, self.filterSpec(), embedding, rescale=not self.__config.noRescale,
                seed=self.__config.seed, logger=self.__logger)

    @debugApiCall
    def embedGraph(self, graph, labels=None):
        """
        Runs the whole pipeline. When operation counting is enabled,
        the counts are logged at debug severity afterwards.

        @return tuple(progle.Embedding, progle.Embedding) The raw and
        the propagated embedding.
        """
        self.__phaseMilliseconds.clear()
        self.__entryCounts.clear()
        raw = self.sparseEmbedding(graph, labels)
        final = self.propagateEmbedding(graph, raw)
        self.__logOperationCounts()
        return raw, final

    def __logOperationCounts(self):
        counter = auditor()
        if counter.getEnabled() and counter.counts():
            self.__logger.log("Operation counts:\n%s" % counter.sprintCounts().rstrip("\n"),
                              LoggerInterface.kDebug)

    @debugApiCall
    def enhanceEmbedding(self, graph, external, nodeIdMap=None):
        """
        Propagates an externally trained embedding, aligning its rows
        to the graph by label when a node map is given.

        @exception progle.exceptions.AlignmentError If the embedding and
        graph don't describe the same nodes.
        """
        self.__phaseMilliseconds.clear()
        with self.__timed(self.kPhase_Propagation):
            return enhance(
                graph, self.filterSpec(), external, nodeIdMap=nodeIdMap,
                rescale=not self.__config.noRescale, seed=self.__config.seed,
                logger=self.__logger)


class _PhaseTimer(Timer):
    """
    A Timer that records its duration under a phase name on exit.
    """

    def __init__(self, sink, phase):
        super(_PhaseTimer, self).__init__()
        self.__sink = sink
        self.__phase = phase

    def __exit__(self, *args):
        super(_PhaseTimer, self).__exit__(*args)
        self.__sink[self.__phase] = self.milliseconds()
