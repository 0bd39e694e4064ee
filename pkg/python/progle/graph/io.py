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
# @namespace progle.graph.io
# Readers and writers for the text formats a graph travels in.
#
# Edge lists are UTF-8 text, one whitespace separated "u v" or "u v w"
# edge per line. Lines starting with '#' are comments. The first data
# line may hold a single integer n, in which case the nodes are the
# integers 0..n-1, indexed in that order, and isolated nodes survive.
#
# Node maps are written one "label index" pair per line.

import math

import numpy as np

from ..exceptions import ParseError, ValidationError
from ..logging import LoggerInterface, defaultLogger
from .NodeIdMap import NodeIdMap
from .SparseGraph import SparseGraph


__all__ = ['loadEdgeList', 'saveEdgeList', 'loadNodeIdMap', 'saveNodeIdMap',
           'writeCoordinateText']


def _dataLines(path):
    with open(path, "r", encoding="utf-8") as f:
        for lineNumber, line in enumerate(f, start=1):
            tokens = line.split()
            if not tokens or tokens[0].startswith("#"):
                continue
            yield lineNumber, tokens


def loadEdgeList(path, weighted=False, logger=None):
    """
    Reads an undirected graph from an edge list.

    Each edge is inserted in both directions, and the weights of
    repeated edges are summed. Node indices are assigned in order of
    first appearance. Self-loops are dropped with a warning, though
    their node is still registered.

    @param path str, The file to read.

    @param weighted bool [False] Read the third column as the edge
    weight. When False, a third column is ignored and every edge
    weighs 1.

    @return tuple(SparseGraph, NodeIdMap)

    @exception progle.exceptions.ParseError If a line is malformed.

    @exception progle.exceptions.ValidationError If a weight is not a
    finite positive number.
    """
    logger = logger or defaultLogger()

    nodeIdMap = NodeIdMap()
    declaredCount = None
    rows, cols, weights = [], [], []
    selfLoops = 0
    seenData = False

    for lineNumber, tokens in _dataLines(path):

        if not seenData and len(tokens) == 1:
            seenData = True
            try:
                declaredCount = int(tokens[0])
            except ValueError:
                raise ParseError(
                    "Expected a node count header, got '%s'" % tokens[0], path, lineNumber)
            if declaredCount < 0:
                raise ParseError("Negative node count header", path, lineNumber)
            for label in range(declaredCount):
                nodeIdMap.add(label)
            continue
        seenData = True

        if len(tokens) not in (2, 3):
            raise ParseError(
                "Expected 'u v' or 'u v w', got %d field(s)" % len(tokens), path, lineNumber)

        u, v = tokens[0], tokens[1]
        if declaredCount is not None:
            for label in (u, v):
                if label not in nodeIdMap:
                    raise ParseError(
                        "Node '%s' is outside of the declared 0..%d" % (label, declaredCount - 1),
                        path, lineNumber)

        weight = 1.0
        if weighted and len(tokens) == 3:
            try:
                weight = float(tokens[2])
            except ValueError:
                raise ParseError("Malformed weight '%s'" % tokens[2], path, lineNumber)
            if not math.isfinite(weight) or weight <= 0:
                raise ValidationError(
                    "Edge weight must be a finite number > 0, got %s (%s:%d)" % (
                        tokens[2], path, lineNumber))

        i = nodeIdMap.add(u)
        j = nodeIdMap.add(v)
        if i == j:
            selfLoops += 1
            continue
        rows.append(i)
        cols.append(j)
        weights.append(weight)

    if selfLoops:
        logger.log("Dropped %d self-loop(s) from %s" % (selfLoops, path), LoggerInterface.kWarning)

    graph = SparseGraph.fromEdges(len(nodeIdMap), rows, cols, weights)
    return graph, nodeIdMap


def saveEdgeList(graph, path):
    """
    Writes a graph as an edge list using internal indices, preceded by
    the node count header. Each undirected edge is written once, with
    the smaller index first. The weight column is only written when any
    weight differs from 1, using the shortest repr that round-trips, so
    that reading the file back (weighted, if a weight column was
    written) yields an identical graph.
    """
    upper = _upperTriangle(graph.adjacency())
    writeWeights = bool(np.any(upper.data != 1.0))
    with open(path, "w", encoding="utf-8") as f:
        f.write("%d\n" % graph.nodeCount())
        for i in range(upper.shape[0]):
            start, end = upper.indptr[i], upper.indptr[i + 1]
            for j, w in zip(upper.indices[start:end].tolist(), upper.data[start:end].tolist()):
                if writeWeights:
                    f.write("%d %d %r\n" % (i, j, w))
                else:
                    f.write("%d %d\n" % (i, j))


def _upperTriangle(matrix):
    coo = matrix.tocoo()
    keep = coo.row <= coo.col
    upper = type(matrix)((coo.data[keep], (coo.row[keep], coo.col[keep])), shape=matrix.shape)
    upper = upper.tocsr()
    upper.sort_indices()
    return upper


def saveNodeIdMap(nodeIdMap, path):
    """
    Writes the "external_label internal_index" sidecar of a node map.
    """
    with open(path, "w", encoding="utf-8") as f:
        for index, label in enumerate(nodeIdMap.labels()):
            f.write("%s %d\n" % (label, index))


def loadNodeIdMap(path):
    """
    Reads a node map sidecar written by @ref saveNodeIdMap.

    @exception progle.exceptions.ParseError If a line is malformed, or
    the indices are not exactly 0..n-1.
    """
    entries = {}
    for lineNumber, tokens in _dataLines(path):
        if len(tokens) != 2:
            raise ParseError("Expected 'label index'", path, lineNumber)
        try:
            index = int(tokens[1])
        except ValueError:
            raise ParseError("Malformed index '%s'" % tokens[1], path, lineNumber)
        if index in entries:
            raise ParseError("Index %d appears twice" % index, path, lineNumber)
        entries[index] = tokens[0]

    if sorted(entries) != list(range(len(entries))):
        raise ParseError("Node map indices must be 0..%d" % (len(entries) - 1), path)
    try:
        return NodeIdMap(entries[i] for i in range(len(entries)))
    except ValueError as exc:
        raise ParseError(str(exc), path)


def writeCoordinateText(matrix, path):
    """
    Dumps a sparse matrix as coordinate text: a "%rows cols nnz" header
    followed by one "i j value" line per stored entry, in row order.
    """
    csr = matrix.tocsr()
    csr.sort_indices()
    with open(path, "w", encoding="utf-8") as f:
        f.write("%%%d %d %d\n" % (csr.shape[0], csr.shape[1], csr.nnz))
        for i in range(csr.shape[0]):
            start, end = csr.indptr[i], csr.indptr[i + 1]
            for j, value in zip(csr.indices[start:end].tolist(), csr.data[start:end].tolist()):
                f.write("%d %d %r\n" % (i, j, value))
