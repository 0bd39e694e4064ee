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
# @namespace progle.graph.synthetic
# Seeded generators for the synthetic graphs used by benchmarks and
# tests. Nodes are always labelled 0..n-1.

import networkx as nx
import numpy as np

from ..exceptions import ValidationError
from .NodeIdMap import NodeIdMap
from .SparseGraph import SparseGraph


__all__ = ['randomRegularGraph', 'stochasticBlockModel', 'disjointCliques']


def randomRegularGraph(nodeCount, degree, seed):
    """
    Draws a random regular graph from the stub pairing model, where
    pairings that would form self-loops or repeated edges are rejected
    and redrawn.

    @param nodeCount int, The number of nodes n.

    @param degree int, The degree of every node, < n.

    @param seed int, Seed of the pairing draws.

    @return tuple(SparseGraph, NodeIdMap) The graph has exactly
    n * degree / 2 edges.

    @exception progle.exceptions.ValidationError If no such graph
    exists, ie. n * degree is odd or degree >= n.
    """
    if nodeCount < 1:
        raise ValidationError("A regular graph needs at least one node")
    if degree < 0 or degree >= nodeCount:
        raise ValidationError(
            "Degree must satisfy 0 <= degree < n, got degree %d for n=%d" % (degree, nodeCount))
    if (nodeCount * degree) % 2:
        raise ValidationError(
            "n * degree must be even, got n=%d, degree=%d" % (nodeCount, degree))

    nxGraph = nx.random_regular_graph(degree, nodeCount, seed=seed)
    return _fromIntegerGraph(nxGraph, nodeCount)


def stochasticBlockModel(sizes, pIn, pOut, seed):
    """
    Draws a stochastic block model graph: each pair of nodes in the same
    block is joined with probability pIn, and across blocks with
    probability pOut.

    @return tuple(SparseGraph, NodeIdMap, numpy.ndarray) The last item
    holds the block of each node.
    """
    sizes = [int(s) for s in sizes]
    if not sizes or min(sizes) < 1:
        raise ValidationError("Block sizes must be positive")
    for name, p in (("pIn", pIn), ("pOut", pOut)):
        if not 0.0 <= p <= 1.0:
            raise ValidationError("%s must be a probability, got %r" % (name, p))

    probabilities = [[pIn if a == b else pOut for b in range(len(sizes))]
                     for a in range(len(sizes))]
    nxGraph = nx.stochastic_block_model(sizes, probabilities, seed=seed)
    graph, nodeIdMap = _fromIntegerGraph(nxGraph, sum(sizes))
    blocks = np.repeat(np.arange(len(sizes)), sizes)
    return graph, nodeIdMap, blocks


def disjointCliques(size, count=2):
    """
    @return tuple(SparseGraph, NodeIdMap, numpy.ndarray) count
    disconnected complete graphs of size nodes each, with the clique
    of each node.
    """
    if size < 2 or count < 1:
        raise ValidationError("Cliques need at least two nodes each")
    nxGraph = nx.disjoint_union_all([nx.complete_graph(size) for _ in range(count)])
    graph, nodeIdMap = _fromIntegerGraph(nxGraph, size * count)
    return graph, nodeIdMap, np.repeat(np.arange(count), size)


def _fromIntegerGraph(nxGraph, nodeCount):
    edges = np.array(sorted(tuple(sorted(e)) for e in nxGraph.edges()), dtype=np.int64)
    edges = edges.reshape(-1, 2)
    graph = SparseGraph.fromEdges(nodeCount, edges[:, 0], edges[:, 1])
    return graph, NodeIdMap(range(nodeCount))
