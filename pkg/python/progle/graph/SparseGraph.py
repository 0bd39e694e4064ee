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

import numpy as np
import scipy.sparse as sp

from ..exceptions import ValidationError
from .NodeIdMap import NodeIdMap


__all__ = ['SparseGraph']


class SparseGraph(object):
    """
    An immutable, undirected, weighted graph held as a symmetric CSR
    adjacency matrix A, along with its weighted degree vector (the
    diagonal of D).

    The adjacency is always canonical: sorted column indices, no
    duplicates and strictly positive weights. Self-loops are rejected
    unless explicitly allowed. The degree of each node is computed
    from its row, never stored independently.

    Instances are safe to share between threads. Callers must treat
    the matrices handed out by the accessors as read-only.
    """

    def __init__(self, adjacency, allowSelfLoops=False):
        """
        @param adjacency scipy.sparse matrix, A square, symmetric matrix
        of positive weights.

        @param allowSelfLoops bool [False] Permit stored diagonal
        entries.

        @exception progle.exceptions.ValidationError If the matrix
        breaks any of the invariants above.
        """
        super(SparseGraph, self).__init__()

        if not sp.issparse(adjacency):
            raise ValidationError("A SparseGraph must be built from a sparse matrix")
        if adjacency.shape[0] != adjacency.shape[1]:
            raise ValidationError("Adjacency must be square, got %dx%d" % adjacency.shape)

        a = sp.csr_matrix(adjacency, dtype=np.float64, copy=True)
        a.sum_duplicates()
        a.sort_indices()

        if a.nnz and not np.all(np.isfinite(a.data)):
            raise ValidationError("Edge weights must be finite")
        if a.nnz and np.any(a.data <= 0):
            raise ValidationError("Edge weights must be > 0")
        if not allowSelfLoops and a.diagonal().any():
            raise ValidationError("Graph contains self-loops")
        if (a != a.T).nnz:
            raise ValidationError("Adjacency is not symmetric")

        degree = np.asarray(a.sum(axis=1), dtype=np.float64).ravel()
        degree.setflags(write=False)

        self.__adjacency = a
        self.__degree = degree

    @classmethod
    def fromEdges(cls, nodeCount, rows, cols, weights=None):
        """
        Builds a graph from a list of undirected edges. Each edge is
        inserted in both directions and the weights of repeated edges
        are summed.

        @param nodeCount int, The number of nodes, so isolated nodes
        can be represented.

        @param rows, cols array-like(int), Edge endpoints, which must be
        distinct.

        @param weights array-like(float) [None] Edge weights, all ones
        when omitted.
        """
        rows = np.asarray(rows, dtype=np.int64)
        cols = np.asarray(cols, dtype=np.int64)
        if rows.shape != cols.shape:
            raise ValidationError("Edge endpoint arrays differ in length")
        if weights is None:
            weights = np.ones(rows.shape[0], dtype=np.float64)
        weights = np.asarray(weights, dtype=np.float64)
        if rows.size and (min(rows.min(), cols.min()) < 0 or
                          max(rows.max(), cols.max()) >= nodeCount):
            raise ValidationError("Edge endpoint outside of 0..%d" % (nodeCount - 1))
        if np.any(rows == cols):
            raise ValidationError("Graph contains self-loops")

        # Duplicates are summed on the upper triangle, then mirrored, so
        # both directions hold bitwise identical weights.
        lo = np.minimum(rows, cols)
        hi = np.maximum(rows, cols)
        upper = sp.csr_matrix((weights, (lo, hi)), shape=(nodeCount, nodeCount))
        upper.sum_duplicates()
        return cls((upper + upper.T).tocsr())

    @classmethod
    def fromNetworkx(cls, graph, weight="weight"):
        """
        Builds a graph from a networkx graph. Node labels become
        strings, indexed in the graph's node iteration order.
        Self-loops are dropped.

        @return tuple(SparseGraph, NodeIdMap)
        """
        nodeIdMap = NodeIdMap(graph.nodes())
        rows, cols, weights = [], [], []
        for u, v, w in graph.edges(data=weight, default=1.0):
            if u == v:
                continue
            rows.append(nodeIdMap.index(u))
            cols.append(nodeIdMap.index(v))
            weights.append(w)
        return cls.fromEdges(len(nodeIdMap), rows, cols, weights), nodeIdMap

    def adjacency(self):
        """
        @return scipy.sparse.csr_matrix, The read-only adjacency A.
        """
        return self.__adjacency

    def degree(self):
        """
        @return numpy.ndarray, The weighted degree of each node.
        """
        return self.__degree

    def nodeCount(self):
        return self.__adjacency.shape[0]

    def storedEntryCount(self):
        """
        @return int, The number of stored (directed) entries of A.
        """
        return self.__adjacency.nnz

    def edgeCount(self):
        """
        @return int, The number of undirected edges, self-loops
        included once.
        """
        loops = int(np.count_nonzero(self.__adjacency.diagonal()))
        return (self.__adjacency.nnz - loops) // 2 + loops

    def __eq__(self, other):
        if not isinstance(other, SparseGraph):
            return NotImplemented
        a, b = self.__adjacency, other.adjacency()
        return (a.shape == b.shape and np.array_equal(a.indptr, b.indptr) and
                np.array_equal(a.indices, b.indices) and np.array_equal(a.data, b.data))

    def __repr__(self):
        return "SparseGraph(%d nodes, %d edges)" % (self.nodeCount(), self.edgeCount())
