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
# @namespace progle.graph.operators
# The sparse operators derived from a graph: the transition matrix
# P = D^-1 A and the random-walk normalized Laplacian L = I - P.
#
# Nodes of zero degree get an all-zero row in P, and hence a lone 1 on
# the diagonal of L.

import numpy as np
import scipy.sparse as sp


__all__ = ['transitionMatrix', 'rwLaplacian', 'symmetricLaplacian']


def transitionMatrix(graph):
    """
    @param graph progle.graph.SparseGraph

    @return scipy.sparse.csr_matrix, Row i of A divided by degree[i].
    """
    adjacency = graph.adjacency()
    degree = graph.degree()
    p = adjacency.copy()
    rowDegree = np.repeat(degree, np.diff(p.indptr))
    # Stored entries always have a positive row degree.
    p.data = p.data / rowDegree
    return p


def rwLaplacian(graph):
    """
    @param graph progle.graph.SparseGraph

    @return scipy.sparse.csr_matrix, I - D^-1 A with its diagonal
    stored explicitly.
    """
    n = graph.nodeCount()
    laplacian = (sp.identity(n, dtype=np.float64, format="csr") - transitionMatrix(graph)).tocsr()
    laplacian.eliminate_zeros()
    laplacian.sort_indices()
    return laplacian


def symmetricLaplacian(graph):
    """
    The symmetric normalized Laplacian I - D^-1/2 A D^-1/2, which is
    similar to @ref rwLaplacian and so shares its eigenvalues. Rows of
    zero degree nodes hold a lone 1 on the diagonal.

    @return scipy.sparse.csr_matrix
    """
    degree = graph.degree()
    invSqrt = np.zeros_like(degree)
    positive = degree > 0
    invSqrt[positive] = 1.0 / np.sqrt(degree[positive])
    scaling = sp.diags(invSqrt)
    normalized = scaling @ graph.adjacency() @ scaling
    n = graph.nodeCount()
    laplacian = (sp.identity(n, dtype=np.float64, format="csr") - normalized).tocsr()
    laplacian.eliminate_zeros()
    laplacian.sort_indices()
    return laplacian
