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
# @namespace progle.factorization.proximity
# The sparse node-context proximity matrix.
#
# The i-th term of the proximity sum is the i-th power of the
# transition matrix P, kept only where node and context are joined by
# a walk through A followed by i-1 dropout-thinned copies of A:
#
#   sum_{i=1..m} P^i o <A Ahat_1 ... Ahat_{i-1}>
#
# where <.> replaces stored values with 1 and o is the elementwise
# product. The sum is then normalized to be row-stochastic.
#
# Random draws use numpy's counter-based Philox generator, and the
# dropout draws of each term are seeded from children of a single
# SeedSequence, so results reproduce across platforms.

from concurrent.futures import ThreadPoolExecutor

import numpy as np
import scipy.sparse as sp
from sklearn.preprocessing import normalize

from .. import constants
from ..exceptions import ValidationError
from ..graph.operators import transitionMatrix
from ..logging import LoggerInterface, defaultLogger


__all__ = ['ProximityMatrix', 'derivedSeeds', 'generator', 'dropoutAdjacency',
           'binarizeSupport', 'sampledProduct', 'buildProximity']


class ProximityMatrix(object):
    """
    A row-stochastic sparse node-context matrix, along with the
    parameters it was drawn with. Its support is the node-context pair
    set that the factorization models.
    """

    def __init__(self, matrix, order, dropout, seed, termEntryCounts=()):
        super(ProximityMatrix, self).__init__()
        self.__matrix = matrix
        self.__order = order
        self.__dropout = dropout
        self.__seed = seed
        self.__termEntryCounts = tuple(termEntryCounts)

    def matrix(self):
        """
        @return scipy.sparse.csr_matrix
        """
        return self.__matrix

    def order(self):
        return self.__order

    def dropout(self):
        return self.__dropout

    def seed(self):
        return self.__seed

    def entryCount(self):
        return self.__matrix.nnz

    def termEntryCounts(self):
        """
        @return tuple(int), The stored entries of each masked term,
        before they are summed.
        """
        return self.__termEntryCounts

    def density(self):
        """
        @return float, The fraction of the n x n matrix that is stored.
        """
        n = self.__matrix.shape[0]
        return self.__matrix.nnz / float(n * n) if n else 0.0


def derivedSeeds(seed, count):
    """
    @return list(numpy.random.SeedSequence), count independent child
    seeds of seed, in a fixed order.
    """
    return np.random.SeedSequence(seed).spawn(count)


def generator(seed):
    """
    @return numpy.random.Generator, A Philox generator for the seed.
    """
    return np.random.Generator(np.random.Philox(seed))


def dropoutAdjacency(graph, dropout, seed):
    """
    Thins the adjacency of a graph by dropping each undirected edge
    independently with probability dropout. Both directions of an edge
    are kept or dropped together, and kept edges keep their weight.

    @param graph progle.graph.SparseGraph

    @param dropout float, In [0, 1).

    @param seed int or numpy.random.SeedSequence

    @return scipy.sparse.csr_matrix, The symmetric thinned adjacency.

    @exception progle.exceptions.ValidationError If dropout is outside
    of [0, 1).
    """
    if not 0.0 <= dropout < 1.0:
        raise ValidationError("Dropout must lie in [0, 1), got %r" % (dropout,))

    adjacency = graph.adjacency()
    upper = sp.triu(adjacency, k=0, format="csr")
    upper.sort_indices()
    keep = generator(seed).random(upper.nnz) >= dropout
    upper.data = np.where(keep, upper.data, 0.0)
    upper.eliminate_zeros()

    thinned = (upper + sp.triu(upper, k=1).T).tocsr()
    thinned.sort_indices()
    return thinned


def binarizeSupport(matrix):
    """
    @return scipy.sparse.csr_matrix, A matrix with the sparsity pattern
    of the input, and every stored value set to 1. Explicitly stored
    zeros are not part of the support.
    """
    support = sp.csr_matrix(matrix, dtype=np.float64, copy=True)
    support.eliminate_zeros()
    support.data[:] = 1.0
    return support


def buildProximity(graph, order=constants.kDefault_Order, dropout=constants.kDefault_Dropout,
                   seed=constants.kDefault_Seed, threads=1, logger=None,
                   blockRows=constants.kProximityBlockRows):
    """
    Builds the proximity matrix of a graph.

    The masks are drawn first, each from its own child seed. Each term
    is then formed one block of rows at a time, with its last factor
    evaluated by @ref sampledProduct at the coordinates of the mask
    alone. For orders above 2 the block's rows of the lower power
    P^(i-1) are held while its term is formed.

    @param graph progle.graph.SparseGraph

    @param order int, The number of terms m, usually 1, 2 or 3.

    @param dropout float, The edge dropout ratio of the masks.

    @param seed int, The root seed of the dropout draws.

    @param threads int [1] Row blocks processed concurrently.

    @return ProximityMatrix

    @exception progle.exceptions.ValidationError If order < 1 or the
    dropout is outside of [0, 1).
    """
    logger = logger or defaultLogger()

    if order < 1:
        raise ValidationError("Proximity order must be >= 1, got %d" % order)
    if not 0.0 <= dropout < 1.0:
        raise ValidationError("Dropout must lie in [0, 1), got %r" % (dropout,))
    if order > constants.kMaxRecommendedOrder:
        logger.log(
            "Proximity order %d exceeds %d, the proximity matrix may become dense" % (
                order, constants.kMaxRecommendedOrder),
            LoggerInterface.kWarning)

    transition = transitionMatrix(graph)

    masks = [binarizeSupport(graph.adjacency())]
    for childSeed in derivedSeeds(seed, order - 1):
        thinned = dropoutAdjacency(graph, dropout, childSeed)
        masks.append(binarizeSupport(masks[-1] @ thinned))

    total = transition.copy()
    termEntryCounts = [transition.nnz]
    for power in range(2, order + 1):
        term = _maskedPower(transition, power, masks[power - 1], threads, blockRows)
        termEntryCounts.append(term.nnz)
        total = total + term
        logger.log("Proximity term %d holds %d entries" % (power, term.nnz),
                   LoggerInterface.kDebug)

    total = normalize(total.tocsr(), norm="l1", axis=1)
    total.eliminate_zeros()
    total.sort_indices()

    return ProximityMatrix(total, order, dropout, seed, termEntryCounts)


def sampledProduct(left, right, pattern, chunk=constants.kSampledProductChunk):
    """
    Evaluates the product left @ right only at the stored coordinates
    of a pattern. Entries of the product outside the pattern are never
    formed.

    @param left scipy.sparse matrix, r x k.

    @param right scipy.sparse matrix, k x c.

    @param pattern scipy.sparse matrix, r x c. Only its sparsity
    pattern is used.

    @param chunk int, Coordinates evaluated together. The gathered
    rows of the factors are bounded by this many coordinates.

    @return scipy.sparse.csr_matrix, With at most the entries of the
    pattern, holding the values of the product there.
    """
    left = sp.csr_matrix(left)
    rightColumns = sp.csr_matrix(right).T.tocsr()
    coordinates = binarizeSupport(pattern).tocoo()
    rows, cols = coordinates.row, coordinates.col

    values = np.empty(rows.size, dtype=np.float64)
    for start in range(0, rows.size, max(1, chunk)):
        stop = min(rows.size, start + chunk)
        pairs = left[rows[start:stop]].multiply(rightColumns[cols[start:stop]])
        values[start:stop] = np.asarray(pairs.sum(axis=1)).ravel()

    product = sp.csr_matrix((values, (rows, cols)), shape=(left.shape[0], rightColumns.shape[0]))
    product.eliminate_zeros()
    product.sort_indices()
    return product


def _maskedPower(transition, power, mask, threads, blockRows):
    n = transition.shape[0]
    starts = list(range(0, n, max(1, blockRows)))

    def _block(start):
        rows = slice(start, min(n, start + blockRows))
        # The rows of the lower power, P^(power-1).
        lower = transition[rows]
        for _ in range(power - 2):
            lower = lower @ transition
        return sampledProduct(lower, transition, mask[rows])

    if threads > 1 and len(starts) > 1:
        with ThreadPoolExecutor(max_workers=threads) as executor:
            blocks = list(executor.map(_block, starts))
    else:
        blocks = [_block(start) for start in starts]

    if not blocks:
        return sp.csr_matrix(transition.shape, dtype=np.float64)
    return sp.vstack(blocks, format="csr")
