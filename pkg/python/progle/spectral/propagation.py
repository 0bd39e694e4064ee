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
# @namespace progle.spectral.propagation
# Propagation of an embedding through the band-pass modulated network.
#
# The modulated Laplacian Ltilde = U g(Lambda) U^-1 is expanded in
# Chebyshev polynomials of the scaled operator. With x = -Lbar, the
# exponential exp(-x theta) equals g on every eigenvalue, so the series
# sum_i c_i T_i(-Lbar) is evaluated with the three-term recurrence
#
#   T_0 = X,  T_1 = -Lbar X,  T_i = -2 Lbar T_{i-1} - T_{i-2}
#
# An embedding R is then propagated as P (I - Ltilde) R, and the
# result re-orthogonalized by a thin SVD.

import numpy as np

from .. import constants
from ..Embedding import Embedding
from ..exceptions import AlignmentError, ValidationError
from ..factorization.svd import thinSvdDense
from ..graph.operators import transitionMatrix
from .ScaledLaplacianOp import ScaledLaplacianOp


__all__ = ['applyModulatedLaplacian', 'propagateLinear', 'propagate', 'enhance']


def applyModulatedLaplacian(lbar, spec, x):
    """
    Applies the Chebyshev expansion of the modulated Laplacian to a
    block. A filter of k terms applies the operator k-1 times.

    @param lbar ScaledLaplacianOp

    @param spec FilterSpec

    @param x numpy.ndarray, An n x d block.

    @return numpy.ndarray, Ltilde x.

    @exception progle.exceptions.ValidationError If x doesn't have n
    rows.
    """
    x = np.asarray(x, dtype=np.float64)
    if x.shape[0] != lbar.nodeCount():
        raise ValidationError("Operator has %d rows, the block has %d" % (
            lbar.nodeCount(), x.shape[0]))

    coefficients = spec.coefficients(lbar.scale())
    result = coefficients[0] * x
    if len(coefficients) == 1:
        return result

    previous = x
    current = -lbar.apply(x)
    result = result + coefficients[1] * current
    for c in coefficients[2:]:
        previous, current = current, -2.0 * lbar.apply(current) - previous
        result = result + c * current
    return result


def propagateLinear(graph, spec, x, rescale=True, seed=constants.kDefault_Seed, logger=None):
    """
    The linear part of propagation, P (I - Ltilde) x, before any
    re-orthogonalization.

    @param rescale bool [True] Scale the operator when its spectrum
    would leave [-1, 1]. When False the modulator is used literally.

    @return numpy.ndarray
    """
    x = np.asarray(x, dtype=np.float64)
    if x.ndim != 2 or x.shape[0] != graph.nodeCount():
        raise ValidationError("Embedding has shape %s but the graph has %d nodes" % (
            x.shape, graph.nodeCount()))
    lbar = ScaledLaplacianOp.forGraph(graph, spec.mu(), rescale=rescale, seed=seed,
                                      logger=logger)
    y = x - applyModulatedLaplacian(lbar, spec, x)
    return transitionMatrix(graph) @ y


def propagate(graph, spec, embedding, rescale=True, seed=constants.kDefault_Seed, logger=None):
    """
    Propagates an embedding through the modulated network, then mends
    the result with a thin SVD, keeping U Sigma so that the columns are
    orthogonal but retain their energy.

    Nodes with no edges come out as zero rows.

    @param graph progle.graph.SparseGraph

    @param spec FilterSpec

    @param embedding progle.Embedding, With one row per node.

    @return progle.Embedding, With propagated provenance.
    """
    z = propagateLinear(graph, spec, embedding.vectors(), rescale=rescale, seed=seed,
                        logger=logger)
    u, sigma, _ = thinSvdDense(z)
    return embedding.withVectors(u * sigma, Embedding.kProvenance_Propagated, logger=logger)


def enhance(graph, spec, external, nodeIdMap=None, rescale=True,
            seed=constants.kDefault_Seed, logger=None):
    """
    Propagates an externally trained embedding. This is the same
    computation as @ref propagate, after the rows of the embedding have
    been aligned to the graph's nodes by label.

    @param external progle.Embedding, Labelled if nodeIdMap is given.

    @param nodeIdMap progle.graph.NodeIdMap [None] When given, the
    rows of the embedding are reordered to internal index order, and
    the result carries the map's labels.

    @return progle.Embedding

    @exception progle.exceptions.AlignmentError If the embedding and
    graph don't describe the same nodes.
    """
    vectors = external.vectors()
    labels = external.labels()

    if nodeIdMap is not None:
        if labels is None:
            if len(vectors) != len(nodeIdMap):
                raise AlignmentError("Embedding has %d rows but the graph has %d nodes" % (
                    len(vectors), len(nodeIdMap)))
        else:
            order = nodeIdMap.alignmentOf(labels)
            aligned = np.empty_like(vectors)
            aligned[order] = vectors
            vectors = aligned
        labels = nodeIdMap.labels()
    elif len(vectors) != graph.nodeCount():
        raise AlignmentError("Embedding has %d rows but the graph has %d nodes" % (
            len(vectors), graph.nodeCount()))

    aligned = Embedding(vectors, Embedding.kProvenance_External, labels, logger=logger)
    return propagate(graph, spec, aligned, rescale=rescale, seed=seed, logger=logger)
