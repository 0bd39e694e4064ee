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

from .. import constants
from .._core.audit import auditCall, auditor
from ..exceptions import ValidationError
from ..graph.operators import rwLaplacian, symmetricLaplacian
from ..factorization.proximity import generator
from ..logging import LoggerInterface, defaultLogger


__all__ = ['ScaledLaplacianOp', 'estimateLambdaMax']


def estimateLambdaMax(graph, iterations=constants.kLambdaMaxIterations,
                      seed=constants.kDefault_Seed):
    """
    Estimates the largest eigenvalue of the random-walk Laplacian of a
    graph by power iteration on the similar, symmetric normalized
    Laplacian. The Rayleigh quotient it returns never exceeds the true
    value.

    @return float, In [0, 2].
    """
    laplacian = symmetricLaplacian(graph)
    n = laplacian.shape[0]
    if n == 0:
        return 0.0
    x = generator(seed).standard_normal(n)
    estimate = 0.0
    for _ in range(iterations):
        norm = np.linalg.norm(x)
        if norm == 0:
            break
        x = x / norm
        y = laplacian @ x
        estimate = float(x @ y)
        x = y
    return min(max(estimate, 0.0), 2.0)


class ScaledLaplacianOp(object):
    """
    The implicit operator

      Lbar = -1/2 [(L - mu I)^2 - I] * scale

    on dense n x d blocks, where L is the random-walk Laplacian. The
    square is never formed: each application costs two sparse products
    by L. With scale 1 the spectrum of Lbar is 1/2 - 1/2 (lambda - mu)^2
    for each eigenvalue lambda of L, which leaves [-1, 1] once
    (lambda - mu)^2 exceeds 3.
    """

    def __init__(self, laplacian, mu, scale=1.0):
        """
        @param laplacian scipy.sparse.csr_matrix, The random-walk
        Laplacian L.

        @param mu float, The band centre.

        @param scale float [1.0] A factor applied to the whole operator,
        used to map its spectrum into [-1, 1].
        """
        super(ScaledLaplacianOp, self).__init__()
        if laplacian.shape[0] != laplacian.shape[1]:
            raise ValidationError("The Laplacian must be square")
        if not scale > 0:
            raise ValidationError("The operator scale must be > 0, got %r" % (scale,))
        self.__laplacian = laplacian.tocsr()
        self.__mu = float(mu)
        self.__scale = float(scale)

    @classmethod
    def forGraph(cls, graph, mu, rescale=True, seed=constants.kDefault_Seed, logger=None):
        """
        Builds the operator of a graph. When rescale is True, the
        largest Laplacian eigenvalue is estimated (inflated by
        kLambdaMaxMargin and capped at 2), and if the spectrum of Lbar
        would leave [-1, 1] the operator is scaled so that it doesn't.

        @return ScaledLaplacianOp
        """
        logger = logger or defaultLogger()
        scale = 1.0
        if rescale:
            lambdaMax = min(2.0, estimateLambdaMax(graph, seed=seed) * constants.kLambdaMaxMargin)
            spread = max(mu ** 2, (lambdaMax - mu) ** 2)
            if spread > 3.0:
                scale = 2.0 / (spread - 1.0)
                logger.log(
                    "Rescaling the modulated Laplacian by %.6f (estimated lambda max %.6f)" % (
                        scale, lambdaMax),
                    LoggerInterface.kInfo)
        return cls(rwLaplacian(graph), mu, scale)

    def laplacian(self):
        return self.__laplacian

    def mu(self):
        return self.__mu

    def scale(self):
        return self.__scale

    def nodeCount(self):
        return self.__laplacian.shape[0]

    @auditCall("ScaledLaplacianOp.apply")
    def apply(self, x):
        """
        @param x numpy.ndarray, An n x d (or length n) block.

        @return numpy.ndarray, Lbar x.

        @exception progle.exceptions.ValidationError If x doesn't have n
        rows.
        """
        x = np.asarray(x, dtype=np.float64)
        if x.shape[0] != self.nodeCount():
            raise ValidationError("Operator has %d rows, the block has %d" % (
                self.nodeCount(), x.shape[0]))
        shifted = self.__shiftedProduct(x)
        squared = self.__shiftedProduct(shifted)
        return (-0.5 * self.__scale) * (squared - x)

    def __shiftedProduct(self, x):
        auditor().addCall("ScaledLaplacianOp.sparseProduct")
        return self.__laplacian @ x - self.__mu * x
