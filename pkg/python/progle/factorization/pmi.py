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
# @namespace progle.factorization.pmi
# The shifted log matrix factorized into the raw embedding. On the
# support of the proximity matrix p it holds
#
#   M_ij = ln p_ij - ln(lambda * noise_j)
#
# where noise is the share of the total proximity mass held by each
# context column. Off the support M is structurally zero.

import numpy as np
import scipy.sparse as sp

from .. import constants
from ..exceptions import InvariantError, ValidationError
from .proximity import ProximityMatrix


__all__ = ['ShiftedLogMatrix', 'backgroundNoise', 'buildShiftedLog']


class ShiftedLogMatrix(object):
    """
    The sparse shifted log matrix, along with the noise distribution
    and shift it was built with.
    """

    def __init__(self, matrix, negativeRatio, noise, clampNegative):
        super(ShiftedLogMatrix, self).__init__()
        self.__matrix = matrix
        self.__negativeRatio = negativeRatio
        self.__noise = noise
        self.__clampNegative = clampNegative

    def matrix(self):
        """
        @return scipy.sparse.csr_matrix
        """
        return self.__matrix

    def negativeRatio(self):
        return self.__negativeRatio

    def noise(self):
        """
        @return numpy.ndarray, The background noise of each context.
        """
        return self.__noise

    def clampNegative(self):
        return self.__clampNegative

    def entryCount(self):
        return self.__matrix.nnz


def _asMatrix(proximity):
    if isinstance(proximity, ProximityMatrix):
        return proximity.matrix()
    return sp.csr_matrix(proximity)


def backgroundNoise(proximity):
    """
    @param proximity ProximityMatrix or scipy.sparse matrix

    @return numpy.ndarray, The column sums of the proximity matrix
    divided by its total mass. It sums to 1.

    @exception progle.exceptions.ValidationError If the matrix holds no
    positive mass.
    """
    matrix = _asMatrix(proximity)
    total = matrix.sum()
    if not total > 0:
        raise ValidationError("The proximity matrix holds no positive entries")
    return np.asarray(matrix.sum(axis=0), dtype=np.float64).ravel() / total


def buildShiftedLog(proximity, negativeRatio=constants.kDefault_NegativeRatio,
                    clampNegative=False):
    """
    Builds the shifted log matrix of a proximity matrix.

    @param proximity ProximityMatrix or scipy.sparse matrix, With all
    stored entries > 0.

    @param negativeRatio float, The shift lambda > 0. Every stored
    value of the result for lambda equals the value for 1 minus
    ln(lambda).

    @param clampNegative bool [False] Replace negative values by zero
    and drop them from the pattern. When False, the pattern of the
    result is exactly the pattern of the proximity matrix.

    @return ShiftedLogMatrix

    @exception progle.exceptions.ValidationError If lambda <= 0 or a
    stored proximity is negative.

    @exception progle.exceptions.InvariantError If a context on the
    support has no noise mass.
    """
    if not negativeRatio > 0:
        raise ValidationError("The negative ratio must be > 0, got %r" % (negativeRatio,))

    matrix = sp.csr_matrix(_asMatrix(proximity), dtype=np.float64, copy=True)
    matrix.eliminate_zeros()
    matrix.sort_indices()
    if matrix.nnz and matrix.data.min() < 0:
        raise ValidationError("The proximity matrix holds negative entries")

    noise = backgroundNoise(matrix)
    contextNoise = noise[matrix.indices]
    if matrix.nnz and not contextNoise.min() > 0:
        raise InvariantError("A context on the proximity support has zero noise mass")

    matrix.data = np.log(matrix.data) - np.log(contextNoise) - np.log(negativeRatio)

    if clampNegative:
        matrix.data[matrix.data < 0] = 0.0
        matrix.eliminate_zeros()

    noise.setflags(write=False)
    return ShiftedLogMatrix(matrix, negativeRatio, noise, clampNegative)
