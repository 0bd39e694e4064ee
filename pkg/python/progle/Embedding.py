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

from .exceptions import ValidationError
from .logging import LoggerInterface, defaultLogger


__all__ = ['Embedding']


class Embedding(object):
    """
    An Embedding is a dense, immutable |V| x d matrix holding one
    vector per node, along with where it came from and, optionally, the
    external label of each row.
    """

    ##
    # @name Provenance
    # @{
    kProvenance_RawSvd = "raw-svd"
    kProvenance_Propagated = "propagated"
    kProvenance_External = "external"
    ## @}

    __validProvenance = (kProvenance_RawSvd, kProvenance_Propagated, kProvenance_External)

    def __init__(self, vectors, provenance=kProvenance_External, labels=None, logger=None):
        """
        @param vectors array-like, A 2d array with one row per node.

        @param provenance str, One of the kProvenance constants.

        @param labels list(str) [None] The external label of each row.

        @exception progle.exceptions.ValidationError If the matrix is
        not 2d, holds non-finite values, or the labels don't match the
        row count.
        """
        super(Embedding, self).__init__()

        if provenance not in self.__validProvenance:
            raise ValidationError("Unknown embedding provenance '%s'" % provenance)

        vectors = np.array(vectors, dtype=np.float64, copy=True, order="C")
        if vectors.ndim != 2:
            raise ValidationError(
                "An embedding must be a 2d matrix, got %d dimension(s)" % vectors.ndim)
        if not np.all(np.isfinite(vectors)):
            raise ValidationError("Embedding contains NaN or Inf entries")
        vectors.setflags(write=False)

        if labels is not None:
            labels = tuple(str(l) for l in labels)
            if len(labels) != vectors.shape[0]:
                raise ValidationError("Embedding has %d rows but %d labels" % (
                    vectors.shape[0], len(labels)))

        n, d = vectors.shape
        if n and d >= n:
            (logger or defaultLogger()).log(
                "Embedding dimension %d is not smaller than the node count %d" % (d, n),
                LoggerInterface.kWarning)

        self.__vectors = vectors
        self.__provenance = provenance
        self.__labels = labels

    def vectors(self):
        """
        @return numpy.ndarray, The read-only n x d matrix.
        """
        return self.__vectors

    def nodeCount(self):
        return self.__vectors.shape[0]

    def dim(self):
        return self.__vectors.shape[1]

    def provenance(self):
        return self.__provenance

    def labels(self):
        """
        @return tuple(str) or None, The label of each row, if known.
        """
        return self.__labels

    def withVectors(self, vectors, provenance, logger=None):
        """
        @return Embedding, A new embedding with the same labels.
        """
        return Embedding(vectors, provenance, self.__labels, logger=logger)

    def __repr__(self):
        return "Embedding(%d x %d, %s)" % (self.nodeCount(), self.dim(), self.__provenance)
