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
# @namespace progle.factorization.svd
# Singular value decompositions: the truncated sparse SVD that yields
# the raw embedding, its square-root scaling, and the thin dense SVD
# used to re-orthogonalize a propagated embedding.
#
# Singular vectors are made sign-deterministic with svd_flip, but any
# comparison of embeddings should still be made up to column signs.

import numpy as np
import scipy.linalg
from scipy.sparse.linalg import ArpackNoConvergence, LinearOperator, svds
from sklearn.utils.extmath import svd_flip

from .. import constants
from .._core.audit import auditCall
from ..Embedding import Embedding
from ..exceptions import ConvergenceError, ValidationError
from .proximity import generator


__all__ = ['truncatedSvd', 'scaleEmbedding', 'thinSvdDense']


class _MatrixVectorOperator(LinearOperator):
    """
    Exposes a sparse matrix to the eigensolver through matrix-vector
    products only, each of which is counted by the auditor.
    """

    def __init__(self, matrix):
        self.__matrix = matrix.tocsr()
        self.__transposed = self.__matrix.T.tocsr()
        super(_MatrixVectorOperator, self).__init__(dtype=np.float64, shape=matrix.shape)

    @auditCall("truncatedSvd.matvec")
    def _matvec(self, x):
        return self.__matrix @ np.ravel(x)

    @auditCall("truncatedSvd.rmatvec")
    def _rmatvec(self, x):
        return self.__transposed @ np.ravel(x)

    def _matmat(self, x):
        return np.column_stack([self._matvec(x[:, j]) for j in range(x.shape[1])])

    def _rmatmat(self, x):
        return np.column_stack([self._rmatvec(x[:, j]) for j in range(x.shape[1])])

    def _adjoint(self):
        return _MatrixVectorOperator(self.__transposed)


def truncatedSvd(matrix, dim, tolerance=constants.kDefault_Tolerance,
                 seed=constants.kDefault_Seed):
    """
    Computes the leading singular triplets of a sparse matrix with the
    implicitly restarted Lanczos method. The matrix is only ever
    accessed through matrix-vector products.

    The Lanczos basis of the right singular vectors is followed by a
    Rayleigh-Ritz step (a thin SVD of M V), so that every triplet
    satisfies M v = sigma u to working precision. The basis is then
    accepted only if M^T M v = sigma^2 v holds to the tolerance.

    @param matrix scipy.sparse matrix, The r x c matrix M.

    @param dim int, The number of triplets d, 1 <= d < min(r, c).

    @param tolerance float, The relative residual required of each
    triplet: |M v_i - sigma_i u_i| <= tolerance * sigma_1 and
    |M^T M v_i - sigma_i^2 v_i| <= tolerance * sigma_1^2.

    @param seed int, Seeds the start vector of the iteration.

    @return tuple(numpy.ndarray, numpy.ndarray, numpy.ndarray) U (r x
    d), the singular values in descending order, and V (c x d), with U
    and V having orthonormal columns.

    @exception progle.exceptions.ValidationError If dim is out of range.

    @exception progle.exceptions.ConvergenceError If the iteration cap
    of kSvdIterationsPerDimension restarts per triplet is exhausted,
    or the triplets miss the tolerance.
    """
    rows, cols = matrix.shape
    if dim < 1 or dim >= min(rows, cols):
        raise ValidationError(
            "Truncated SVD rank must satisfy 1 <= d < min(%d, %d), got %d" % (rows, cols, dim))

    operator = _MatrixVectorOperator(matrix)
    v0 = generator(seed).standard_normal(min(rows, cols))

    try:
        _, _, vt = svds(
            operator, k=dim, tol=tolerance, v0=v0,
            maxiter=constants.kSvdIterationsPerDimension * dim, solver="arpack")
    except ArpackNoConvergence as exc:
        raise ConvergenceError(
            "Truncated SVD did not converge to rank %d" % dim,
            residual=_partialResidual(operator, exc)) from exc

    # Rayleigh-Ritz on the span of the right singular vectors. This
    # makes M v = sigma u exact, so the basis itself is judged by the
    # eigen-residual of M^T M, which equals sigma (M^T u - sigma v).
    basis, _ = scipy.linalg.qr(vt.T, mode="economic")
    u, sigma, wt = scipy.linalg.svd(operator.matmat(basis), full_matrices=False)
    v = basis @ wt.T
    u, vt = svd_flip(u, v.T)
    v = vt.T

    scale = sigma[0] if sigma[0] > 0 else 1.0
    forward = np.linalg.norm(operator.matmat(v) - u * sigma, axis=0) / scale
    backward = sigma * np.linalg.norm(operator.rmatmat(u) - v * sigma, axis=0) / scale ** 2
    worst = float(max(forward.max(), backward.max()))
    if worst > tolerance:
        raise ConvergenceError(
            "Truncated SVD residual exceeds the tolerance %.1e" % tolerance, residual=worst)

    return u, sigma, v


def _partialResidual(operator, exc):
    vectors = getattr(exc, "eigenvectors", None)
    values = getattr(exc, "eigenvalues", None)
    if vectors is None or values is None or not len(values):
        return None
    vectors = np.asarray(vectors)
    values = np.abs(np.asarray(values))
    if vectors.shape[0] == operator.shape[1]:
        gram = operator.rmatmat(operator.matmat(vectors))
    else:
        gram = operator.matmat(operator.rmatmat(vectors))
    top = values.max() if values.max() > 0 else 1.0
    return float(np.max(np.linalg.norm(gram - vectors * values, axis=0)) / top)


def scaleEmbedding(u, sigma, logger=None):
    """
    Scales each column of U by the square root of its singular value.

    @return progle.Embedding, With raw-svd provenance.

    @exception progle.exceptions.ValidationError If a singular value is
    negative.
    """
    sigma = np.asarray(sigma, dtype=np.float64)
    if sigma.size and sigma.min() < 0:
        raise ValidationError("Singular values must be nonnegative")
    return Embedding(np.asarray(u) * np.sqrt(sigma), Embedding.kProvenance_RawSvd, logger=logger)


def thinSvdDense(x):
    """
    The exact thin SVD of a dense tall matrix.

    @param x numpy.ndarray, An n x d matrix with d <= n.

    @return tuple(numpy.ndarray, numpy.ndarray, numpy.ndarray) U (n x
    d) with orthonormal columns, the d singular values in descending
    order, and V (d x d), such that x = U diag(sigma) V^T.

    @exception progle.exceptions.ValidationError If x is wider than it
    is tall.
    """
    x = np.asarray(x, dtype=np.float64)
    if x.ndim != 2 or x.shape[1] > x.shape[0]:
        raise ValidationError("Thin SVD needs a tall 2d matrix, got shape %s" % (x.shape,))
    u, sigma, vt = scipy.linalg.svd(x, full_matrices=False)
    u, vt = svd_flip(u, vt)
    return u, sigma, vt.T
