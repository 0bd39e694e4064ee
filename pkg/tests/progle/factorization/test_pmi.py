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

import math

import numpy as np
import pytest
import scipy.sparse as sp

from progle.exceptions import InvariantError, ValidationError
from progle.factorization.pmi import backgroundNoise, buildShiftedLog
from progle.factorization.proximity import buildProximity


def denseShiftedLog(proximity, negativeRatio):
    p = proximity.toarray()
    noise = p.sum(axis=0) / p.sum()
    result = np.zeros_like(p)
    rows, cols = np.nonzero(p)
    result[rows, cols] = np.log(p[rows, cols] / (negativeRatio * noise[cols]))
    return result


@pytest.fixture
def proximity(dense_random_graph):
    return buildProximity(dense_random_graph, 2, 0.5, seed=3)


class Test_backgroundNoise():

    def test_noise_is_a_distribution(self, proximity):
        noise = backgroundNoise(proximity)
        assert noise.min() > 0
        assert noise.sum() == pytest.approx(1.0, abs=1e-12)

    def test_when_matrix_empty_then_ValidationError_raised(self):
        with pytest.raises(ValidationError):
            backgroundNoise(sp.csr_matrix((3, 3)))


class Test_buildShiftedLog():

    @pytest.mark.parametrize("graphSeed", range(20))
    def test_matches_dense_reference(self, random_graph, graphSeed):
        graph = random_graph(graphSeed, n=20 + 4 * graphSeed, p=0.3)
        proximity = buildProximity(graph, 1 + graphSeed % 3, 0.3, seed=graphSeed).matrix()

        shifted = buildShiftedLog(proximity, 2.0).matrix()

        expected = denseShiftedLog(proximity, 2.0)
        assert np.max(np.abs(shifted.toarray() - expected)) <= 1e-12

    def test_when_not_clamped_then_pattern_is_the_proximity_pattern(self, proximity):
        shifted = buildShiftedLog(proximity, 5.0).matrix()
        p = proximity.matrix()
        assert np.array_equal(shifted.indptr, p.indptr)
        assert np.array_equal(shifted.indices, p.indices)

    @pytest.mark.parametrize("negativeRatio", (0.5, 2.0, 5.0, math.e))
    def test_shift_identity_holds_exactly(self, proximity, negativeRatio):
        unshifted = buildShiftedLog(proximity, 1.0).matrix()
        shifted = buildShiftedLog(proximity, negativeRatio).matrix()
        assert np.array_equal(shifted.data, unshifted.data - math.log(negativeRatio))

    def test_when_clamped_then_negative_entries_are_dropped(self, proximity):
        unclamped = buildShiftedLog(proximity, 5.0).matrix()
        clamped = buildShiftedLog(proximity, 5.0, clampNegative=True)

        assert clamped.clampNegative()
        assert clamped.matrix().data.min() > 0
        assert clamped.entryCount() == np.count_nonzero(unclamped.data > 0)
        assert np.array_equal(clamped.matrix().toarray(), np.maximum(unclamped.toarray(), 0.0))

    def test_noise_is_kept_read_only(self, proximity):
        noise = buildShiftedLog(proximity).noise()
        with pytest.raises(ValueError):
            noise[0] = 1.0

    @pytest.mark.parametrize("negativeRatio", (0.0, -1.0))
    def test_when_ratio_not_positive_then_ValidationError_raised(self, proximity, negativeRatio):
        with pytest.raises(ValidationError):
            buildShiftedLog(proximity, negativeRatio)

    def test_when_proximity_negative_then_ValidationError_raised(self):
        with pytest.raises(ValidationError):
            buildShiftedLog(sp.csr_matrix(np.array([[0.5, -0.5], [1.0, 0.0]])))

    def test_when_context_noise_underflows_then_InvariantError_raised(self):
        # The smallest subnormal halves to zero.
        proximity = sp.csr_matrix(np.array([[1.0, 0.0], [1.0, 5e-324]]))
        with pytest.raises(InvariantError):
            buildShiftedLog(proximity)
