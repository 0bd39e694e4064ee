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

import networkx as nx
import numpy as np
import pytest
import scipy.sparse as sp

from progle.exceptions import ValidationError
from progle.factorization import proximity as proximityModule
from progle.factorization.proximity import (
    binarizeSupport, buildProximity, derivedSeeds, dropoutAdjacency, sampledProduct)
from progle.graph import SparseGraph, transitionMatrix
from progle.logging import LoggerInterface


def denseProximity(graph, order, dropout, seed):
    """
    The masked power sum formed densely, with the same dropout draws.
    """
    p = transitionMatrix(graph).toarray()
    mask = (graph.adjacency().toarray() > 0).astype(float)
    total = p.copy()
    power = p.copy()
    for childSeed in derivedSeeds(seed, order - 1):
        thinned = dropoutAdjacency(graph, dropout, childSeed).toarray()
        mask = ((mask @ thinned) > 0).astype(float)
        power = power @ p
        total += power * mask
    rowSums = total.sum(axis=1, keepdims=True)
    return np.divide(total, rowSums, out=np.zeros_like(total), where=rowSums > 0)


class Test_buildProximity():

    @pytest.mark.parametrize("graphSeed", range(20))
    def test_matches_dense_reference(self, random_graph, graphSeed):
        order = (1, 2, 3)[graphSeed % 3]
        dropout = (0.0, 0.3, 0.7)[(graphSeed // 3) % 3]
        graph = random_graph(graphSeed, n=20 + 4 * graphSeed, p=0.3)

        proximity = buildProximity(graph, order, dropout, seed=graphSeed)

        expected = denseProximity(graph, order, dropout, graphSeed)
        assert np.max(np.abs(proximity.matrix().toarray() - expected)) <= 1e-10

    def test_rows_are_stochastic_and_nonnegative(self, dense_random_graph):
        matrix = buildProximity(dense_random_graph, 2, 0.5, seed=1).matrix()
        assert np.allclose(np.asarray(matrix.sum(axis=1)).ravel(), 1.0, atol=1e-12)
        assert matrix.data.min() > 0

    def test_when_order_1_then_proximity_is_the_transition_matrix(self, dense_random_graph):
        matrix = buildProximity(dense_random_graph, 1, 0.5, seed=1).matrix()
        assert np.allclose(matrix.toarray(), transitionMatrix(dense_random_graph).toarray(),
                           rtol=0, atol=1e-15)

    def test_when_triangle_order_2_without_dropout_then_all_pairs_are_related(self, triangle):
        matrix = buildProximity(triangle, 2, 0.0, seed=0).matrix().toarray()
        # P^2 has 1/2 on the diagonal and 1/4 elsewhere. Its mask <A A>
        # covers every pair, so rows are (P + P^2) / 2.
        expected = np.full((3, 3), 3.0 / 8.0)
        np.fill_diagonal(expected, 1.0 / 4.0)
        assert np.allclose(matrix, expected, rtol=0, atol=1e-15)

    def test_when_isolated_node_then_its_row_is_empty(self):
        graph = SparseGraph.fromEdges(4, [0, 1], [1, 2])
        proximity = buildProximity(graph, 3, 0.2, seed=5)
        assert proximity.matrix().getrow(3).nnz == 0
        assert len(proximity.termEntryCounts()) == 3

    def test_when_blocked_or_threaded_then_result_is_identical(self, dense_random_graph):
        reference = buildProximity(dense_random_graph, 3, 0.3, seed=2).matrix()
        for threads, blockRows in ((1, 7), (4, 7), (4, 1)):
            other = buildProximity(dense_random_graph, 3, 0.3, seed=2, threads=threads,
                                   blockRows=blockRows).matrix()
            assert (reference != other).nnz == 0

    def test_when_seed_repeats_then_result_repeats(self, dense_random_graph):
        a = buildProximity(dense_random_graph, 2, 0.5, seed=11).matrix()
        b = buildProximity(dense_random_graph, 2, 0.5, seed=11).matrix()
        assert (a != b).nnz == 0

    def test_when_order_above_3_then_a_warning_is_logged(self, triangle, mock_logger):
        buildProximity(triangle, 4, 0.0, seed=0, logger=mock_logger)
        severities = [c[0][1] for c in mock_logger.log.call_args_list]
        assert LoggerInterface.kWarning in severities

    def test_when_every_edge_of_the_mask_drops_then_proximity_is_the_transition_matrix(
            self, triangle):
        dropout = 0.999999
        seed = 4
        assert dropoutAdjacency(triangle, dropout, derivedSeeds(seed, 1)[0]).nnz == 0

        matrix = buildProximity(triangle, 2, dropout, seed=seed).matrix()

        assert np.allclose(matrix.toarray(), transitionMatrix(triangle).toarray(),
                           rtol=0, atol=1e-15)

    def test_when_dropout_grows_then_mean_entry_count_shrinks(self, random_graph):
        graph = random_graph(3, n=100, p=0.05)

        def meanEntries(dropout):
            return np.mean([
                buildProximity(graph, 2, dropout, seed=seed).entryCount() for seed in range(30)])

        assert meanEntries(0.8) <= meanEntries(0.2)

    def test_masked_term_holds_no_entries_outside_its_mask(self, monkeypatch):
        graph, _ = SparseGraph.fromNetworkx(nx.random_regular_graph(10, 400, seed=1))
        calls = []

        def recordingProduct(left, right, pattern, *args, **kwargs):
            product = sampledProduct(left, right, pattern, *args, **kwargs)
            calls.append((binarizeSupport(pattern).nnz, product.nnz))
            return product

        monkeypatch.setattr(proximityModule, "sampledProduct", recordingProduct)
        proximity = buildProximity(graph, 2, 0.8, seed=3, blockRows=64)

        assert calls
        assert all(formed <= allowed for allowed, formed in calls)
        assert sum(formed for _, formed in calls) == proximity.termEntryCounts()[1]
        # The unmasked square would hold several times more.
        p = transitionMatrix(graph)
        assert (p @ p).nnz > 2 * proximity.termEntryCounts()[1]

    @pytest.mark.parametrize("order,dropout", ((0, 0.5), (2, 1.0), (2, -0.1)))
    def test_when_invalid_then_ValidationError_raised(self, triangle, order, dropout):
        with pytest.raises(ValidationError):
            buildProximity(triangle, order, dropout, seed=0)


class Test_dropoutAdjacency():

    def test_when_no_dropout_then_adjacency_is_kept(self, dense_random_graph):
        thinned = dropoutAdjacency(dense_random_graph, 0.0, seed=3)
        assert (thinned != dense_random_graph.adjacency()).nnz == 0

    def test_thinned_adjacency_is_symmetric_subset(self, dense_random_graph):
        thinned = dropoutAdjacency(dense_random_graph, 0.5, seed=3)
        assert (thinned != thinned.T).nnz == 0
        assert thinned.nnz < dense_random_graph.storedEntryCount()
        assert binarizeSupport(thinned).multiply(
            binarizeSupport(dense_random_graph.adjacency())).nnz == thinned.nnz

    def test_kept_edge_count_is_binomial(self):
        graph, _ = SparseGraph.fromNetworkx(nx.complete_graph(100))
        edges = graph.edgeCount()
        for seed in range(5):
            kept = dropoutAdjacency(graph, 0.5, seed=seed).nnz // 2
            # Within 4 standard deviations of Binomial(4950, 0.5).
            assert abs(kept - 0.5 * edges) <= 4.0 * np.sqrt(edges * 0.25)


def test_derivedSeeds_are_reproducible():
    first = [s.generate_state(2).tolist() for s in derivedSeeds(42, 3)]
    second = [s.generate_state(2).tolist() for s in derivedSeeds(42, 3)]
    assert first == second
    assert len({tuple(s) for s in first}) == 3


class Test_binarizeSupport():

    def test_stored_values_become_one(self):
        support = binarizeSupport(sp.csr_matrix(np.array([[0.0, 3.0], [0.5, 0.0]])))
        assert np.array_equal(support.toarray(), [[0.0, 1.0], [1.0, 0.0]])

    def test_when_zero_matrix_then_support_is_empty(self):
        support = binarizeSupport(sp.csr_matrix((3, 3)))
        assert support.nnz == 0
        assert support.shape == (3, 3)

    def test_is_idempotent(self):
        matrix = sp.random(30, 30, density=0.2, format="csr",
                           random_state=np.random.default_rng(2))
        once = binarizeSupport(matrix)
        assert (binarizeSupport(once) != once).nnz == 0


class Test_sampledProduct():

    @pytest.mark.parametrize("chunk", (1, 7, 65536))
    def test_matches_dense_masked_product(self, chunk):
        rng = np.random.default_rng(5)
        left = sp.random(25, 30, density=0.2, format="csr", random_state=rng)
        right = sp.random(30, 20, density=0.2, format="csr", random_state=rng)
        pattern = sp.random(25, 20, density=0.3, format="csr", random_state=rng)

        product = sampledProduct(left, right, pattern, chunk=chunk)

        expected = (left.toarray() @ right.toarray()) * (pattern.toarray() != 0)
        assert np.allclose(product.toarray(), expected, rtol=0, atol=1e-15)
        assert product.nnz <= pattern.nnz

    def test_when_pattern_empty_then_product_is_empty(self):
        left = sp.identity(4, format="csr")
        product = sampledProduct(left, left, sp.csr_matrix((4, 4)))
        assert product.nnz == 0
        assert product.shape == (4, 4)
