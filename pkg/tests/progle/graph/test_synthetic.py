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
import pytest

from progle.exceptions import ValidationError
from progle.graph.synthetic import disjointCliques, randomRegularGraph, stochasticBlockModel


class Test_randomRegularGraph():

    def test_when_1000_nodes_of_degree_10_then_5000_edges(self):
        graph, nodeIdMap = randomRegularGraph(1000, 10, seed=1)
        assert graph.edgeCount() == 5000
        assert np.all(graph.degree() == 10)
        assert len(nodeIdMap) == 1000

    def test_when_degree_2_then_every_node_has_two_neighbours(self):
        graph, _ = randomRegularGraph(50, 2, seed=3)
        assert np.all(np.diff(graph.adjacency().indptr) == 2)

    def test_when_seed_repeats_then_graph_repeats(self):
        assert randomRegularGraph(100, 4, seed=9)[0] == randomRegularGraph(100, 4, seed=9)[0]

    @pytest.mark.parametrize("nodes,degree", ((7, 3), (5, 5), (0, 0), (4, -2)))
    def test_when_infeasible_then_ValidationError_raised(self, nodes, degree):
        with pytest.raises(ValidationError):
            randomRegularGraph(nodes, degree, seed=0)


class Test_stochasticBlockModel():

    def test_blocks_are_contiguous(self):
        graph, nodeIdMap, blocks = stochasticBlockModel([30, 20], 0.5, 0.0, seed=4)
        assert graph.nodeCount() == 50
        assert np.array_equal(blocks, [0] * 30 + [1] * 20)
        coo = graph.adjacency().tocoo()
        assert np.all(blocks[coo.row] == blocks[coo.col])

    @pytest.mark.parametrize("sizes,pIn,pOut", (([], 0.1, 0.1), ([3, 0], 0.1, 0.1),
                                                ([3], 1.5, 0.1), ([3], 0.1, -0.1)))
    def test_when_invalid_then_ValidationError_raised(self, sizes, pIn, pOut):
        with pytest.raises(ValidationError):
            stochasticBlockModel(sizes, pIn, pOut, seed=0)


def test_disjointCliques():
    graph, _, groups = disjointCliques(4, 3)
    assert graph.edgeCount() == 3 * 6
    assert np.array_equal(groups, np.repeat([0, 1, 2], 4))
