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

"""
Graphs and loggers shared by the test modules.
"""

from unittest import mock

import networkx as nx
import numpy as np
import pytest

from progle.graph import SparseGraph
from progle.graph.synthetic import disjointCliques
from progle.logging import LoggerInterface


@pytest.fixture
def mock_logger():
    return mock.create_autospec(spec=LoggerInterface)


@pytest.fixture
def triangle():
    return SparseGraph.fromEdges(3, [0, 1, 2], [1, 2, 0])


@pytest.fixture
def path_graph():
    n = 20
    return SparseGraph.fromEdges(n, np.arange(n - 1), np.arange(1, n))


@pytest.fixture
def complete_graph():
    graph, _ = SparseGraph.fromNetworkx(nx.complete_graph(5))
    return graph


@pytest.fixture
def two_cliques():
    graph, _, groups = disjointCliques(10, 2)
    return graph, groups


def _randomGraph(seed, n=60, p=0.3):
    """
    A connected Erdos-Renyi graph. Its random-walk Laplacian spectrum
    stays well below 2.
    """
    nxGraph = nx.gnp_random_graph(n, p, seed=seed)
    while not nx.is_connected(nxGraph):
        seed += 1000
        nxGraph = nx.gnp_random_graph(n, p, seed=seed)
    graph, _ = SparseGraph.fromNetworkx(nxGraph)
    return graph


@pytest.fixture
def random_graph():
    return _randomGraph


@pytest.fixture
def dense_random_graph():
    return _randomGraph(7)
