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

from progle.exceptions import AlignmentError
from progle.graph import NodeIdMap


class Test_NodeIdMap():

    def test_when_labels_added_then_indices_follow_first_appearance(self):
        nodeIdMap = NodeIdMap()
        assert [nodeIdMap.add(l) for l in ("b", "a", "b", 7)] == [0, 1, 0, 2]
        assert nodeIdMap.labels() == ("b", "a", "7")
        assert nodeIdMap.index("7") == nodeIdMap.index(7) == 2
        assert nodeIdMap.label(1) == "a"
        assert len(nodeIdMap) == 3
        assert 7 in nodeIdMap

    def test_when_constructed_with_duplicates_then_ValueError_raised(self):
        with pytest.raises(ValueError):
            NodeIdMap(["a", "a"])

    def test_when_unknown_label_then_KeyError_raised(self):
        with pytest.raises(KeyError):
            NodeIdMap(["a"]).index("b")

    def test_equality_is_by_label_order(self):
        assert NodeIdMap(["a", "b"]) == NodeIdMap(["a", "b"])
        assert NodeIdMap(["a", "b"]) != NodeIdMap(["b", "a"])


class Test_NodeIdMap_alignmentOf():

    def test_when_permuted_then_internal_indices_are_returned(self):
        nodeIdMap = NodeIdMap(["a", "b", "c"])
        assert np.array_equal(nodeIdMap.alignmentOf(["c", "a", "b"]), [2, 0, 1])

    def test_when_labels_mismatch_then_AlignmentError_lists_them(self):
        nodeIdMap = NodeIdMap(["a", "b", "c"])
        with pytest.raises(AlignmentError) as excInfo:
            nodeIdMap.alignmentOf(["a", "b", "z"])
        assert excInfo.value.missing == ["c"]
        assert excInfo.value.extra == ["z"]

    def test_when_label_repeats_then_AlignmentError_raised(self):
        with pytest.raises(AlignmentError, match="repeated"):
            NodeIdMap(["a", "b"]).alignmentOf(["a", "b", "a"])
