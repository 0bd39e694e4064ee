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

from ..exceptions import AlignmentError


__all__ = ['NodeIdMap']


class NodeIdMap(object):
    """
    A bijection between external node labels and the dense internal
    indices 0..n-1 used by every matrix. Labels are held as strings, so
    the integer 7 and the string "7" name the same node.

    Indices are handed out in order of first appearance, which keeps
    the mapping stable for a given input file.
    """

    def __init__(self, labels=()):
        super(NodeIdMap, self).__init__()
        self.__labels = []
        self.__indices = {}
        for label in labels:
            if self.add(label) != len(self.__labels) - 1:
                raise ValueError("Duplicate node label '%s'" % label)

    def add(self, label):
        """
        Registers the label if it is new.

        @return int, The internal index of the label.
        """
        label = str(label)
        index = self.__indices.get(label)
        if index is None:
            index = len(self.__labels)
            self.__indices[label] = index
            self.__labels.append(label)
        return index

    def index(self, label):
        """
        @exception KeyError If the label is unknown.
        """
        return self.__indices[str(label)]

    def label(self, index):
        return self.__labels[index]

    def labels(self):
        """
        @return tuple(str), The labels in internal index order.
        """
        return tuple(self.__labels)

    def alignmentOf(self, labels):
        """
        Maps the supplied labels, which must name exactly the nodes of
        this map, onto internal indices.

        @param labels list(str), eg. the row labels of an embedding.

        @return numpy.ndarray, The internal index of each label, in
        the order given.

        @exception progle.exceptions.AlignmentError If any node is
        unlabelled, or any label is unknown or repeated.
        """
        labels = [str(l) for l in labels]
        extra = [l for l in labels if l not in self.__indices]
        present = set(labels)
        missing = [l for l in self.__labels if l not in present]
        if missing or extra or len(present) != len(labels):
            message = "Labels do not align with the %d graph nodes" % len(self.__labels)
            if len(present) != len(labels):
                message += " (repeated labels)"
            raise AlignmentError(message, missing=missing, extra=extra)
        return np.fromiter((self.__indices[l] for l in labels), dtype=np.int64, count=len(labels))

    def __len__(self):
        return len(self.__labels)

    def __contains__(self, label):
        return str(label) in self.__indices

    def __eq__(self, other):
        if not isinstance(other, NodeIdMap):
            return NotImplemented
        return self.__labels == list(other.labels())

    def __repr__(self):
        return "NodeIdMap(%d nodes)" % len(self.__labels)
