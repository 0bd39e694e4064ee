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

from ..exceptions import AlignmentError, ParseError, ValidationError


__all__ = ['LabelSet']


class LabelSet(object):
    """
    The labels of each node, as sorted lists of integer label ids, for
    a fixed node indexing (usually that of a NodeIdMap or the rows of
    an embedding). Nodes may be unlabelled, in which case they take no
    part in evaluation.
    """

    def __init__(self, nodeLabels, labelNames=None):
        """
        @param nodeLabels list(iterable(int)), The label ids of each
        node.

        @param labelNames list(str) [None] The external name of each
        label id. Defaults to the ids themselves.
        """
        super(LabelSet, self).__init__()
        self.__nodeLabels = [tuple(sorted(set(int(l) for l in labels))) for labels in nodeLabels]

        vocabulary = 1 + max((l[-1] for l in self.__nodeLabels if l), default=-1)
        if labelNames is None:
            labelNames = [str(i) for i in range(vocabulary)]
        labelNames = tuple(str(n) for n in labelNames)
        if len(labelNames) < vocabulary:
            raise ValidationError("Label id %d has no name" % (vocabulary - 1))
        if any(l[0] < 0 for l in self.__nodeLabels if l):
            raise ValidationError("Label ids must be >= 0")
        self.__labelNames = labelNames

    @classmethod
    def fromFile(cls, path, nodeLabels):
        """
        Reads a label file of "node label1 label2 ..." lines. Lines
        starting with '#' are comments, and repeated lines for a node
        are merged. Label ids are assigned in order of first
        appearance.

        @param nodeLabels list(str), The label of each node, in the
        indexing the LabelSet should use, eg. the rows of an embedding.

        @exception progle.exceptions.ParseError If a line names no
        label.

        @exception progle.exceptions.AlignmentError If a line names a
        node that isn't in nodeLabels.
        """
        nodeIndex = {str(label): i for i, label in enumerate(nodeLabels)}
        perNode = [set() for _ in nodeIndex]
        labelIds = {}
        unknown = []

        with open(path, "r", encoding="utf-8") as f:
            for lineNumber, line in enumerate(f, start=1):
                tokens = line.split()
                if not tokens or tokens[0].startswith("#"):
                    continue
                if len(tokens) < 2:
                    raise ParseError("Node '%s' has no labels" % tokens[0], path, lineNumber)
                node = nodeIndex.get(tokens[0])
                if node is None:
                    unknown.append(tokens[0])
                    continue
                for name in tokens[1:]:
                    perNode[node].add(labelIds.setdefault(name, len(labelIds)))

        if unknown:
            raise AlignmentError(
                "Label file %s names nodes that are not embedded" % path, extra=unknown)

        names = [None] * len(labelIds)
        for name, labelId in labelIds.items():
            names[labelId] = name
        return cls(perNode, names)

    def nodeCount(self):
        return len(self.__nodeLabels)

    def vocabularySize(self):
        return len(self.__labelNames)

    def labelNames(self):
        return self.__labelNames

    def labelsOf(self, node):
        """
        @return tuple(int), The sorted label ids of a node.
        """
        return self.__nodeLabels[node]

    def labelledNodes(self):
        """
        @return numpy.ndarray, The ascending ids of nodes with at least
        one label.
        """
        return np.array([i for i, l in enumerate(self.__nodeLabels) if l], dtype=np.int64)

    def labelCounts(self, nodes):
        """
        @return numpy.ndarray, The number of labels of each node given.
        """
        return np.array([len(self.__nodeLabels[i]) for i in nodes], dtype=np.int64)

    def subset(self, nodes):
        """
        @return list(tuple(int)), The labels of each node given.
        """
        return [self.__nodeLabels[i] for i in nodes]

    def save(self, path, nodeLabels):
        """
        Writes the label file form read by @ref fromFile, one line per
        labelled node.

        @param nodeLabels list(str), The external label of each node.
        """
        with open(path, "w", encoding="utf-8") as f:
            for node in self.labelledNodes().tolist():
                names = (self.__labelNames[l] for l in self.__nodeLabels[node])
                f.write("%s %s\n" % (nodeLabels[node], " ".join(names)))

    def primaryGroups(self):
        """
        @return tuple(numpy.ndarray, numpy.ndarray) The labelled nodes,
        and the smallest label id of each, for use as a single group
        assignment.
        """
        nodes = self.labelledNodes()
        return nodes, np.array([self.__nodeLabels[i][0] for i in nodes], dtype=np.int64)
