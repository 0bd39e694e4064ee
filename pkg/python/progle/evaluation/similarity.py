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
from sklearn.preprocessing import normalize

from ..exceptions import ValidationError


__all__ = ['clusterSeparation']


def clusterSeparation(vectors, groups):
    """
    The mean cosine similarity of pairs of distinct nodes in the same
    group, minus that of pairs in different groups. Zero vectors have a
    cosine of 0 with everything.

    The pair sums are taken from per-group sums of the unit vectors,
    so the cost is linear in the number of nodes.

    @param vectors numpy.ndarray, n x d.

    @param groups array-like(int), The group of each node.

    @return float, In [-2, 2]. Positive when groups are separated.

    @exception progle.exceptions.ValidationError If there is no pair
    within a group, or no pair across groups.
    """
    units = normalize(np.asarray(vectors, dtype=np.float64), norm="l2", axis=1)
    groups = np.asarray(groups)
    if units.shape[0] != groups.shape[0]:
        raise ValidationError("Got %d vectors but %d group ids" % (units.shape[0], len(groups)))

    selfSum = float(np.einsum("ij,ij->", units, units))
    total = units.sum(axis=0)
    withinSum = 0.0
    withinPairs = 0
    for group in np.unique(groups):
        members = units[groups == group]
        groupTotal = members.sum(axis=0)
        withinSum += float(groupTotal @ groupTotal)
        withinPairs += len(members) * len(members)

    n = units.shape[0]
    acrossPairs = n * n - withinPairs
    withinPairs -= n
    if withinPairs <= 0 or acrossPairs <= 0:
        raise ValidationError("Separation needs pairs both within and across groups")

    within = (withinSum - selfSum) / withinPairs
    across = (float(total @ total) - withinSum) / acrossPairs
    return within - across
