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
# @namespace progle.spectral
# The band-pass modulator, its Chebyshev expansion over the scaled
# Laplacian, and the propagation of embeddings through it.
#
from .FilterSpec import FilterSpec, besselI, chebyshevCoefficients
from .ScaledLaplacianOp import ScaledLaplacianOp, estimateLambdaMax
from .propagation import applyModulatedLaplacian, enhance, propagate, propagateLinear
